//! Closed mod-p Wu formulas for 𝒫¹ of Chern and Pontrjagin classes.
//!
//! Each exponent tuple contributes
//! `sign * (N-1)!/Π i_j! * (a - S/(N-1))` with `N = Σ i_j`. For `N >= 2`
//! this is evaluated as the exact rational `(N-2)!/Π i_j! * (a(N-1) - S)`;
//! for `N = 1` the bracket is `0/0` and the term is taken to be `a`
//! (matches the linear term of the Newton expansion).
//!
//! The lead `a` is the integer `k+p-1` (Pontrjagin: `2k+p-1`), not its
//! residue `k-1`. The two agree mod p only when `(N-1)!/Π i_j!` is
//! p-integral; e.g. `c2^3` in 𝒫¹c4 at p = 3 needs the integral lead.

use num_bigint::BigInt;
use num_traits::One;

use crate::catalog::algebras;
use crate::error::{Error, Result};
use crate::fp::{big_rational_to_fp, Prime};
use crate::graded::{Monomial, Polynomial};

/// All `(i_lo, ..., i_hi)` with `Σ j * i_j = total`.
pub(crate) fn weighted_tuples(lo: u32, hi: u32, total: u32) -> Vec<Vec<u32>> {
    fn go(j: u32, lo: u32, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j < lo {
            if remaining == 0 {
                let mut t = cur.clone();
                t.reverse();
                out.push(t);
            }
            return;
        }
        for e in 0..=remaining / j {
            cur.push(e);
            go(j - 1, lo, remaining - e * j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if hi >= lo {
        go(hi, lo, total, &mut Vec::new(), &mut out);
    }
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// One Wu term as a reduced rational `(num, den)`.
/// `lead` is `k+p-1` (Chern) or `2k+p-1` (Pontrjagin); `s` is the bracket sum.
fn wu_term(tuple: &[u32], lead: i64, s: i64) -> (BigInt, BigInt) {
    let n: u32 = tuple.iter().sum();
    if n == 1 {
        return (BigInt::from(lead), BigInt::one());
    }
    let den = tuple
        .iter()
        .fold(BigInt::one(), |acc, &i| acc * factorial(i));
    let num = factorial(n - 2) * BigInt::from(lead * (n as i64 - 1) - s);
    (num, den)
}

/// 𝒫¹c_k in H*(BSU(n)) by the mod-p Wu formula.
pub fn p1_wu_chern(n: u32, k: u32, p: Prime) -> Result<Polynomial> {
    p.require_odd()?;
    if k < 2 || k > n {
        return Err(Error::BadParameter(format!(
            "c{k} is not a generator of BSU({n})"
        )));
    }
    let alg = algebras::bsu(n, p)?;
    let pv = p.value() as u32;
    let mut out = Polynomial::zero(&alg);
    for tuple in weighted_tuples(2, n, k + pv - 1) {
        let count: u32 = tuple.iter().sum();
        let s: i64 = (2..k)
            .map(|j| (k + pv - 1 - j) as i64 * tuple[(j - 2) as usize] as i64)
            .sum();
        let (num, den) = wu_term(&tuple, (k + pv) as i64 - 1, s);
        let signed = if count.is_multiple_of(2) { -num } else { num };
        let c = big_rational_to_fp(&signed, &den, p, || {
            format!("Wu term {tuple:?} of P^1 c{k} in BSU({n})")
        })?;
        let m = Monomial::from_pairs(
            tuple
                .iter()
                .enumerate()
                .map(|(i, &e)| (alg.require(&format!("c{}", i + 2)).expect("generator"), e)),
        );
        out = out.add(&Polynomial::term(&alg, m, c.residue() as i64))?;
    }
    Ok(out)
}

/// 𝒫¹p_k in H*(BSO(2n+1)) by the mod-p Wu formula for Pontrjagin classes.
pub fn p1_wu_pontrjagin(n: u32, k: u32, p: Prime) -> Result<Polynomial> {
    p.require_odd()?;
    if k < 1 || k > n {
        return Err(Error::BadParameter(format!(
            "p{k} is not a generator of BSO({})",
            2 * n + 1
        )));
    }
    let alg = algebras::bso_odd(n, p)?;
    let pv = p.value() as u32;
    let half = (pv - 1) / 2;
    let mut out = Polynomial::zero(&alg);
    for tuple in weighted_tuples(1, n, k + half) {
        let count: u32 = tuple.iter().sum();
        let s: i64 = (1..k)
            .map(|j| (2 * k + pv - 1 - 2 * j) as i64 * tuple[(j - 1) as usize] as i64)
            .sum();
        let (num, den) = wu_term(&tuple, (2 * k + pv) as i64 - 1, s);
        let signed = if (count + half + 1) % 2 == 1 {
            -num
        } else {
            num
        };
        let c = big_rational_to_fp(&signed, &den, p, || {
            format!("Wu term {tuple:?} of P^1 p{k} in BSO({})", 2 * n + 1)
        })?;
        let m = Monomial::from_pairs(tuple.iter().enumerate().map(|(i, &e)| (i, e)));
        out = out.add(&Polynomial::term(&alg, m, c.residue() as i64))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn tuples_cover_the_constraint() {
        let t = weighted_tuples(2, 3, 6);
        assert_eq!(t, vec![vec![3, 0], vec![0, 2]]);
        assert!(weighted_tuples(2, 3, 1).is_empty());
    }

    #[test]
    fn small_chern_case() {
        let v = p1_wu_chern(3, 2, p(5)).unwrap();
        assert_eq!(
            v,
            Polynomial::parse(v.algebra(), "2*c2^3 + 2*c3^2").unwrap()
        );
    }

    #[test]
    fn su7_and_su6_entries() {
        let v = p1_wu_chern(7, 2, p(13)).unwrap();
        let c7 = v.algebra().require("c7").unwrap();
        assert_eq!(v.coefficient_of(&Monomial::power(c7, 2)).residue(), 6);
        let w = p1_wu_chern(6, 2, p(7)).unwrap();
        let m = Monomial::parse(w.algebra(), "c5*c3").unwrap();
        assert_eq!(w.coefficient_of(&m).residue(), 6);
    }

    #[test]
    fn pontrjagin_entries() {
        let v = p1_wu_pontrjagin(1, 1, p(3)).unwrap();
        assert_eq!(v.to_string(), "2*p1^2");
        let w = p1_wu_pontrjagin(7, 2, p(11)).unwrap();
        assert_eq!(w.coefficient_of(&Monomial::generator(6)).residue(), 8);
        let z = p1_wu_pontrjagin(7, 1, p(17)).unwrap();
        let m = Monomial::generator(6).mul(&Monomial::generator(1));
        assert_eq!(z.coefficient_of(&m).residue(), 16);
    }

    #[test]
    fn integral_lead_when_factorials_carry_p() {
        // c2^3 has 3! in the denominator at p = 3; the residue lead k-1 = 3
        // would leave a spurious term.
        let v = p1_wu_chern(4, 4, p(3)).unwrap();
        assert_eq!(v, Polynomial::parse(v.algebra(), "c4*c2").unwrap());
        let w = p1_wu_pontrjagin(2, 2, p(3)).unwrap();
        assert_eq!(w, Polynomial::parse(w.algebra(), "2*p2*p1").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(p1_wu_chern(3, 2, p(2)).unwrap_err(), Error::EvenPrime);
        assert!(matches!(
            p1_wu_chern(3, 1, p(5)),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            p1_wu_pontrjagin(3, 4, p(5)),
            Err(Error::BadParameter(_))
        ));
    }

    proptest::proptest! {
        #![proptest_config(proptest::test_runner::Config::with_cases(48))]

        #[test]
        fn wu_matches_roots(n in 2u32..8, k in 2u32..8, pi in 0usize..6) {
            proptest::prop_assume!(k <= n);
            let q = p([3u64, 5, 7, 11, 13, 17][pi]);
            let wu = p1_wu_chern(n, k, q).unwrap();
            let a = wu.algebra().clone();
            let act = crate::steenrod::RootAction::new(crate::steenrod::RootModel::Chern { n, special: true }, &a, "c").unwrap();
            let roots = crate::steenrod::p1_generator_roots(&act, &format!("c{k}")).unwrap();
            proptest::prop_assert_eq!(wu, roots);
        }
    }
}
