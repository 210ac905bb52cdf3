//! Explicit splitting-principle computation: expand a class in degree-2
//! roots, apply `𝒫¹t = t^p` as a derivation, and convert back with the
//! fundamental theorem of symmetric polynomials.
//!
//! Exponential in the number of roots; used as an independent check on
//! small models.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::RootModel;
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::graded::{GradedAlgebra, Monomial, Polynomial};

type Dense = BTreeMap<Vec<u32>, u64>;

fn add_into(acc: &mut Dense, key: Vec<u32>, c: u64, p: u64) {
    if c.is_multiple_of(p) {
        return;
    }
    let slot = acc.entry(key.clone()).or_insert(0);
    *slot = (*slot + c) % p;
    if *slot == 0 {
        acc.remove(&key);
    }
}

fn dense_mul(a: &Dense, b: &Dense, p: u64) -> Dense {
    let mut out = Dense::new();
    for (ka, &ca) in a {
        for (kb, &cb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            add_into(&mut out, key, ca * cb % p, p);
        }
    }
    out
}

fn dense_one(n: usize) -> Dense {
    Dense::from([(vec![0; n], 1)])
}

/// `e_k(v_1..v_n)` with each `v_i` a single variable.
fn elementary(n: usize, k: usize) -> Dense {
    let mut out = Dense::new();
    let mut pick = vec![0u32; n];
    fn go(start: usize, left: usize, pick: &mut Vec<u32>, out: &mut Dense) {
        if left == 0 {
            out.insert(pick.clone(), 1);
            return;
        }
        for i in start..pick.len() {
            pick[i] = 1;
            go(i + 1, left - 1, pick, out);
            pick[i] = 0;
        }
    }
    go(0, k, &mut pick, &mut out);
    out
}

fn to_dense(poly: &Polynomial, n: usize) -> Dense {
    poly.raw_terms()
        .map(|(m, c)| ((0..n).map(|i| m.exponent(i)).collect(), c))
        .collect()
}

fn from_dense(alg: &Arc<GradedAlgebra>, d: &Dense) -> Polynomial {
    let p = alg.modulus();
    Polynomial::from_terms(
        alg,
        d.iter()
            .map(|(k, &c)| (Monomial::from_dense(k), p.element(c as i64))),
    )
}

/// The algebra of roots: `t1..tn` for Chern models, `u1..un` otherwise,
/// all in degree 2.
pub fn root_algebra(model: RootModel, p: Prime) -> Result<Arc<GradedAlgebra>> {
    let prefix = match model {
        RootModel::Chern { .. } => "t",
        _ => "u",
    };
    GradedAlgebra::indexed(
        format!("roots({prefix},{})", model.root_count()),
        prefix,
        1..=model.root_count(),
        2,
        p,
    )
}

fn is_symmetric(d: &Dense, n: usize) -> bool {
    (0..n.saturating_sub(1)).all(|i| {
        d.iter().all(|(k, &c)| {
            let mut s = k.clone();
            s.swap(i, i + 1);
            d.get(&s) == Some(&c)
        })
    })
}

/// Writes a symmetric polynomial in `v_1..v_n` in the elementary basis;
/// keys of the result are exponent vectors of `(e_1, ..., e_n)`.
fn elementary_decomposition(mut f: Dense, n: usize, p: u64) -> Result<Dense> {
    let mut powers: BTreeMap<(usize, u32), Dense> = BTreeMap::new();
    let mut out = Dense::new();
    while let Some((lead, &c)) = f.last_key_value() {
        let lead = lead.clone();
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let exps: Vec<u32> = (0..n)
            .map(|k| lead[k] - if k + 1 < n { lead[k + 1] } else { 0 })
            .collect();
        let mut prod = dense_one(n);
        for (k, &a) in exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let pw = powers.entry((k + 1, a)).or_insert_with(|| {
                let e = elementary(n, k + 1);
                (0..a).fold(dense_one(n), |acc, _| dense_mul(&acc, &e, p))
            });
            prod = dense_mul(&prod, pw, p);
        }
        for (key, v) in prod {
            add_into(&mut f, key, (p - v) * c % p, p);
        }
        add_into(&mut out, exps, c, p);
    }
    Ok(out)
}

/// Expresses a symmetric polynomial in the roots through the model's
/// generators in `target` (`prefix` names the classes, `e{n}` the Euler
/// class).
pub fn symmetric_to_basis(
    s: &Polynomial,
    model: RootModel,
    target: &Arc<GradedAlgebra>,
    prefix: &str,
) -> Result<Polynomial> {
    let n = model.root_count() as usize;
    let p = target.modulus().value();
    let dense = to_dense(s, n);
    if !is_symmetric(&dense, n) {
        return Err(Error::NotSymmetric);
    }
    // Split into the part that is a polynomial in v_i = u_i^2 and, for the
    // Euler model, the part divisible by u_1...u_n.
    let (even, odd) = match model {
        RootModel::Chern { .. } => (dense, Dense::new()),
        _ => {
            let mut even = Dense::new();
            let mut odd = Dense::new();
            for (k, c) in dense {
                if k.iter().all(|e| e % 2 == 0) {
                    even.insert(k.iter().map(|e| e / 2).collect(), c);
                } else if matches!(model, RootModel::PontrjaginEuler { .. })
                    && k.iter().all(|e| e % 2 == 1)
                {
                    odd.insert(k.iter().map(|e| (e - 1) / 2).collect(), c);
                } else {
                    return Err(Error::NotInSubring(format!(
                        "term with root exponents {k:?}"
                    )));
                }
            }
            (even, odd)
        }
    };
    let image_of = |k: usize| -> Result<Polynomial> {
        match model {
            RootModel::Chern { special: true, .. } if k == 1 => Ok(Polynomial::zero(target)),
            RootModel::PontrjaginEuler { n } if k == n as usize => {
                Ok(Polynomial::named(target, &format!("e{n}"))?.pow(2))
            }
            _ => Polynomial::named(target, &format!("{prefix}{k}")),
        }
    };
    let gens: Vec<Polynomial> = (1..=n).map(image_of).collect::<Result<_>>()?;
    let assemble = |d: Dense| -> Result<Polynomial> {
        let mut acc = Polynomial::zero(target);
        for (exps, c) in elementary_decomposition(d, n, p)? {
            let mut term = Polynomial::constant(target, c as i64);
            for (k, &a) in exps.iter().enumerate() {
                if a > 0 {
                    term = term.mul(&gens[k].pow(a))?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    };
    let mut out = assemble(even)?;
    if !odd.is_empty() {
        let n = model.root_count();
        let euler = Polynomial::named(target, &format!("e{n}"))?;
        out = out.add(&assemble(odd)?.mul(&euler)?)?;
    }
    Ok(out)
}

/// A generator of the model's algebra written in the roots.
pub fn expand_in_roots(
    model: RootModel,
    roots: &Arc<GradedAlgebra>,
    class: &str,
) -> Result<Polynomial> {
    let n = model.root_count() as usize;
    let k: usize = class
        .trim_start_matches(|c: char| !c.is_ascii_digit())
        .parse()
        .map_err(|_| Error::UnsupportedGenerator(class.to_string()))?;
    if k == 0 || k > n {
        return Err(Error::UnsupportedGenerator(class.to_string()));
    }
    let d = match model {
        RootModel::Chern { .. } => elementary(n, k),
        RootModel::PontrjaginEuler { .. } if class.starts_with('e') => elementary(n, n),
        _ => elementary(n, k)
            .into_iter()
            .map(|(key, c)| (key.iter().map(|e| 2 * e).collect(), c))
            .collect(),
    };
    Ok(from_dense(roots, &d))
}

/// 𝒫¹ at the root level: the derivation with `𝒫¹t = t^p` on each root.
pub fn p1_on_roots(poly: &Polynomial) -> Polynomial {
    let alg = poly.algebra();
    let p = alg.modulus().value();
    let mut out = Polynomial::zero(alg);
    for (m, c) in poly.raw_terms() {
        for (g, e) in m.iter() {
            let shifted = m.mul(&Monomial::power(g, p as u32 - 1));
            out = out
                .add(&Polynomial::term(alg, shifted, (c * e as u64 % p) as i64))
                .expect("same algebra");
        }
    }
    out
}

/// 𝒫¹ of a generator through explicit roots.
pub fn p1_generator_explicit(
    model: RootModel,
    target: &Arc<GradedAlgebra>,
    prefix: &str,
    class: &str,
) -> Result<Polynomial> {
    target.modulus().require_odd()?;
    target.require(class)?;
    let roots = root_algebra(model, target.modulus())?;
    let expanded = expand_in_roots(model, &roots, class)?;
    symmetric_to_basis(&p1_on_roots(&expanded), model, target, prefix)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn two_root_example() {
        let model = RootModel::Chern {
            n: 2,
            special: true,
        };
        let roots = root_algebra(model, prime(3)).unwrap();
        let bsu2 = GradedAlgebra::indexed("BSU(2)", "c", 2..=2, 2, prime(3)).unwrap();
        let s = Polynomial::parse(&roots, "t1^3*t2 + t1*t2^3").unwrap();
        assert_eq!(
            symmetric_to_basis(&s, model, &bsu2, "c")
                .unwrap()
                .to_string(),
            "c2^2"
        );
        let e2 = Polynomial::parse(&roots, "t1*t2").unwrap();
        assert_eq!(
            symmetric_to_basis(&e2, model, &bsu2, "c")
                .unwrap()
                .to_string(),
            "c2"
        );
    }

    #[test]
    fn euler_square() {
        let model = RootModel::PontrjaginEuler { n: 2 };
        let roots = root_algebra(model, prime(5)).unwrap();
        let bso4 = GradedAlgebra::new(
            "BSO(4)",
            [("p1".to_string(), 4), ("e2".to_string(), 4)],
            prime(5),
        )
        .unwrap();
        let s = Polynomial::parse(&roots, "u1^2*u2^2").unwrap();
        assert_eq!(
            symmetric_to_basis(&s, model, &bso4, "p")
                .unwrap()
                .to_string(),
            "e2^2"
        );
        let odd = Polynomial::parse(&roots, "u1^3*u2 + u1*u2^3").unwrap();
        assert_eq!(
            symmetric_to_basis(&odd, model, &bso4, "p")
                .unwrap()
                .to_string(),
            "p1*e2"
        );
    }

    #[test]
    fn failures_are_typed() {
        let model = RootModel::Pontrjagin { n: 2 };
        let roots = root_algebra(model, prime(5)).unwrap();
        let bso5 = GradedAlgebra::indexed("BSO(5)", "p", 1..=2, 4, prime(5)).unwrap();
        let lopsided = Polynomial::parse(&roots, "u1^2").unwrap();
        assert_eq!(
            symmetric_to_basis(&lopsided, model, &bso5, "p").unwrap_err(),
            Error::NotSymmetric
        );
        let odd = Polynomial::parse(&roots, "u1*u2").unwrap();
        assert!(matches!(
            symmetric_to_basis(&odd, model, &bso5, "p"),
            Err(Error::NotInSubring(_))
        ));
    }

    #[test]
    fn unstable_axiom_on_roots() {
        for p in [3u64, 5, 7] {
            let roots = root_algebra(
                RootModel::Chern {
                    n: 3,
                    special: false,
                },
                prime(p),
            )
            .unwrap();
            for i in 0..3 {
                let t = Polynomial::generator(&roots, i);
                assert_eq!(p1_on_roots(&t), t.pow(p as u32));
            }
        }
    }

    #[test]
    fn bso3_example() {
        let bso3 = GradedAlgebra::indexed("BSO(3)", "p", 1..=1, 4, prime(3)).unwrap();
        let v = p1_generator_explicit(RootModel::Pontrjagin { n: 1 }, &bso3, "p", "p1").unwrap();
        assert_eq!(v.to_string(), "2*p1^2");
    }
}
