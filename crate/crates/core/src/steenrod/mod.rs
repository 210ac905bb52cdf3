//! The first reduced power 𝒫¹ on classifying-space cohomology.
//!
//! Three routes are available and are checked against each other:
//! power sums through Newton's identities ([`RootAction`]), explicit
//! degree-2 roots ([`roots`]), and the closed mod-p Wu formulas ([`wu`]).
//! For BE8 and BE6 the operation is pulled back from BSO(15)
//! ([`exceptional`]).

pub mod exceptional;
pub mod roots;
pub mod wu;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::graded::{GradedAlgebra, Monomial, Polynomial};

pub use exceptional::{p1_exceptional, ExceptionalGroup};
pub use roots::{p1_generator_explicit, symmetric_to_basis};
pub use wu::{p1_wu_chern, p1_wu_pontrjagin};

/// Splitting-principle model of a classical classifying space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootModel {
    /// `c_k = e_k(t_1..t_n)`; `special` imposes `e_1 = 0`.
    Chern { n: u32, special: bool },
    /// `p_k = e_k(u_1^2..u_n^2)`.
    Pontrjagin { n: u32 },
    /// As `Pontrjagin`, plus `e_n = u_1...u_n` replacing `p_n = e_n^2`.
    PontrjaginEuler { n: u32 },
}

impl RootModel {
    pub fn root_count(self) -> u32 {
        match self {
            RootModel::Chern { n, .. }
            | RootModel::Pontrjagin { n }
            | RootModel::PontrjaginEuler { n } => n,
        }
    }

    /// Half the degree of one "variable" `v_i` of the symmetric functions:
    /// 1 for Chern roots, 2 for squared roots.
    fn weight(self) -> u32 {
        match self {
            RootModel::Chern { .. } => 1,
            _ => 2,
        }
    }
}

/// Anything that knows 𝒫¹ on the generators of one algebra.
pub trait P1Action {
    fn algebra(&self) -> &Arc<GradedAlgebra>;
    fn p1_generator(&self, index: usize) -> Result<Polynomial>;
}

/// Extends 𝒫¹ from generators by additivity and the Cartan rule
/// `𝒫¹(ab) = 𝒫¹(a) b + a 𝒫¹(b)`.
pub fn p1_derivation(action: &dyn P1Action, poly: &Polynomial) -> Result<Polynomial> {
    let alg = action.algebra();
    if !crate::graded::same_algebra(alg, poly.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut gens: HashMap<usize, Polynomial> = HashMap::new();
    let mut out = Polynomial::zero(alg);
    for (m, c) in poly.raw_terms() {
        for (g, e) in m.iter() {
            if let std::collections::hash_map::Entry::Vacant(e) = gens.entry(g) {
                e.insert(action.p1_generator(g)?);
            }
            let rest = m
                .checked_div(&Monomial::generator(g))
                .expect("generator divides");
            let term = gens[&g].mul_monomial(&rest, c * e as u64 % alg.modulus().value());
            out = out.add(&term)?;
        }
    }
    Ok(out)
}

/// 𝒫¹ on a classical algebra through its root model, computed with
/// power sums: `𝒫¹ e_k(v) = w Σ_j (-1)^j s_{r+j}(v) e_{k-1-j}(v)` where
/// `𝒫¹ v = w v^r` on each variable (`w = 1, r = p` for Chern roots,
/// `w = 2, r = (p+1)/2` for squared roots).
pub struct RootAction {
    model: RootModel,
    algebra: Arc<GradedAlgebra>,
    elementary: Vec<Polynomial>,
    euler: Option<usize>,
    power_sums: Mutex<Vec<Polynomial>>,
}

impl std::fmt::Debug for RootAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RootAction({:?}, {})", self.model, self.algebra.label())
    }
}

impl RootAction {
    /// `prefix` names the classes: `c` for `c_k`, `p` or `q` for Pontrjagin
    /// classes. The Euler class is always `e{n}`.
    pub fn new(model: RootModel, algebra: &Arc<GradedAlgebra>, prefix: &str) -> Result<RootAction> {
        algebra.modulus().require_odd()?;
        let n = model.root_count();
        let mut elementary = vec![Polynomial::one(algebra)];
        let mut euler = None;
        for k in 1..=n {
            let e = match model {
                RootModel::Chern { special: true, .. } if k == 1 => Polynomial::zero(algebra),
                RootModel::PontrjaginEuler { .. } if k == n => {
                    let idx = algebra.require(&format!("e{n}"))?;
                    euler = Some(idx);
                    Polynomial::generator(algebra, idx).pow(2)
                }
                _ => Polynomial::named(algebra, &format!("{prefix}{k}"))?,
            };
            elementary.push(e);
        }
        let expected = match model {
            RootModel::Chern { special: true, n } => n as usize - 1,
            _ => n as usize,
        };
        if algebra.len() != expected {
            return Err(Error::BadPresentation(format!(
                "{} does not match root model {:?}",
                algebra, model
            )));
        }
        Ok(RootAction {
            model,
            algebra: Arc::clone(algebra),
            elementary,
            euler,
            power_sums: Mutex::new(vec![Polynomial::constant(algebra, n as i64)]),
        })
    }

    pub fn model(&self) -> RootModel {
        self.model
    }

    fn e(&self, k: i64) -> Polynomial {
        if k < 0 || k as usize >= self.elementary.len() {
            Polynomial::zero(&self.algebra)
        } else {
            self.elementary[k as usize].clone()
        }
    }

    /// Power sum `s_m(v)` via Newton's identities.
    pub fn power_sum(&self, m: u32) -> Polynomial {
        let mut cache = self.power_sums.lock().expect("power sum cache");
        while cache.len() <= m as usize {
            let j = cache.len() as i64;
            let mut s = self.e(j).scale_int(if j % 2 == 1 { j } else { -j });
            for i in 1..j {
                let ei = self.e(i);
                if ei.is_zero() {
                    continue;
                }
                let term = ei.mul(&cache[(j - i) as usize]).expect("same algebra");
                s = if i % 2 == 1 {
                    s.add(&term)
                } else {
                    s.sub(&term)
                }
                .expect("same algebra");
            }
            cache.push(s);
        }
        cache[m as usize].clone()
    }

    /// `𝒫¹ e_k(v)` expressed in the algebra.
    fn p1_elementary(&self, k: u32) -> Polynomial {
        let p = self.algebra.modulus().value() as u32;
        let (w, r) = match self.model.weight() {
            1 => (1, p),
            _ => (2, p.div_ceil(2)),
        };
        let mut acc = Polynomial::zero(&self.algebra);
        for j in 0..k {
            let e = self.e(k as i64 - 1 - j as i64);
            if e.is_zero() {
                continue;
            }
            let term = self.power_sum(r + j).mul(&e).expect("same algebra");
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
            .expect("same algebra");
        }
        acc.scale_int(w)
    }
}

impl P1Action for RootAction {
    fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    fn p1_generator(&self, index: usize) -> Result<Polynomial> {
        if Some(index) == self.euler {
            let p = self.algebra.modulus().value() as u32;
            let e = Polynomial::generator(&self.algebra, index);
            return e.mul(&self.power_sum((p - 1) / 2));
        }
        let name = self.algebra.name_of(index);
        let k: u32 = name
            .trim_start_matches(|c: char| !c.is_ascii_digit())
            .parse()
            .map_err(|_| Error::UnsupportedGenerator(name.to_string()))?;
        Ok(self.p1_elementary(k))
    }
}

/// 𝒫¹ of one generator, by name, through the root model.
pub fn p1_generator_roots(action: &RootAction, class: &str) -> Result<Polynomial> {
    action.p1_generator(action.algebra().require(class)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Prime;

    fn su(n: u32, p: u64) -> RootAction {
        let a = GradedAlgebra::indexed(format!("BSU({n})"), "c", 2..=n, 2, Prime::new(p).unwrap())
            .unwrap();
        RootAction::new(RootModel::Chern { n, special: true }, &a, "c").unwrap()
    }

    fn so_odd(n: u32, p: u64) -> RootAction {
        let a = GradedAlgebra::indexed(
            format!("BSO({})", 2 * n + 1),
            "p",
            1..=n,
            4,
            Prime::new(p).unwrap(),
        )
        .unwrap();
        RootAction::new(RootModel::Pontrjagin { n }, &a, "p").unwrap()
    }

    #[test]
    fn chern_examples() {
        let a = su(2, 3);
        assert_eq!(p1_generator_roots(&a, "c2").unwrap().to_string(), "c2^2");
        let b = su(3, 5);
        assert_eq!(
            p1_generator_roots(&b, "c2").unwrap(),
            Polynomial::parse(b.algebra(), "2*c2^3 + 2*c3^2").unwrap()
        );
    }

    #[test]
    fn pontrjagin_example_and_derivation() {
        let a = so_odd(1, 3);
        let p1 = Polynomial::parse(a.algebra(), "p1").unwrap();
        assert_eq!(
            p1_derivation(&a, &p1).unwrap(),
            Polynomial::parse(a.algebra(), "2*p1^2").unwrap()
        );
        let sq = p1.pow(2);
        assert_eq!(
            p1_derivation(&a, &sq).unwrap(),
            Polynomial::parse(a.algebra(), "p1^3").unwrap()
        );
        assert!(p1_derivation(&a, &Polynomial::one(a.algebra()))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn even_prime_is_refused() {
        let a = GradedAlgebra::indexed("BSU(3)", "c", 2..=3, 2, Prime::new(2).unwrap()).unwrap();
        assert_eq!(
            RootAction::new(
                RootModel::Chern {
                    n: 3,
                    special: true
                },
                &a,
                "c"
            )
            .unwrap_err(),
            Error::EvenPrime
        );
    }

    #[test]
    fn degree_shift() {
        for p in [3, 5, 7, 11] {
            let a = su(5, p);
            for k in 2..=5u32 {
                let v = p1_generator_roots(&a, &format!("c{k}")).unwrap();
                v.require_degree(2 * k + 2 * (p as u32 - 1)).unwrap();
            }
        }
    }

    proptest::proptest! {
        // 𝒫¹ is a derivation on products of generators.
        #[test]
        fn cartan_on_products(e in proptest::collection::vec(0u32..3, 3), f in proptest::collection::vec(0u32..3, 3), pi in 0usize..4) {
            let a = su(4, [3u64, 5, 7, 11][pi]);
            let mono = |v: &[u32]| Polynomial::term(a.algebra(), crate::graded::Monomial::from_dense(v), 1);
            let (x, y) = (mono(&e), mono(&f));
            let lhs = p1_derivation(&a, &x.mul(&y).unwrap()).unwrap();
            let rhs = p1_derivation(&a, &x)
                .unwrap()
                .mul(&y)
                .unwrap()
                .add(&x.mul(&p1_derivation(&a, &y).unwrap()).unwrap())
                .unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
