use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{same_algebra, GeneratorIdeal, GradedAlgebra, Monomial};
use crate::error::{Error, Result};
use crate::fp::{add_mod, rational_to_fp, sub_mod, FpElement};

/// Result of a homogeneity query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Mixed,
}

/// Element of a [`GradedAlgebra`]; no zero coefficients are stored.
#[derive(Clone)]
pub struct Polynomial {
    algebra: Arc<GradedAlgebra>,
    terms: BTreeMap<Monomial, u64>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({}: {})", self.algebra.label(), self)
    }
}

impl Polynomial {
    pub fn zero(algebra: &Arc<GradedAlgebra>) -> Polynomial {
        Polynomial {
            algebra: Arc::clone(algebra),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Arc<GradedAlgebra>) -> Polynomial {
        Polynomial::term(algebra, Monomial::one(), 1)
    }

    pub fn constant(algebra: &Arc<GradedAlgebra>, c: i64) -> Polynomial {
        Polynomial::term(algebra, Monomial::one(), c)
    }

    pub fn generator(algebra: &Arc<GradedAlgebra>, index: usize) -> Polynomial {
        Polynomial::term(algebra, Monomial::generator(index), 1)
    }

    pub fn named(algebra: &Arc<GradedAlgebra>, name: &str) -> Result<Polynomial> {
        Ok(Polynomial::generator(algebra, algebra.require(name)?))
    }

    pub fn term(algebra: &Arc<GradedAlgebra>, m: Monomial, c: i64) -> Polynomial {
        let r = algebra.modulus().reduce(c);
        let mut terms = BTreeMap::new();
        if r != 0 {
            terms.insert(m, r);
        }
        Polynomial {
            algebra: Arc::clone(algebra),
            terms,
        }
    }

    pub fn from_terms(
        algebra: &Arc<GradedAlgebra>,
        terms: impl IntoIterator<Item = (Monomial, FpElement)>,
    ) -> Polynomial {
        let mut out = Polynomial::zero(algebra);
        for (m, c) in terms {
            out.add_term(m, c.residue());
        }
        out
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn p(&self) -> u64 {
        self.algebra.modulus().value()
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Adds `c * m` in place; `c` is a residue in `[0, p)`.
    pub(crate) fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.p();
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = add_mod(*o.get(), c, p);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Raw `(monomial, residue)` pairs in ascending monomial order.
    pub fn raw_terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// Terms in canonical graded order: higher degree first, then the
    /// monomial order (highest generator first).
    pub fn terms(&self) -> Vec<(Monomial, FpElement)> {
        let modulus = self.algebra.modulus();
        let mut v: Vec<(u32, &Monomial, u64)> = self
            .terms
            .iter()
            .map(|(m, &c)| (m.degree(&self.algebra), m, c))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(a.1)));
        v.into_iter()
            .map(|(_, m, c)| (m.clone(), modulus.element(c as i64)))
            .collect()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> FpElement {
        let c = self.terms.get(m).copied().unwrap_or(0);
        self.algebra.modulus().element(c as i64)
    }

    /// `P >= M`: the polynomial includes the monomial.
    pub fn includes(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(|m| m.degree(&self.algebra));
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// Errors unless the polynomial is zero or homogeneous of `degree`.
    pub fn require_degree(&self, degree: u32) -> Result<()> {
        match self.homogeneous_degree() {
            Homogeneity::Zero => Ok(()),
            Homogeneity::Degree(d) if d == degree => Ok(()),
            other => Err(Error::NotHomogeneous(format!(
                "{} has degree {:?}, expected {}",
                self, other, degree
            ))),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let p = self.p();
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), sub_mod(0, c, p));
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.algebra.modulus().element(-1))
    }

    pub fn scale(&self, c: FpElement) -> Polynomial {
        let p = self.p();
        if c.is_zero() {
            return Polynomial::zero(&self.algebra);
        }
        Polynomial {
            algebra: Arc::clone(&self.algebra),
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), v * c.residue() % p))
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Polynomial {
        self.scale(self.algebra.modulus().element(c))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u64) -> Polynomial {
        let p = self.p();
        let mut out = Polynomial::zero(&self.algebra);
        if c.is_multiple_of(p) {
            return out;
        }
        for (n, &v) in &self.terms {
            out.terms.insert(n.mul(m), v * c % p);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let p = self.p();
        let mut out = Polynomial::zero(&self.algebra);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb % p);
            }
        }
        Ok(out)
    }

    /// Product with every term in `ideal` dropped as it is produced.
    pub fn mul_mod(&self, other: &Polynomial, ideal: &GeneratorIdeal) -> Result<Polynomial> {
        self.check(other)?;
        let p = self.p();
        let mut out = Polynomial::zero(&self.algebra);
        for (a, &ca) in &self.terms {
            if ideal.kills(a) {
                continue;
            }
            for (b, &cb) in &other.terms {
                if ideal.kills(b) {
                    continue;
                }
                out.add_term(a.mul(b), ca * cb % p);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.algebra);
        for _ in 0..e {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    pub fn reduce_mod_ideal(&self, ideal: &GeneratorIdeal) -> Polynomial {
        if ideal.is_empty() {
            return self.clone();
        }
        Polynomial {
            algebra: Arc::clone(&self.algebra),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !ideal.kills(m))
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            algebra: Arc::clone(&self.algebra),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    /// The same coefficients read in another algebra with the same generator
    /// indexing (used to move between isomorphic presentations).
    pub fn transport(&self, algebra: &Arc<GradedAlgebra>) -> Polynomial {
        Polynomial {
            algebra: Arc::clone(algebra),
            terms: self.terms.clone(),
        }
    }

    /// Parses expressions such as `2*c2^3 + 2*c3^2 - 5/12*p7*p2`.
    pub fn parse(algebra: &Arc<GradedAlgebra>, text: &str) -> Result<Polynomial> {
        let p = algebra.modulus();
        let mut out = Polynomial::zero(algebra);
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                chunks.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if ch == '-' {
                negative = true;
            } else if ch != '+' {
                current.push(ch);
            }
        }
        chunks.push((negative, current));
        for (neg, chunk) in chunks {
            if chunk.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{text}`")));
            }
            let mut coeff = p.one();
            let mut mono = Monomial::one();
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{chunk}`")));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let (n, d) = match factor.split_once('/') {
                        Some((n, d)) => (n, d),
                        None => (factor, "1"),
                    };
                    let n: i64 = n.parse().map_err(|_| Error::Parse(factor.into()))?;
                    let d: i64 = d.parse().map_err(|_| Error::Parse(factor.into()))?;
                    coeff = coeff * rational_to_fp(n, d, p)?;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u32>().map_err(|_| Error::Parse(factor.into()))?,
                        ),
                        None => (factor, 1),
                    };
                    mono = mono.mul(&Monomial::power(algebra.require(name)?, exp));
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, coeff.residue());
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = terms
            .iter()
            .map(|(m, c)| match (c.residue(), m.is_one()) {
                (c, true) => c.to_string(),
                (1, false) => m.display(&self.algebra),
                (c, false) => format!("{}*{}", c, m.display(&self.algebra)),
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Prime;
    use proptest::prelude::*;

    fn alg(p: u64) -> Arc<GradedAlgebra> {
        GradedAlgebra::indexed("BSU(4)", "c", 2..=4, 2, Prime::new(p).unwrap()).unwrap()
    }

    #[test]
    fn field_arithmetic_example() {
        let a = GradedAlgebra::indexed("BSU(3)", "c", 2..=3, 2, Prime::new(3).unwrap()).unwrap();
        let x = Polynomial::parse(&a, "c2 + c3").unwrap();
        let y = Polynomial::parse(&a, "c2 - c3").unwrap();
        assert_eq!(
            x.mul(&y).unwrap(),
            Polynomial::parse(&a, "c2^2 + 2*c3^2").unwrap()
        );
    }

    #[test]
    fn unit_law_and_grading() {
        let a = alg(5);
        let p = Polynomial::parse(&a, "c2^2 + 3*c4").unwrap();
        assert_eq!(Polynomial::one(&a).mul(&p).unwrap(), p);
        let deg4 = Polynomial::parse(&a, "c2").unwrap();
        let deg6 = Polynomial::parse(&a, "c3").unwrap();
        assert_eq!(
            deg4.mul(&deg6).unwrap().homogeneous_degree(),
            Homogeneity::Degree(10)
        );
        assert_eq!(Polynomial::zero(&a).homogeneous_degree(), Homogeneity::Zero);
        assert_eq!(
            Polynomial::parse(&a, "c2 + c3")
                .unwrap()
                .homogeneous_degree(),
            Homogeneity::Mixed
        );
    }

    #[test]
    fn coefficient_queries() {
        let a = GradedAlgebra::indexed("BSU(3)", "c", 2..=3, 2, Prime::new(5).unwrap()).unwrap();
        let p = Polynomial::parse(&a, "2*c2^3 + 2*c3^2").unwrap();
        let c3sq = Monomial::power(a.require("c3").unwrap(), 2);
        assert_eq!(p.coefficient_of(&c3sq).residue(), 2);
        assert!(p.includes(&c3sq));
        assert_eq!(p.coefficient_of(&Monomial::generator(0)).residue(), 0);
        assert_eq!(Polynomial::zero(&a).coefficient_of(&c3sq).residue(), 0);
    }

    #[test]
    fn ideal_reduction() {
        let a = GradedAlgebra::indexed("BSU(3)", "c", 2..=3, 2, Prime::new(5).unwrap()).unwrap();
        let p = Polynomial::parse(&a, "2*c2^3 + 2*c3^2").unwrap();
        let i = GeneratorIdeal::by_names(&a, &["c2"]).unwrap();
        assert_eq!(
            p.reduce_mod_ideal(&i),
            Polynomial::parse(&a, "2*c3^2").unwrap()
        );
        assert_eq!(p.reduce_mod_ideal(&GeneratorIdeal::empty()), p);
        let so = GradedAlgebra::indexed("BSO(5)", "p", 1..=2, 4, Prime::new(7).unwrap()).unwrap();
        let q = Polynomial::parse(&so, "p1*p2 + p2^2").unwrap();
        let i = GeneratorIdeal::by_names(&so, &["p1"]).unwrap();
        assert_eq!(
            q.reduce_mod_ideal(&i),
            Polynomial::parse(&so, "p2^2").unwrap()
        );
    }

    #[test]
    fn mismatched_algebras() {
        let a = alg(5);
        let b = alg(7);
        let x = Polynomial::one(&a);
        let y = Polynomial::one(&b);
        assert_eq!(x.mul(&y), Err(Error::AlgebraMismatch));
        assert_eq!(x.add(&y), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn display_and_parse_agree() {
        let a = alg(13);
        let p = Polynomial::parse(&a, "-1/2*c4^2 + c3*c2 + 7").unwrap();
        assert_eq!(p.to_string(), "6*c4^2 + c3*c2 + 7");
        assert_eq!(Polynomial::parse(&a, &p.to_string()).unwrap(), p);
        assert!(Polynomial::parse(&a, "c9").is_err());
        assert!(Polynomial::parse(&a, "c2 + ").is_err());
    }

    fn arb_poly(a: Arc<GradedAlgebra>) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((0u32..3, 0u32..3, 0u32..3, 0i64..13), 0..6).prop_map(move |ts| {
            let mut out = Polynomial::zero(&a);
            for (x, y, z, c) in ts {
                let m = Monomial::from_dense(&[x, y, z]);
                out = out.add(&Polynomial::term(&a, m, c)).unwrap();
            }
            out
        })
    }

    fn arb_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
        prop_oneof![Just(3u64), Just(5), Just(7), Just(13)].prop_flat_map(|p| {
            let a = alg(p);
            (arb_poly(a.clone()), arb_poly(a.clone()), arb_poly(a))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms((x, y, z) in arb_triple()) {
            prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
            prop_assert_eq!(
                x.mul(&y.add(&z).unwrap()).unwrap(),
                x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
            );
            prop_assert!(x.sub(&x).unwrap().is_zero());
        }
    }
}
