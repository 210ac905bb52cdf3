use std::cmp::Ordering;

use super::GradedAlgebra;
use crate::error::{Error, Result};

/// Sparse exponent vector: `(generator index, exponent)` pairs sorted by
/// index, zero exponents never stored.
///
/// The ordering compares exponents from the highest generator index down,
/// so within a fixed degree `x28 > x24*x4 > x16*x4^3 > x4^7`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u16, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn generator(index: usize) -> Monomial {
        Monomial::power(index, 1)
    }

    pub fn power(index: usize, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial {
                exps: vec![(index as u16, exp)],
            }
        }
    }

    pub fn from_dense(exps: &[u32]) -> Monomial {
        Monomial {
            exps: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| (i as u16, e))
                .collect(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Monomial {
        let mut m = Monomial::one();
        for (g, e) in pairs {
            m = m.mul(&Monomial::power(g, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `(generator index, exponent)` pairs in ascending index order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, u32)> + ExactSizeIterator + '_ {
        self.exps.iter().map(|&(g, e)| (g as usize, e))
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps
            .binary_search_by_key(&(index as u16), |&(g, _)| g)
            .map(|pos| self.exps[pos].1)
            .unwrap_or(0)
    }

    /// Number of generator factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree(&self, algebra: &GradedAlgebra) -> u32 {
        self.iter().map(|(g, e)| e * algebra.degree_of(g)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.iter().all(|(g, e)| other.exponent(g) >= e)
    }

    /// `self / divisor`, or `None` when the division is not exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(g, e) in &self.exps {
            let mut e = e;
            if j < divisor.exps.len() && divisor.exps[j].0 == g {
                let d = divisor.exps[j].1;
                if d > e {
                    return None;
                }
                e -= d;
                j += 1;
            } else if j < divisor.exps.len() && divisor.exps[j].0 < g {
                return None;
            }
            if e > 0 {
                out.push((g, e));
            }
        }
        if j < divisor.exps.len() {
            return None;
        }
        Some(Monomial { exps: out })
    }

    /// Factors with multiplicity, ascending generator index.
    pub fn factors(&self) -> Vec<usize> {
        self.iter()
            .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    /// Parses `x18*x10`, `c7^2` or `1`.
    pub fn parse(algebra: &GradedAlgebra, text: &str) -> Result<Monomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial::one());
        }
        let mut m = Monomial::one();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>().map_err(|_| Error::Parse(factor.into()))?,
                ),
                None => (factor, 1),
            };
            m = m.mul(&Monomial::power(algebra.require(name)?, exp));
        }
        Ok(m)
    }

    /// Renders as `x18*x10` or `c7^2`, highest generator first; `1` for the unit.
    pub fn display(&self, algebra: &GradedAlgebra) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.iter()
            .rev()
            .map(|(g, e)| {
                if e == 1 {
                    algebra.name_of(g).to_string()
                } else {
                    format!("{}^{}", algebra.name_of(g), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exps.iter().rev();
        let mut b = other.exps.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(ga, ea)), Some(&(gb, eb))) => {
                    if ga != gb {
                        return ga.cmp(&gb);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_and_division() {
        let a = Monomial::from_dense(&[1, 0, 2]);
        let b = Monomial::from_dense(&[0, 3, 1]);
        let ab = a.mul(&b);
        assert_eq!(ab, Monomial::from_dense(&[1, 3, 3]));
        assert_eq!(ab.checked_div(&b), Some(a.clone()));
        assert!(a.divides(&ab));
        assert!(!ab.divides(&a));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(ab.factor_count(), 7);
        assert_eq!(a.factors(), vec![0, 2, 2]);
    }

    #[test]
    fn order_prefers_higher_generators() {
        let x28 = Monomial::from_dense(&[0, 0, 0, 1]);
        let x24x4 = Monomial::from_dense(&[1, 0, 1, 0]);
        let x16x4 = Monomial::from_dense(&[3, 1, 0, 0]);
        assert!(x28 > x24x4);
        assert!(x24x4 > x16x4);
        assert!(Monomial::generator(0) > Monomial::one());
    }
}
