//! Sparse graded polynomial algebras over F_p with even-degree generators.
//!
//! Every cohomology ring in the engine is an instance of [`GradedAlgebra`].
//! Monomials are sparse exponent vectors keyed by the canonical generator
//! index; polynomials map monomials to nonzero residues.

mod map;
mod monomial;
mod polynomial;
mod solve;

pub use map::{AlgebraMap, GeneratorImage};
pub use monomial::Monomial;
pub use polynomial::{Homogeneity, Polynomial};
pub use solve::{solve_in_subalgebra, MonomialStatus, SolutionSet};

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fp::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// `Z/p[x_1, ..., x_r]` with named even-degree generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedAlgebra {
    label: String,
    generators: Vec<Generator>,
    modulus: Prime,
}

/// Orders `c2 < c10` rather than lexically.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    let split = |s: &str| {
        let cut = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let (head, tail) = s.split_at(cut);
        (head.to_string(), tail.parse::<u64>().ok())
    };
    let (ha, na) = split(a);
    let (hb, nb) = split(b);
    ha.cmp(&hb).then(na.cmp(&nb)).then_with(|| a.cmp(b))
}

impl GradedAlgebra {
    /// Builds an algebra; generators are put in canonical order
    /// (ascending degree, then name).
    pub fn new(
        label: impl Into<String>,
        generators: impl IntoIterator<Item = (String, u32)>,
        modulus: Prime,
    ) -> Result<Arc<GradedAlgebra>> {
        let mut gens: Vec<Generator> = generators
            .into_iter()
            .map(|(name, degree)| Generator { name, degree })
            .collect();
        for g in &gens {
            if g.degree == 0 || g.degree % 2 != 0 {
                return Err(Error::BadPresentation(format!(
                    "generator {} has degree {}, expected positive even",
                    g.name, g.degree
                )));
            }
        }
        gens.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| natural_cmp(&a.name, &b.name))
        });
        for w in gens.windows(2) {
            if w[0].name == w[1].name {
                return Err(Error::BadPresentation(format!(
                    "duplicate generator {}",
                    w[0].name
                )));
            }
        }
        if gens.len() > u16::MAX as usize {
            return Err(Error::BadPresentation("too many generators".into()));
        }
        Ok(Arc::new(GradedAlgebra {
            label: label.into(),
            generators: gens,
            modulus,
        }))
    }

    /// Shorthand for generators named `{prefix}{i}` of degree `i * step`.
    pub fn indexed(
        label: impl Into<String>,
        prefix: &str,
        indices: impl IntoIterator<Item = u32>,
        step: u32,
        modulus: Prime,
    ) -> Result<Arc<GradedAlgebra>> {
        GradedAlgebra::new(
            label,
            indices
                .into_iter()
                .map(|i| (format!("{prefix}{i}"), i * step)),
            modulus,
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn degree_of(&self, index: usize) -> u32 {
        self.generators[index].degree
    }

    pub fn name_of(&self, index: usize) -> &str {
        &self.generators[index].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(format!("{name} in {}", self.label)))
    }

    /// Same presentation with a different label; used where two spaces share
    /// a cohomology ring (for example Spin(8) and SO(8) away from 2).
    pub fn relabeled(&self, label: impl Into<String>) -> Arc<GradedAlgebra> {
        Arc::new(GradedAlgebra {
            label: label.into(),
            generators: self.generators.clone(),
            modulus: self.modulus,
        })
    }

    /// All monomials of degree exactly `degree`, highest generator first.
    pub fn basis_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.generators.len()];
        if self.generators.is_empty() {
            if degree == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        self.fill_basis(self.generators.len() - 1, degree, &mut exps, &mut out);
        out
    }

    fn fill_basis(&self, idx: usize, remaining: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
        let d = self.generators[idx].degree;
        if idx == 0 {
            if remaining.is_multiple_of(d) {
                exps[0] = remaining / d;
                out.push(Monomial::from_dense(exps));
                exps[0] = 0;
            }
            return;
        }
        for e in (0..=remaining / d).rev() {
            exps[idx] = e;
            self.fill_basis(idx - 1, remaining - e * d, exps, out);
        }
        exps[idx] = 0;
    }
}

impl fmt::Display for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        write!(f, "Z/{}[{}]", self.modulus, names.join(","))
    }
}

pub fn same_algebra(a: &Arc<GradedAlgebra>, b: &Arc<GradedAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub fn basis_of_degree(algebra: &GradedAlgebra, degree: u32) -> Vec<Monomial> {
    algebra.basis_of_degree(degree)
}

/// Ideal generated by a subset of the generators of one algebra.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GeneratorIdeal {
    members: BTreeSet<usize>,
}

impl GeneratorIdeal {
    pub fn empty() -> GeneratorIdeal {
        GeneratorIdeal::default()
    }

    pub fn new(members: impl IntoIterator<Item = usize>) -> GeneratorIdeal {
        GeneratorIdeal {
            members: members.into_iter().collect(),
        }
    }

    pub fn by_names(algebra: &GradedAlgebra, names: &[&str]) -> Result<GeneratorIdeal> {
        names
            .iter()
            .map(|n| algebra.require(n))
            .collect::<Result<BTreeSet<_>>>()
            .map(|members| GeneratorIdeal { members })
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn contains_generator(&self, index: usize) -> bool {
        self.members.contains(&index)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_superset(&self, other: &GeneratorIdeal) -> bool {
        self.members.is_superset(&other.members)
    }

    pub fn union(&self, other: &GeneratorIdeal) -> GeneratorIdeal {
        GeneratorIdeal {
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    /// True when the monomial lies in the ideal.
    pub fn kills(&self, m: &Monomial) -> bool {
        m.iter().any(|(g, _)| self.members.contains(&g))
    }

    pub fn display(&self, algebra: &GradedAlgebra) -> String {
        let names: Vec<&str> = self.members.iter().map(|&i| algebra.name_of(i)).collect();
        format!("({})", names.join(","))
    }
}

pub fn reduce_mod_ideal(poly: &Polynomial, ideal: &GeneratorIdeal) -> Polynomial {
    poly.reduce_mod_ideal(ideal)
}
