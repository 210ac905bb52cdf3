//! Linear solving for `target = f(P)` with `P` homogeneous in the source
//! algebra of `f`, over F_p, with explicit bookkeeping of which coordinates
//! of `P` the data actually pins down.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::map::PowerCache;
use super::{
    same_algebra, AlgebraMap, GeneratorIdeal, GeneratorImage, GradedAlgebra, Monomial, Polynomial,
};
use crate::error::{Error, Result};
use crate::fp::{inv_mod, sub_mod, FpElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialStatus {
    Unique(FpElement),
    Ambiguous,
}

impl MonomialStatus {
    pub fn is_unique(self) -> bool {
        matches!(self, MonomialStatus::Unique(_))
    }

    pub fn value(self) -> Option<FpElement> {
        match self {
            MonomialStatus::Unique(v) => Some(v),
            MonomialStatus::Ambiguous => None,
        }
    }
}

/// Affine solution space `particular + span(kernel)` in the coordinates
/// `basis` (all monomials of `degree` in `algebra`).
#[derive(Debug, Clone)]
pub struct SolutionSet {
    algebra: Arc<GradedAlgebra>,
    degree: u32,
    basis: Vec<Monomial>,
    particular: Vec<u64>,
    kernel: Vec<Vec<u64>>,
    /// Coordinates known to be unconstrained for reasons outside the
    /// linear system (unknown images met while pushing forward).
    forced_ambiguous: BTreeSet<Monomial>,
}

impl SolutionSet {
    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn particular(&self) -> Vec<FpElement> {
        let p = self.algebra.modulus();
        self.particular
            .iter()
            .map(|&c| p.element(c as i64))
            .collect()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<FpElement>> {
        let p = self.algebra.modulus();
        self.kernel
            .iter()
            .map(|v| v.iter().map(|&c| p.element(c as i64)).collect())
            .collect()
    }

    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty() && self.forced_ambiguous.is_empty()
    }

    pub fn status(&self, m: &Monomial) -> MonomialStatus {
        let p = self.algebra.modulus();
        if self.forced_ambiguous.contains(m) {
            return MonomialStatus::Ambiguous;
        }
        match self.basis.iter().position(|b| b == m) {
            None => MonomialStatus::Unique(p.zero()),
            Some(i) => {
                if self.kernel.iter().any(|v| v[i] != 0) {
                    MonomialStatus::Ambiguous
                } else {
                    MonomialStatus::Unique(p.element(self.particular[i] as i64))
                }
            }
        }
    }

    pub fn statuses(&self) -> Vec<(Monomial, MonomialStatus)> {
        self.basis
            .iter()
            .map(|m| (m.clone(), self.status(m)))
            .collect()
    }

    /// The coefficient of `m`, or [`Error::Ambiguous`].
    pub fn coefficient(&self, m: &Monomial) -> Result<FpElement> {
        self.status(m).value().ok_or_else(|| {
            Error::Ambiguous(format!(
                "coefficient of {} in degree {} of {}",
                m.display(&self.algebra),
                self.degree,
                self.algebra.label()
            ))
        })
    }

    /// The member with every free coordinate set to zero.
    pub fn particular_polynomial(&self) -> Polynomial {
        self.vector_polynomial(&self.particular)
    }

    /// The polynomial with coordinates `particular + Σ t_i kernel_i`.
    pub fn member(&self, weights: &[i64]) -> Polynomial {
        let p = self.algebra.modulus();
        let mut v = self.particular.clone();
        for (w, k) in weights.iter().zip(&self.kernel) {
            let w = p.reduce(*w);
            for (slot, &c) in v.iter_mut().zip(k) {
                *slot = (*slot + w * c) % p.value();
            }
        }
        self.vector_polynomial(&v)
    }

    fn vector_polynomial(&self, v: &[u64]) -> Polynomial {
        let p = self.algebra.modulus();
        Polynomial::from_terms(
            &self.algebra,
            self.basis
                .iter()
                .zip(v)
                .map(|(m, &c)| (m.clone(), p.element(c as i64))),
        )
    }

    /// Image of the solution set under `g`. Coordinates that are not pinned
    /// to zero make target monomials ambiguous when their image is not
    /// fully known: everything their known factor could reach for an
    /// unknown image, and the part inside the ideal for an image known
    /// only modulo an ideal.
    pub fn push_forward(&self, g: &AlgebraMap) -> Result<SolutionSet> {
        if !same_algebra(g.source(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let target = g.target();
        let p = target.modulus().value();
        let basis = target.basis_of_degree(self.degree);
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let empty = GeneratorIdeal::empty();
        let mut cache = PowerCache::new(g, &empty);
        let mut images: Vec<Option<Polynomial>> = Vec::with_capacity(self.basis.len());
        let mut forced = BTreeSet::new();
        for (i, m) in self.basis.iter().enumerate() {
            let mut unknown = false;
            let mut ideal = GeneratorIdeal::empty();
            for (gen, _) in m.iter() {
                match g.image(gen) {
                    GeneratorImage::Exact(_) => {}
                    GeneratorImage::Modulo { ideal: j, .. } => ideal = ideal.union(j),
                    GeneratorImage::Unknown { .. } => unknown = true,
                }
            }
            let image = match (unknown, ideal.is_empty()) {
                (true, _) => None,
                (false, true) => Some(cache.monomial(m)?),
                (false, false) => Some(g.apply_monomial_mod(m, &ideal)?),
            };
            let free = self.forced_ambiguous.contains(m)
                || self.particular[i] != 0
                || self.kernel.iter().any(|v| v[i] != 0);
            if free && (unknown || !ideal.is_empty()) {
                let known =
                    Monomial::from_pairs(m.iter().filter(|&(gen, _)| g.image(gen).is_exact()));
                let known_image = cache.monomial(&known)?;
                for n in &basis {
                    if (unknown || ideal.kills(n))
                        && known_image.raw_terms().any(|(t, _)| t.divides(n))
                    {
                        forced.insert(n.clone());
                    }
                }
            }
            if self.forced_ambiguous.contains(m) {
                if let Some(img) = &image {
                    forced.extend(img.raw_terms().map(|(t, _)| t.clone()));
                }
            }
            images.push(image);
        }
        let project = |v: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; basis.len()];
            for (c, img) in v.iter().zip(&images) {
                if *c == 0 {
                    continue;
                }
                if let Some(img) = img {
                    for (t, d) in img.raw_terms() {
                        let slot = index[t];
                        out[slot] = (out[slot] + c * d) % p;
                    }
                }
            }
            out
        };
        let particular = project(&self.particular);
        let kernel = self
            .kernel
            .iter()
            .map(|v| project(v))
            .filter(|v| v.iter().any(|&c| c != 0))
            .collect();
        Ok(SolutionSet {
            algebra: Arc::clone(target),
            degree: self.degree,
            basis,
            particular,
            kernel,
            forced_ambiguous: forced,
        })
    }
}

/// One unknown of the linear system: either a real coordinate or an
/// auxiliary variable standing for an unknown generator image.
enum Column {
    Coordinate(Polynomial),
    Auxiliary(Polynomial),
}

/// Solves `f(P) ≡ target (mod quotient)` for `P` homogeneous of `degree`.
///
/// Source generators with unknown images are handled by auxiliary
/// variables: a monomial `U*K` with `U` unknown contributes the span of
/// `f(K)*b` over target monomials `b` of degree `|U|` not excluded for `U`.
/// With an `anchor`, only the anchor's coefficient equation is imposed.
pub fn solve_in_subalgebra(
    target: &Polynomial,
    degree: u32,
    f: &AlgebraMap,
    quotient: &GeneratorIdeal,
    anchor: Option<&Monomial>,
) -> Result<SolutionSet> {
    if !same_algebra(target.algebra(), f.target()) {
        return Err(Error::AlgebraMismatch);
    }
    target.require_degree(degree)?;
    let source = f.source();
    let tgt_alg = f.target();
    let p = tgt_alg.modulus().value();
    let basis = source.basis_of_degree(degree);
    let mut cache = PowerCache::new(f, quotient);
    let mut columns: Vec<Column> = Vec::new();
    let mut auxiliary: Vec<Column> = Vec::new();
    for m in &basis {
        if f.can_apply(m, quotient) {
            columns.push(Column::Coordinate(cache.monomial(m)?));
            continue;
        }
        columns.push(Column::Coordinate(Polynomial::zero(tgt_alg)));
        let unknown: Vec<(usize, u32)> = m
            .iter()
            .filter(|&(g, _)| !f.can_apply(&Monomial::generator(g), quotient))
            .collect();
        let known = Monomial::from_pairs(
            m.iter()
                .filter(|&(g, _)| f.can_apply(&Monomial::generator(g), quotient)),
        );
        let known_image = cache.monomial(&known)?;
        if known_image.is_zero() {
            continue;
        }
        let excluded: &[Monomial] = match unknown.as_slice() {
            [(g, 1)] => match f.image(*g) {
                GeneratorImage::Unknown { excluded } => excluded,
                _ => &[],
            },
            _ => &[],
        };
        let unknown_degree: u32 = unknown.iter().map(|&(g, e)| e * source.degree_of(g)).sum();
        for b in tgt_alg.basis_of_degree(unknown_degree) {
            if excluded.contains(&b) || quotient.kills(&b) {
                continue;
            }
            let col = known_image.mul_monomial(&b, 1).reduce_mod_ideal(quotient);
            if !col.is_zero() {
                auxiliary.push(Column::Auxiliary(col));
            }
        }
    }
    columns.extend(auxiliary);
    let rhs = target.reduce_mod_ideal(quotient);

    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    match anchor {
        Some(a) => {
            rows.insert(a.clone(), 0);
        }
        None => {
            let polys = columns.iter().map(|c| match c {
                Column::Coordinate(p) | Column::Auxiliary(p) => p,
            });
            for poly in polys.chain(std::iter::once(&rhs)) {
                for (t, _) in poly.raw_terms() {
                    let next = rows.len();
                    rows.entry(t.clone()).or_insert(next);
                }
            }
        }
    }
    let ncols = columns.len();
    let mut matrix = vec![vec![0u64; ncols + 1]; rows.len()];
    for (j, col) in columns.iter().enumerate() {
        let (Column::Coordinate(poly) | Column::Auxiliary(poly)) = col;
        for (t, c) in poly.raw_terms() {
            if let Some(&r) = rows.get(t) {
                matrix[r][j] = c;
            }
        }
    }
    for (t, c) in rhs.raw_terms() {
        if let Some(&r) = rows.get(t) {
            matrix[r][ncols] = c;
        }
    }

    let pivots = row_reduce(&mut matrix, ncols, p);
    if matrix.iter().skip(pivots.len()).any(|row| row[ncols] != 0) {
        return Err(Error::NoSolution(degree));
    }
    let mut particular = vec![0u64; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = matrix[r][ncols];
    }
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let nreal = basis.len();
    let mut kernel = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = sub_mod(0, matrix[r][free], p);
        }
        v.truncate(nreal);
        if v.iter().any(|&c| c != 0) {
            kernel.push(v);
        }
    }
    particular.truncate(nreal);
    Ok(SolutionSet {
        algebra: Arc::clone(source),
        degree,
        basis,
        particular,
        kernel,
        forced_ambiguous: BTreeSet::new(),
    })
}

/// Reduced row echelon form in place over the first `ncols` columns;
/// returns the pivot column of each leading row.
pub(crate) fn row_reduce(matrix: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == matrix.len() {
            break;
        }
        let Some(pr) = (r..matrix.len()).find(|&i| matrix[i][c] != 0) else {
            continue;
        };
        matrix.swap(r, pr);
        let inv = inv_mod(matrix[r][c], p).expect("nonzero pivot");
        for x in matrix[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = matrix[r].clone();
        for (i, row) in matrix.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = sub_mod(*x, factor * y % p, p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Prime;

    fn setup() -> (Arc<GradedAlgebra>, Arc<GradedAlgebra>, AlgebraMap) {
        let p = Prime::new(7).unwrap();
        let src = GradedAlgebra::indexed("A", "y", 1..=2, 4, p).unwrap();
        let tgt = GradedAlgebra::indexed("B", "q", 1..=2, 4, p).unwrap();
        let f =
            AlgebraMap::from_text("f", &src, &tgt, &[("y1", "q1"), ("y2", "q2 + 3*q1^2")]).unwrap();
        (src, tgt, f)
    }

    #[test]
    fn unique_solution_round_trips() {
        let (src, tgt, f) = setup();
        let target = Polynomial::parse(&tgt, "q2*q1 + 4*q1^3").unwrap();
        let s = solve_in_subalgebra(&target, 12, &f, &GeneratorIdeal::empty(), None).unwrap();
        assert!(s.is_unique());
        let sol = s.particular_polynomial();
        assert_eq!(sol, Polynomial::parse(&src, "y2*y1 + y1^3").unwrap());
        assert_eq!(f.apply(&sol).unwrap(), target);
    }

    #[test]
    fn quotient_leaves_kernel() {
        let (src, tgt, f) = setup();
        let q1 = GeneratorIdeal::by_names(&tgt, &["q1"]).unwrap();
        let target = Polynomial::parse(&tgt, "q2^2 + q2*q1^2").unwrap();
        let s = solve_in_subalgebra(&target, 16, &f, &q1, None).unwrap();
        assert_eq!(
            s.status(&Monomial::power(1, 2)),
            MonomialStatus::Unique(Prime::new(7).unwrap().one())
        );
        assert_eq!(
            s.status(&Monomial::from_dense(&[2, 1])),
            MonomialStatus::Ambiguous
        );
        for w in 0..7 {
            let member = s.member(&[w, 2 * w + 1]);
            assert_eq!(
                f.apply_mod(&member, &q1).unwrap(),
                target.reduce_mod_ideal(&q1)
            );
        }
        let _ = src;
    }

    #[test]
    fn inconsistent_target() {
        let p = Prime::new(5).unwrap();
        let src = GradedAlgebra::indexed("A", "y", 1..=1, 4, p).unwrap();
        let tgt = GradedAlgebra::indexed("B", "q", 1..=2, 4, p).unwrap();
        let f = AlgebraMap::from_text("f", &src, &tgt, &[("y1", "q1")]).unwrap();
        let target = Polynomial::parse(&tgt, "q2").unwrap();
        assert_eq!(
            solve_in_subalgebra(&target, 8, &f, &GeneratorIdeal::empty(), None).unwrap_err(),
            Error::NoSolution(8)
        );
    }

    #[test]
    fn unknown_image_with_anchor() {
        let p = Prime::new(11).unwrap();
        let src = GradedAlgebra::indexed("A", "y", 1..=2, 4, p).unwrap();
        let tgt = GradedAlgebra::indexed("B", "q", 1..=2, 4, p).unwrap();
        let f = AlgebraMap::new(
            "f",
            &src,
            &tgt,
            [
                (
                    "y1".to_string(),
                    GeneratorImage::Exact(Polynomial::parse(&tgt, "q1").unwrap()),
                ),
                (
                    "y2".to_string(),
                    GeneratorImage::Unknown {
                        excluded: vec![Monomial::generator(0).mul(&Monomial::generator(0))],
                    },
                ),
            ],
        )
        .unwrap();
        let target = Polynomial::parse(&tgt, "3*q1^2 + q2").unwrap();
        let free = solve_in_subalgebra(&target, 8, &f, &GeneratorIdeal::empty(), None).unwrap();
        assert_eq!(
            free.status(&Monomial::power(0, 2)),
            MonomialStatus::Unique(p.element(3))
        );
        assert_eq!(
            free.status(&Monomial::generator(1)),
            MonomialStatus::Ambiguous
        );
        let anchor = Monomial::power(0, 2);
        let pinned =
            solve_in_subalgebra(&target, 8, &f, &GeneratorIdeal::empty(), Some(&anchor)).unwrap();
        assert_eq!(
            pinned.status(&Monomial::power(0, 2)),
            MonomialStatus::Unique(p.element(3))
        );
        assert_eq!(
            pinned.status(&Monomial::generator(1)),
            MonomialStatus::Ambiguous
        );
    }

    #[test]
    fn push_forward_tracks_unknown_images() {
        let (src, tgt, f) = setup();
        let target = Polynomial::parse(&tgt, "q2 + 3*q1^2").unwrap();
        let s = solve_in_subalgebra(&target, 8, &f, &GeneratorIdeal::empty(), None).unwrap();
        let p = Prime::new(7).unwrap();
        let c = GradedAlgebra::indexed("C", "z", 1..=1, 4, p).unwrap();
        let g = AlgebraMap::new(
            "g",
            &src,
            &c,
            [
                (
                    "y1".to_string(),
                    GeneratorImage::Exact(Polynomial::parse(&c, "2*z1").unwrap()),
                ),
                ("y2".to_string(), GeneratorImage::unknown()),
            ],
        )
        .unwrap();
        let pushed = s.push_forward(&g).unwrap();
        assert_eq!(
            pushed.status(&Monomial::power(0, 2)),
            MonomialStatus::Ambiguous
        );
        let t2 = Polynomial::parse(&tgt, "q1^2").unwrap();
        let s2 = solve_in_subalgebra(&t2, 8, &f, &GeneratorIdeal::empty(), None).unwrap();
        let pushed2 = s2.push_forward(&g).unwrap();
        assert_eq!(
            pushed2.status(&Monomial::power(0, 2)),
            MonomialStatus::Unique(p.element(4))
        );
    }
}
