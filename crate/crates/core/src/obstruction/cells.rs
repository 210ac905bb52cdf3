//! Cell dimensions of projective spaces of spheres and of the complex X
//! whose maps into BG decide A_k-ness, plus the homotopy-vanishing test.

use std::collections::BTreeSet;

use crate::catalog::{Family, GroupModel, PairModel};
use crate::error::{Error, Result};
use crate::fp::Prime;

/// A set of positive even cell dimensions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellSet {
    dims: BTreeSet<u32>,
}

impl CellSet {
    pub fn new(dims: impl IntoIterator<Item = u32>) -> Result<CellSet> {
        let dims: BTreeSet<u32> = dims.into_iter().collect();
        if let Some(d) = dims.iter().find(|&&d| d == 0 || d % 2 == 1) {
            return Err(Error::BadParameter(format!(
                "cell dimension {d} is not positive and even"
            )));
        }
        Ok(CellSet { dims })
    }

    pub fn dims(&self) -> impl Iterator<Item = u32> + '_ {
        self.dims.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.dims.iter().copied().collect()
    }

    pub fn max(&self) -> Option<u32> {
        self.dims.last().copied()
    }

    pub fn contains(&self, d: u32) -> bool {
        self.dims.contains(&d)
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }
}

/// `P^l S^{2n-1} = S^{2n} ∪ e^{4n} ∪ ... ∪ e^{2ln}` for `l <= p - 1`.
pub fn projective_cells(n: u32, l: u32, p: Prime) -> Result<CellSet> {
    if l as u64 > p.value() - 1 {
        return Err(Error::LExceedsPMinusOne { l, p: p.value() });
    }
    if n == 0 {
        return Err(Error::BadParameter("sphere S^{-1}".into()));
    }
    CellSet::new((1..=l).map(|j| 2 * j * n))
}

/// Dimensions (with 0 for the base point) of the fat projective space
/// `P̂^i` of a product of spheres of the given types: a cell picks one
/// cell or nothing from each `P^{i_r}` with `Σ i_r = i`.
fn fat_projective(types: &[u32], i: u32, p: Prime) -> Result<BTreeSet<u32>> {
    let mut states: BTreeSet<(u32, u32)> = BTreeSet::from([(0, 0)]);
    for &t in types {
        let cells = projective_cells(t, i, p)?;
        let mut next = states.clone();
        for &(d, used) in &states {
            for (j, c) in cells.dims().enumerate() {
                if used + (j as u32) < i {
                    next.insert((d + c, used + j as u32 + 1));
                }
            }
        }
        states = next;
    }
    Ok(states.into_iter().map(|(d, _)| d).collect())
}

/// Cells of `X = ∪_{i+j=k, i≠k} P̂^i(H-spheres) × P̂^j(quotient spheres)`,
/// keeping only cells with a nontrivial quotient part (cells purely from
/// the H side already lie in the image of `ΣH`).
pub fn x_cells(pair: &PairModel, k: u32, p: Prime) -> Result<CellSet> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "x_cells needs k >= 2, got {k}"
        )));
    }
    let h_types = pair.h().type_sequence();
    let q_types = pair.quotient_types();
    let mut dims = BTreeSet::new();
    for i in 0..k {
        let a = fat_projective(h_types, i, p)?;
        let b = fat_projective(q_types, k - i, p)?;
        for &x in &a {
            for &y in b.iter().filter(|&&y| y > 0) {
                dims.insert(x + y);
            }
        }
    }
    CellSet::new(dims)
}

/// Result of the vanishing test `π_{d-1}(BG) = 0` on every cell `e^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clearance {
    pub clear: bool,
    pub failing: Vec<u32>,
}

/// `π_{2i-1}(BG)_{(p)} = 0` for `i <= p`, and additionally for `BE6` at
/// `i = 12k-3` when `p = 12k-5`.
fn vanishes(g: &GroupModel, i: u32, p: Prime) -> bool {
    let pv = p.value();
    i as u64 <= pv
        || (g.family() == Family::E6 && (pv + 5).is_multiple_of(12) && i as u64 == pv + 2)
}

pub fn clearance(g: &GroupModel, cells: &CellSet, p: Prime) -> Clearance {
    let failing: Vec<u32> = cells.dims().filter(|&d| !vanishes(g, d / 2, p)).collect();
    Clearance {
        clear: failing.is_empty(),
        failing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instantiate_pair, PairFamily};

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn projective_examples() {
        assert_eq!(
            projective_cells(2, 2, prime(5)).unwrap().to_vec(),
            vec![4, 8]
        );
        assert_eq!(
            projective_cells(4, 3, prime(5)).unwrap().to_vec(),
            vec![8, 16, 24]
        );
        assert_eq!(projective_cells(2, 1, prime(3)).unwrap().to_vec(), vec![4]);
        assert!(projective_cells(2, 0, prime(3)).unwrap().is_empty());
        assert_eq!(
            projective_cells(2, 5, prime(5)).unwrap_err(),
            Error::LExceedsPMinusOne { l: 5, p: 5 }
        );
    }

    #[test]
    fn e6_cells_at_23() {
        let pair = instantiate_pair(PairFamily::E6F4, 0, prime(23)).unwrap();
        let cells = x_cells(&pair, 2, prime(23)).unwrap();
        assert_eq!(
            cells.to_vec(),
            vec![10, 14, 18, 20, 22, 26, 28, 30, 34, 36, 42]
        );
    }

    #[test]
    fn spin8_cells_and_clearance() {
        let pair = instantiate_pair(PairFamily::Spin8G2, 0, prime(11)).unwrap();
        let cells = x_cells(&pair, 2, prime(11)).unwrap();
        assert_eq!(cells.max(), Some(20));
        assert!(clearance(pair.g(), &cells, prime(11)).clear);
        let pair7 = instantiate_pair(PairFamily::Spin8G2, 0, prime(7)).unwrap();
        let cells7 = x_cells(&pair7, 2, prime(7)).unwrap();
        assert_eq!(
            clearance(pair7.g(), &cells7, prime(7)),
            Clearance {
                clear: false,
                failing: vec![16, 20]
            }
        );
    }

    #[test]
    fn e6_exception_at_19() {
        let pair = instantiate_pair(PairFamily::E6F4, 0, prime(19)).unwrap();
        let cells = x_cells(&pair, 2, prime(19)).unwrap();
        assert!(cells.contains(42));
        assert!(clearance(pair.g(), &cells, prime(19)).clear);
    }

    proptest::proptest! {
        // The top cell of X sits in dimension 2 b_k.
        #[test]
        fn top_cell_is_two_b_k(fi in 0usize..5, n in 1u32..7, k in 2u32..6, pi in 0usize..12) {
            let pv = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41][pi];
            let family = PairFamily::ALL[fi];
            let n = if family.has_parameter() { n.max(family.min_parameter()) } else { 0 };
            let p = prime(pv);
            if let Ok(pair) = instantiate_pair(family, n, p) {
                proptest::prop_assume!(pv > k as u64);
                let cells = x_cells(&pair, k, p).unwrap();
                proptest::prop_assert_eq!(cells.max().map(i64::from), Some(2 * crate::catalog::b_threshold(&pair, k)));
            }
        }
    }
}
