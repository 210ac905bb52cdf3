//! Standard presentations of the cohomology rings used throughout.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::graded::GradedAlgebra;

fn need(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParameter(what()))
    }
}

/// `Z/p[c2..cn]`.
pub fn bsu(n: u32, p: Prime) -> Result<Arc<GradedAlgebra>> {
    need(n >= 2, || format!("SU({n}) needs n >= 2"))?;
    GradedAlgebra::indexed(format!("BSU({n})"), "c", 2..=n, 2, p)
}

/// `Z/p[p1..pn]` for BSO(2n+1).
pub fn bso_odd(n: u32, p: Prime) -> Result<Arc<GradedAlgebra>> {
    need(n >= 1, || format!("SO(2n+1) needs n >= 1, got {n}"))?;
    GradedAlgebra::indexed(format!("BSO({})", 2 * n + 1), "p", 1..=n, 4, p)
}

/// `Z/p[p1..p(n-1), en]` for BSO(2n).
pub fn bso_even(n: u32, p: Prime) -> Result<Arc<GradedAlgebra>> {
    need(n >= 2, || format!("SO(2n) needs n >= 2, got {n}"))?;
    GradedAlgebra::new(
        format!("BSO({})", 2 * n),
        (1..n)
            .map(|i| (format!("p{i}"), 4 * i))
            .chain(std::iter::once((format!("e{n}"), 2 * n))),
        p,
    )
}

/// `Z/p[q1..qn]`.
pub fn bsp(n: u32, p: Prime) -> Result<Arc<GradedAlgebra>> {
    need(n >= 1, || format!("Sp(n) needs n >= 1, got {n}"))?;
    GradedAlgebra::indexed(format!("BSp({n})"), "q", 1..=n, 4, p)
}

/// BSpin(8) away from 2, presented as BSO(8).
pub fn bspin8(p: Prime) -> Result<Arc<GradedAlgebra>> {
    Ok(bso_even(4, p)?.relabeled("BSpin(8)"))
}

fn exceptional(label: &str, degrees: &[u32], p: Prime) -> Result<Arc<GradedAlgebra>> {
    GradedAlgebra::new(label, degrees.iter().map(|d| (format!("x{d}"), *d)), p)
}

pub fn bg2(p: Prime) -> Result<Arc<GradedAlgebra>> {
    exceptional("BG2", &[4, 12], p)
}

pub fn bf4(p: Prime) -> Result<Arc<GradedAlgebra>> {
    exceptional("BF4", &[4, 12, 16, 24], p)
}

pub fn be6(p: Prime) -> Result<Arc<GradedAlgebra>> {
    exceptional("BE6", &[4, 10, 12, 16, 18, 24], p)
}

pub fn be8(p: Prime) -> Result<Arc<GradedAlgebra>> {
    exceptional("BE8", &[4, 16, 24, 28, 36, 40, 48, 60], p)
}
