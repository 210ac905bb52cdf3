//! 𝒫¹ on BE8 and BE6, pulled back from BSO(15).
//!
//! For a BE8 generator `x` with known `j2*(x)`, 𝒫¹x is any `P` with
//! `j2*(P) = 𝒫¹ j2*(x)`. The solve always runs modulo `(p1)`: the image
//! of x36 is only known there, and the published images are not
//! consistent with 𝒫¹ beyond it (x24 fails at `p5*p1^2`). Coordinates
//! containing x4 are therefore free. From degree 60 on only the
//! coefficient of the anchor monomial is imposed (the normalization of
//! x60). BE6 values are the image under `i2*` of the BE8 solution set, for
//! generators with `i2*(x) = x`.

use std::fmt;

use super::{p1_derivation, RootAction, RootModel};
use crate::catalog::exceptional::{i2_star, j2_star};
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::graded::{solve_in_subalgebra, GeneratorIdeal, GeneratorImage, Monomial, SolutionSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalGroup {
    E8,
    E6,
}

impl fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionalGroup::E8 => "E8",
            ExceptionalGroup::E6 => "E6",
        })
    }
}

/// BSO(15) monomial whose coefficient alone is imposed in degree `d >= 60`.
fn anchor_text(d: u32) -> Option<String> {
    let p6 = |j: u32| match j {
        0 => String::new(),
        1 => "*p6".to_string(),
        _ => format!("*p6^{j}"),
    };
    if d >= 36 && (d - 36).is_multiple_of(24) {
        Some(format!("p7{}*p2", p6((d - 36) / 24)))
    } else if d >= 28 && (d - 28).is_multiple_of(24) {
        Some(format!("p7{}", p6((d - 28) / 24)))
    } else {
        None
    }
}

/// 𝒫¹ of a generator of BE8 or BE6 as a solution set in degree
/// `|x| + 2(p-1)`. Needs `p > 5`.
pub fn p1_exceptional(group: ExceptionalGroup, generator: &str, p: Prime) -> Result<SolutionSet> {
    let j2 = j2_star(p)?;
    let be8 = j2.source().clone();
    let bso15 = j2.target().clone();
    if group == ExceptionalGroup::E6 && !matches!(generator, "x4" | "x16" | "x24") {
        crate::catalog::algebras::be6(p)?.require(generator)?;
        return Err(Error::UnknownGeneratorAction(format!("{generator} in BE6")));
    }
    let idx = be8.require(generator)?;
    let image = match j2.image(idx) {
        GeneratorImage::Exact(img) => img.clone(),
        _ => return Err(Error::UnknownGeneratorAction(format!("{generator} in BE8"))),
    };
    let action = RootAction::new(RootModel::Pontrjagin { n: 7 }, &bso15, "p")?;
    let target = p1_derivation(&action, &image)?;
    let degree = be8.degree_of(idx) + 2 * (p.value() as u32 - 1);
    let quotient = GeneratorIdeal::by_names(&bso15, &["p1"])?;
    let target = target.reduce_mod_ideal(&quotient);
    let anchor = match anchor_text(degree) {
        Some(text) if degree >= 60 => Some(Monomial::parse(&bso15, &text)?),
        _ => None,
    };
    let solution = solve_in_subalgebra(&target, degree, &j2, &quotient, anchor.as_ref())?;
    match group {
        ExceptionalGroup::E8 => Ok(solution),
        ExceptionalGroup::E6 => solution.push_forward(&i2_star(p)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::MonomialStatus;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn coefficient(s: &SolutionSet, text: &str) -> MonomialStatus {
        s.status(&Monomial::parse(s.algebra(), text).unwrap())
    }

    #[test]
    fn anchors() {
        assert_eq!(anchor_text(36).as_deref(), Some("p7*p2"));
        assert_eq!(anchor_text(60).as_deref(), Some("p7*p6*p2"));
        assert_eq!(anchor_text(76).as_deref(), Some("p7*p6^2"));
        assert_eq!(anchor_text(64), None);
    }

    /// In degree 28 only x28 reaches `p7`, so its coefficient is the `p7`
    /// coefficient of 𝒫¹p1 (Wu formula) over 480.
    #[test]
    fn e8_x4_at_13_matches_wu() {
        let p = prime(13);
        let s = p1_exceptional(ExceptionalGroup::E8, "x4", p).unwrap();
        assert_eq!(s.degree(), 28);
        let wu = crate::steenrod::p1_wu_pontrjagin(7, 1, p).unwrap();
        let c = wu.coefficient_of(&Monomial::generator(6));
        let expected = c * crate::fp::rational_to_fp(1, 480, p).unwrap();
        assert_eq!(coefficient(&s, "x28"), MonomialStatus::Unique(expected));
        let e6 = p1_exceptional(ExceptionalGroup::E6, "x4", p).unwrap();
        assert_eq!(
            coefficient(&e6, "x18*x10"),
            MonomialStatus::Unique(expected * p.element(40))
        );
    }

    #[test]
    fn e6_x16_at_11() {
        let t = p1_exceptional(ExceptionalGroup::E6, "x16", prime(11)).unwrap();
        assert_eq!(
            coefficient(&t, "x18^2"),
            MonomialStatus::Unique(prime(11).element(6))
        );
        assert!(!coefficient(&t, "x16^2*x4").is_unique());
    }

    #[test]
    fn refusals() {
        assert!(matches!(
            p1_exceptional(ExceptionalGroup::E6, "x12", prime(7)),
            Err(Error::UnknownGeneratorAction(_))
        ));
        assert!(matches!(
            p1_exceptional(ExceptionalGroup::E8, "x40", prime(7)),
            Err(Error::UnknownGeneratorAction(_))
        ));
        assert!(matches!(
            p1_exceptional(ExceptionalGroup::E8, "x4", prime(5)),
            Err(Error::UnsupportedPrime { .. })
        ));
    }
}
