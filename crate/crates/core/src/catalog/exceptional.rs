//! Restriction data linking BE8, BE6 and the orthogonal groups:
//!
//! ```text
//! Spin(10) --i1--> Spin(15)
//!    |j1              |j2
//!    v                v
//!   E6 -----i2-----> E8
//! ```
//!
//! Coefficients are the published rational values, reduced mod p. The
//! images of x40, x48, x60 under j2 and i2 are not known; x60 is normalized
//! so that `j2*(x60)` has no `p7*p6*p2` term. The printed images
//! `i2*(x28)`, `i2*(x36)` agree with `i1* j2*` only modulo `(x4)` and
//! `(x4, x12)` respectively, so they are stored as images modulo those
//! ideals.

use std::sync::Arc;

use super::algebras;
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::graded::{
    AlgebraMap, GeneratorIdeal, GeneratorImage, GradedAlgebra, Monomial, Polynomial,
};

pub const J2_X4: &str = "p1";
pub const J2_X16: &str = "12*p4 - 18/5*p3*p1 + p2^2 + 1/10*p2*p1^2";
pub const J2_X24: &str = "60*p6 - 5*p5*p1 - 5*p4*p2 + 3*p3^2 - p3*p2*p1 + 5/36*p2^3";
pub const J2_X28: &str =
    "480*p7 + 40*p5*p2 - 12*p4*p3 - p3*p2^2 - 3*p4*p2*p1 + 24/5*p3^2*p1 + 11/36*p2^3*p1";
/// Known modulo `(p1)`.
pub const J2_X36: &str =
    "480*p7*p2 + 72*p6*p3 - 30*p5*p4 - 25/2*p5*p2^2 + 9*p4*p3*p2 - 18/5*p3^3 - 1/4*p3*p2^3";

/// Known modulo `(x4)`.
pub const I2_X28: &str = "40*x18*x10 + 1/6*x16*x12";
/// Known modulo `(x4, x12)`.
pub const I2_X36: &str = "-10*x18^2 - 5/2*x16*x10^2";

pub const J1_X10: &str = "e5";
pub const J1_X12: &str = "-6*p3 + p2*p1";
pub const J1_X18: &str = "p2*e5";

fn require_large_prime(p: Prime) -> Result<()> {
    if p.value() > 5 {
        Ok(())
    } else {
        Err(Error::UnsupportedPrime {
            p: p.value(),
            what: "BE8/BE6 restriction data (needs p > 5)".into(),
        })
    }
}

fn exact(alg: &Arc<GradedAlgebra>, name: &str, text: &str) -> Result<(String, GeneratorImage)> {
    Ok((
        name.to_string(),
        GeneratorImage::Exact(Polynomial::parse(alg, text)?),
    ))
}

/// `j2*: H*(BE8) -> H*(BSO(15))`.
pub fn j2_star(p: Prime) -> Result<AlgebraMap> {
    require_large_prime(p)?;
    let be8 = algebras::be8(p)?;
    let bso15 = algebras::bso_odd(7, p)?;
    let p1 = GeneratorIdeal::by_names(&bso15, &["p1"])?;
    let anchor = Monomial::parse(&bso15, "p7*p6*p2")?;
    AlgebraMap::new(
        "j2*",
        &be8,
        &bso15,
        [
            exact(&bso15, "x4", J2_X4)?,
            exact(&bso15, "x16", J2_X16)?,
            exact(&bso15, "x24", J2_X24)?,
            exact(&bso15, "x28", J2_X28)?,
            (
                "x36".to_string(),
                GeneratorImage::Modulo {
                    image: Polynomial::parse(&bso15, J2_X36)?,
                    ideal: p1,
                },
            ),
            ("x40".to_string(), GeneratorImage::unknown()),
            ("x48".to_string(), GeneratorImage::unknown()),
            (
                "x60".to_string(),
                GeneratorImage::Unknown {
                    excluded: vec![anchor],
                },
            ),
        ],
    )
}

/// `i2*: H*(BE8) -> H*(BE6)`.
pub fn i2_star(p: Prime) -> Result<AlgebraMap> {
    require_large_prime(p)?;
    let be8 = algebras::be8(p)?;
    let be6 = algebras::be6(p)?;
    AlgebraMap::new(
        "i2*",
        &be8,
        &be6,
        [
            exact(&be6, "x4", "x4")?,
            exact(&be6, "x16", "x16")?,
            exact(&be6, "x24", "x24")?,
            (
                "x28".to_string(),
                GeneratorImage::Modulo {
                    image: Polynomial::parse(&be6, I2_X28)?,
                    ideal: GeneratorIdeal::by_names(&be6, &["x4"])?,
                },
            ),
            (
                "x36".to_string(),
                GeneratorImage::Modulo {
                    image: Polynomial::parse(&be6, I2_X36)?,
                    ideal: GeneratorIdeal::by_names(&be6, &["x4", "x12"])?,
                },
            ),
            ("x40".to_string(), GeneratorImage::unknown()),
            ("x48".to_string(), GeneratorImage::unknown()),
            ("x60".to_string(), GeneratorImage::unknown()),
        ],
    )
}

/// `i1*: H*(BSO(15)) -> H*(BSO(10))`, the standard inclusion.
pub fn i1_star(p: Prime) -> Result<AlgebraMap> {
    let bso15 = algebras::bso_odd(7, p)?;
    let bso10 = algebras::bso_even(5, p)?;
    AlgebraMap::from_text(
        "i1*",
        &bso15,
        &bso10,
        &[
            ("p1", "p1"),
            ("p2", "p2"),
            ("p3", "p3"),
            ("p4", "p4"),
            ("p5", "e5^2"),
            ("p6", "0"),
            ("p7", "0"),
        ],
    )
}

/// `j1*: H*(BE6) -> H*(BSO(10))`. The images of x10, x12, x18 are the
/// published ones; those of x4, x16, x24 are forced by the square as
/// `i1* j2*` of the same-named BE8 classes.
pub fn j1_star(p: Prime) -> Result<AlgebraMap> {
    require_large_prime(p)?;
    let be6 = algebras::be6(p)?;
    let bso10 = algebras::bso_even(5, p)?;
    let i1 = i1_star(p)?;
    let bso15 = i1.source().clone();
    let through =
        |text: &str| -> Result<Polynomial> { i1.apply(&Polynomial::parse(&bso15, text)?) };
    AlgebraMap::new(
        "j1*",
        &be6,
        &bso10,
        [
            ("x4".to_string(), GeneratorImage::Exact(through(J2_X4)?)),
            exact(&bso10, "x10", J1_X10)?,
            exact(&bso10, "x12", J1_X12)?,
            ("x16".to_string(), GeneratorImage::Exact(through(J2_X16)?)),
            exact(&bso10, "x18", J1_X18)?,
            ("x24".to_string(), GeneratorImage::Exact(through(J2_X24)?)),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn i2_x28_residues_at_13() {
        let f = i2_star(prime(13)).unwrap();
        match f.image(f.source().require("x28").unwrap()) {
            GeneratorImage::Modulo { image, .. } => {
                assert_eq!(image.to_string(), "x18*x10 + 11*x16*x12");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn small_primes_are_refused() {
        assert!(matches!(
            j2_star(prime(5)),
            Err(Error::UnsupportedPrime { p: 5, .. })
        ));
        assert!(matches!(
            i2_star(prime(3)),
            Err(Error::UnsupportedPrime { .. })
        ));
    }

    /// `j1* i2* = i1* j2*` on the classes where both sides are computable,
    /// modulo the ideals the printed data is known to respect.
    #[test]
    fn square_commutes_where_data_is_complete() {
        for p in [7u64, 11, 13, 17, 19, 23] {
            let p = prime(p);
            let (j2, i2, i1, j1) = (
                j2_star(p).unwrap(),
                i2_star(p).unwrap(),
                i1_star(p).unwrap(),
                j1_star(p).unwrap(),
            );
            let be8 = j2.source().clone();
            let bso10 = i1.target().clone();
            let p1 = GeneratorIdeal::by_names(&bso10, &["p1"]).unwrap();
            let p1p3 = GeneratorIdeal::by_names(&bso10, &["p1", "p3"]).unwrap();
            let bso15_p1 = GeneratorIdeal::by_names(j2.target(), &["p1"]).unwrap();
            let be6_x4 = GeneratorIdeal::by_names(i2.target(), &["x4"]).unwrap();
            let be6_x4x12 = GeneratorIdeal::by_names(i2.target(), &["x4", "x12"]).unwrap();
            for (g, left_q, mid_q, right_q) in [
                (
                    "x4",
                    &GeneratorIdeal::empty(),
                    &GeneratorIdeal::empty(),
                    &GeneratorIdeal::empty(),
                ),
                (
                    "x16",
                    &GeneratorIdeal::empty(),
                    &GeneratorIdeal::empty(),
                    &GeneratorIdeal::empty(),
                ),
                (
                    "x24",
                    &GeneratorIdeal::empty(),
                    &GeneratorIdeal::empty(),
                    &GeneratorIdeal::empty(),
                ),
                ("x28", &p1, &GeneratorIdeal::empty(), &be6_x4),
                ("x36", &p1p3, &bso15_p1, &be6_x4x12),
            ] {
                let x = Polynomial::named(&be8, g).unwrap();
                let left = i1
                    .apply(&j2.apply_mod(&x, mid_q).unwrap())
                    .unwrap()
                    .reduce_mod_ideal(left_q);
                let right = j1
                    .apply(&i2.apply_mod(&x, right_q).unwrap())
                    .unwrap()
                    .reduce_mod_ideal(left_q);
                assert_eq!(left, right, "{g} at p = {}", p.value());
            }
        }
    }

    /// Without the ideal the printed x28 image disagrees with the square.
    #[test]
    fn printed_x28_image_is_not_exact() {
        let p = prime(13);
        let (j2, i1, j1) = (
            j2_star(p).unwrap(),
            i1_star(p).unwrap(),
            j1_star(p).unwrap(),
        );
        let be6 = j1.source().clone();
        let x28 = Polynomial::named(j2.source(), "x28").unwrap();
        let left = i1.apply(&j2.apply(&x28).unwrap()).unwrap();
        let right = j1.apply(&Polynomial::parse(&be6, I2_X28).unwrap()).unwrap();
        assert_ne!(left, right);
    }
}
