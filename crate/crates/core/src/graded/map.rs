use std::collections::HashMap;
use std::sync::Arc;

use super::{same_algebra, GeneratorIdeal, GradedAlgebra, Monomial, Polynomial};
use crate::error::{Error, Result};

/// What is known about the image of one source generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorImage {
    Exact(Polynomial),
    /// Known only modulo a generator ideal of the target.
    Modulo {
        image: Polynomial,
        ideal: GeneratorIdeal,
    },
    /// Not known; the listed target monomials are known not to occur.
    Unknown {
        excluded: Vec<Monomial>,
    },
}

impl GeneratorImage {
    pub fn unknown() -> GeneratorImage {
        GeneratorImage::Unknown {
            excluded: Vec::new(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, GeneratorImage::Exact(_))
    }
}

/// Degree-preserving homomorphism of graded algebras given on generators.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    label: String,
    source: Arc<GradedAlgebra>,
    target: Arc<GradedAlgebra>,
    images: Vec<GeneratorImage>,
}

impl AlgebraMap {
    /// `images` is keyed by source generator name; every generator must
    /// appear exactly once.
    pub fn new(
        label: impl Into<String>,
        source: &Arc<GradedAlgebra>,
        target: &Arc<GradedAlgebra>,
        images: impl IntoIterator<Item = (String, GeneratorImage)>,
    ) -> Result<AlgebraMap> {
        let label = label.into();
        let mut slots: Vec<Option<GeneratorImage>> = vec![None; source.len()];
        for (name, image) in images {
            let idx = source.require(&name)?;
            let degree = source.degree_of(idx);
            let poly = match &image {
                GeneratorImage::Exact(p) => Some(p),
                GeneratorImage::Modulo { image, .. } => Some(image),
                GeneratorImage::Unknown { .. } => None,
            };
            if let Some(p) = poly {
                if !same_algebra(p.algebra(), target) {
                    return Err(Error::AlgebraMismatch);
                }
                p.require_degree(degree)?;
            }
            if slots[idx].replace(image).is_some() {
                return Err(Error::BadPresentation(format!(
                    "{label}: image of {name} given twice"
                )));
            }
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| {
                    Error::BadPresentation(format!("{label}: no image for {}", source.name_of(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraMap {
            label,
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
        })
    }

    /// Convenience constructor from `(generator, polynomial text)` pairs,
    /// all images exact.
    pub fn from_text(
        label: impl Into<String>,
        source: &Arc<GradedAlgebra>,
        target: &Arc<GradedAlgebra>,
        images: &[(&str, &str)],
    ) -> Result<AlgebraMap> {
        let parsed = images
            .iter()
            .map(|(g, text)| {
                Ok((
                    g.to_string(),
                    GeneratorImage::Exact(Polynomial::parse(target, text)?),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraMap::new(label, source, target, parsed)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> &Arc<GradedAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedAlgebra> {
        &self.target
    }

    pub fn image(&self, index: usize) -> &GeneratorImage {
        &self.images[index]
    }

    pub fn images(&self) -> &[GeneratorImage] {
        &self.images
    }

    pub fn is_exact(&self) -> bool {
        self.images.iter().all(GeneratorImage::is_exact)
    }

    /// Image of generator `index` usable modulo `quotient`, if any.
    fn usable_image(&self, index: usize, quotient: &GeneratorIdeal) -> Result<Polynomial> {
        match &self.images[index] {
            GeneratorImage::Exact(p) => Ok(p.reduce_mod_ideal(quotient)),
            GeneratorImage::Modulo { image, ideal } if quotient.is_superset(ideal) => {
                Ok(image.reduce_mod_ideal(quotient))
            }
            GeneratorImage::Modulo { ideal, .. } => Err(Error::UnknownImage(format!(
                "{} under {} (known only modulo {})",
                self.source.name_of(index),
                self.label,
                ideal.display(&self.target)
            ))),
            GeneratorImage::Unknown { .. } => Err(Error::UnknownImage(format!(
                "{} under {}",
                self.source.name_of(index),
                self.label
            ))),
        }
    }

    /// True when the monomial can be mapped modulo `quotient`.
    pub fn can_apply(&self, m: &Monomial, quotient: &GeneratorIdeal) -> bool {
        m.iter().all(|(g, _)| match &self.images[g] {
            GeneratorImage::Exact(_) => true,
            GeneratorImage::Modulo { ideal, .. } => quotient.is_superset(ideal),
            GeneratorImage::Unknown { .. } => false,
        })
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.apply_mod(p, &GeneratorIdeal::empty())
    }

    /// Applies the map and reduces the result modulo `quotient` (an ideal
    /// of the target). Generators known only modulo an ideal contained in
    /// `quotient` are usable here.
    pub fn apply_mod(&self, p: &Polynomial, quotient: &GeneratorIdeal) -> Result<Polynomial> {
        if !same_algebra(p.algebra(), &self.source) {
            return Err(Error::AlgebraMismatch);
        }
        let mut powers = PowerCache::new(self, quotient);
        let mut out = Polynomial::zero(&self.target);
        for (m, c) in p.raw_terms() {
            let img = powers.monomial(m)?;
            out = out.add(&img.scale(self.target.modulus().element(c as i64)))?;
        }
        Ok(out)
    }

    pub fn apply_monomial_mod(
        &self,
        m: &Monomial,
        quotient: &GeneratorIdeal,
    ) -> Result<Polynomial> {
        PowerCache::new(self, quotient).monomial(m)
    }
}

/// Memoizes generator-image powers while mapping many monomials.
pub(crate) struct PowerCache<'a> {
    map: &'a AlgebraMap,
    quotient: &'a GeneratorIdeal,
    cache: HashMap<(usize, u32), Polynomial>,
}

impl<'a> PowerCache<'a> {
    pub(crate) fn new(map: &'a AlgebraMap, quotient: &'a GeneratorIdeal) -> PowerCache<'a> {
        PowerCache {
            map,
            quotient,
            cache: HashMap::new(),
        }
    }

    fn power(&mut self, g: usize, e: u32) -> Result<Polynomial> {
        if let Some(p) = self.cache.get(&(g, e)) {
            return Ok(p.clone());
        }
        let p = if e == 1 {
            self.map.usable_image(g, self.quotient)?
        } else {
            let lower = self.power(g, e - 1)?;
            let base = self.power(g, 1)?;
            lower.mul_mod(&base, self.quotient)?
        };
        self.cache.insert((g, e), p.clone());
        Ok(p)
    }

    pub(crate) fn monomial(&mut self, m: &Monomial) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.map.target).reduce_mod_ideal(self.quotient);
        if acc.is_zero() {
            return Ok(acc);
        }
        for (g, e) in m.iter() {
            let pw = self.power(g, e)?;
            acc = acc.mul_mod(&pw, self.quotient)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Prime;

    fn c_star(p: u64) -> AlgebraMap {
        let p = Prime::new(p).unwrap();
        let su = GradedAlgebra::indexed("BSU(7)", "c", 2..=7, 2, p).unwrap();
        let so = GradedAlgebra::indexed("BSO(7)", "p", 1..=3, 4, p).unwrap();
        AlgebraMap::from_text(
            "c*",
            &su,
            &so,
            &[
                ("c2", "-p1"),
                ("c3", "0"),
                ("c4", "p2"),
                ("c5", "0"),
                ("c6", "-p3"),
                ("c7", "0"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn odd_chern_classes_die() {
        let f = c_star(5);
        let x = Polynomial::parse(f.source(), "c3*c2").unwrap();
        assert!(f.apply(&x).unwrap().is_zero());
        let y = Polynomial::parse(f.source(), "c2^2").unwrap();
        assert_eq!(
            f.apply(&y).unwrap(),
            Polynomial::parse(f.target(), "p1^2").unwrap()
        );
    }

    #[test]
    fn rejects_wrong_degree_or_missing_images() {
        let p = Prime::new(5).unwrap();
        let a = GradedAlgebra::indexed("A", "c", 2..=3, 2, p).unwrap();
        let b = GradedAlgebra::indexed("B", "p", 1..=1, 4, p).unwrap();
        assert!(AlgebraMap::from_text("f", &a, &b, &[("c2", "p1"), ("c3", "p1")]).is_err());
        assert!(AlgebraMap::from_text("f", &a, &b, &[("c2", "p1")]).is_err());
    }

    #[test]
    fn modulo_images_need_a_large_enough_quotient() {
        let p = Prime::new(7).unwrap();
        let a = GradedAlgebra::indexed("A", "y", 1..=2, 4, p).unwrap();
        let b = GradedAlgebra::indexed("B", "q", 1..=2, 4, p).unwrap();
        let q1 = GeneratorIdeal::by_names(&b, &["q1"]).unwrap();
        let f = AlgebraMap::new(
            "f",
            &a,
            &b,
            [
                (
                    "y1".to_string(),
                    GeneratorImage::Exact(Polynomial::parse(&b, "q1").unwrap()),
                ),
                (
                    "y2".to_string(),
                    GeneratorImage::Modulo {
                        image: Polynomial::parse(&b, "q2").unwrap(),
                        ideal: q1.clone(),
                    },
                ),
            ],
        )
        .unwrap();
        let y2 = Polynomial::parse(&a, "y2 + y1^2").unwrap();
        assert!(matches!(f.apply(&y2), Err(Error::UnknownImage(_))));
        assert_eq!(
            f.apply_mod(&y2, &q1).unwrap(),
            Polynomial::parse(&b, "q2").unwrap()
        );
    }
}
