//! Groups, pairs, restriction maps, thresholds and cited facts.

pub mod algebras;
pub mod exceptional;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::graded::{AlgebraMap, GradedAlgebra, Polynomial};
use crate::steenrod::{RootAction, RootModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    SU,
    SOOdd,
    SOEven,
    Sp,
    Spin8,
    G2,
    F4,
    E6,
    E8,
}

/// A compact Lie group together with its mod-p classifying-space data.
#[derive(Debug, Clone)]
pub struct GroupModel {
    family: Family,
    parameter: u32,
    prime: Prime,
    label: String,
    algebra: Option<Arc<GradedAlgebra>>,
    type_sequence: Vec<u32>,
    root_model: Option<RootModel>,
}

impl GroupModel {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> u32 {
        self.parameter
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `None` when cohomology is not modeled at this prime (p = 2, or the
    /// exceptional series at p <= 5).
    pub fn algebra(&self) -> Option<&Arc<GradedAlgebra>> {
        self.algebra.as_ref()
    }

    pub fn require_algebra(&self) -> Result<&Arc<GradedAlgebra>> {
        self.algebra
            .as_ref()
            .ok_or_else(|| Error::UnsupportedPrime {
                p: self.prime.value(),
                what: format!("cohomology of B{}", self.label),
            })
    }

    pub fn type_sequence(&self) -> &[u32] {
        &self.type_sequence
    }

    pub fn root_model(&self) -> Option<RootModel> {
        self.root_model
    }

    /// `G` is p-regular when `p > n_r`.
    pub fn is_p_regular(&self) -> bool {
        self.prime.value() > *self.type_sequence.last().unwrap_or(&0) as u64
    }

    /// Class-name prefix for the root model.
    pub fn class_prefix(&self) -> &'static str {
        match self.family {
            Family::SU => "c",
            Family::Sp => "q",
            _ => "p",
        }
    }

    /// 𝒫¹ through the splitting principle, if the group has a root model.
    pub fn root_action(&self) -> Result<RootAction> {
        let model = self
            .root_model
            .ok_or_else(|| Error::NoRootModel(format!("B{}", self.label)))?;
        RootAction::new(model, self.require_algebra()?, self.class_prefix())
    }
}

fn odd_or_unsupported(p: Prime, what: &str) -> Result<()> {
    if p.is_odd() {
        Ok(())
    } else {
        Err(Error::UnsupportedPrime {
            p: 2,
            what: what.to_string(),
        })
    }
}

/// Builds a group model; `with_algebra = false` skips the prime checks
/// for cohomology and leaves the algebra empty.
fn group_model(family: Family, parameter: u32, p: Prime, with_algebra: bool) -> Result<GroupModel> {
    let n = parameter;
    let (label, types, root_model): (String, Vec<u32>, Option<RootModel>) = match family {
        Family::SU => {
            if n < 2 {
                return Err(Error::BadParameter(format!("SU(n) needs n >= 2, got {n}")));
            }
            (
                format!("SU({n})"),
                (2..=n).collect(),
                Some(RootModel::Chern { n, special: true }),
            )
        }
        Family::SOOdd => {
            if n < 1 {
                return Err(Error::BadParameter("SO(2n+1) needs n >= 1".into()));
            }
            (
                format!("SO({})", 2 * n + 1),
                (1..=n).map(|i| 2 * i).collect(),
                Some(RootModel::Pontrjagin { n }),
            )
        }
        Family::SOEven => {
            if n < 2 {
                return Err(Error::BadParameter(format!("SO(2n) needs n >= 2, got {n}")));
            }
            let mut t: Vec<u32> = (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect();
            t.sort_unstable();
            (
                format!("SO({})", 2 * n),
                t,
                Some(RootModel::PontrjaginEuler { n }),
            )
        }
        Family::Sp => {
            if n < 1 {
                return Err(Error::BadParameter("Sp(n) needs n >= 1".into()));
            }
            (
                format!("Sp({n})"),
                (1..=n).map(|i| 2 * i).collect(),
                Some(RootModel::Pontrjagin { n }),
            )
        }
        Family::Spin8 => (
            "Spin(8)".into(),
            vec![2, 4, 4, 6],
            Some(RootModel::PontrjaginEuler { n: 4 }),
        ),
        Family::G2 => ("G2".into(), vec![2, 6], None),
        Family::F4 => ("F4".into(), vec![2, 6, 8, 12], None),
        Family::E6 => ("E6".into(), vec![2, 5, 6, 8, 9, 12], None),
        Family::E8 => ("E8".into(), vec![2, 8, 12, 14, 18, 20, 24, 30], None),
    };
    let parameter = match family {
        Family::SU | Family::SOOdd | Family::SOEven | Family::Sp => n,
        _ => 0,
    };
    let algebra = if with_algebra {
        odd_or_unsupported(p, &format!("cohomology of B{label}"))?;
        if matches!(family, Family::E6 | Family::E8) && p.value() <= 5 {
            return Err(Error::UnsupportedPrime {
                p: p.value(),
                what: format!("cohomology of B{label} (needs p > 5)"),
            });
        }
        Some(match family {
            Family::SU => algebras::bsu(n, p)?,
            Family::SOOdd => algebras::bso_odd(n, p)?,
            Family::SOEven => algebras::bso_even(n, p)?,
            Family::Sp => algebras::bsp(n, p)?,
            Family::Spin8 => algebras::bspin8(p)?,
            Family::G2 => algebras::bg2(p)?,
            Family::F4 => algebras::bf4(p)?,
            Family::E6 => algebras::be6(p)?,
            Family::E8 => algebras::be8(p)?,
        })
    } else {
        None
    };
    Ok(GroupModel {
        family,
        parameter,
        prime: p,
        label,
        algebra,
        type_sequence: types,
        root_model,
    })
}

/// A group with its cohomology at an odd prime (p > 5 for E6, E8).
pub fn instantiate_group(family: Family, parameter: u32, p: Prime) -> Result<GroupModel> {
    group_model(family, parameter, p, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairFamily {
    /// (SU(2n+1), SO(2n+1))
    SuSo,
    /// (SU(2n), Sp(n))
    SuSp,
    /// (SO(2n), SO(2n-1))
    SoEven,
    /// (E6, F4)
    E6F4,
    /// (Spin(8), G2)
    Spin8G2,
}

impl PairFamily {
    pub const ALL: [PairFamily; 5] = [
        PairFamily::SuSo,
        PairFamily::SuSp,
        PairFamily::SoEven,
        PairFamily::E6F4,
        PairFamily::Spin8G2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PairFamily::SuSo => "SU_SO",
            PairFamily::SuSp => "SU_Sp",
            PairFamily::SoEven => "SO_even",
            PairFamily::E6F4 => "E6_F4",
            PairFamily::Spin8G2 => "Spin8_G2",
        }
    }

    pub fn has_parameter(self) -> bool {
        matches!(
            self,
            PairFamily::SuSo | PairFamily::SuSp | PairFamily::SoEven
        )
    }

    /// Smallest admissible parameter.
    pub fn min_parameter(self) -> u32 {
        match self {
            PairFamily::SuSo => 1,
            PairFamily::SuSp => 2,
            PairFamily::SoEven => 2,
            _ => 0,
        }
    }

    /// Closed-form `a_k`.
    pub fn a(self, n: u32, k: u32) -> i64 {
        let (n, k) = (n as i64, k as i64);
        match self {
            PairFamily::SuSo => k * (2 * n + 1),
            PairFamily::SuSp => 2 * k * n - 1,
            PairFamily::SoEven => 2 * (k - 1) * (n - 1) + n,
            PairFamily::E6F4 => 12 * k - 5,
            PairFamily::Spin8G2 => 6 * k - 2,
        }
    }

    /// `(m, l)` as tabulated.
    pub fn m_l(self, n: u32) -> (u32, u32) {
        match self {
            PairFamily::SuSo => (2 * n + 1, 2 * n + 1),
            PairFamily::SuSp => (2 * n, 2 * n - 1),
            PairFamily::SoEven => (2 * n - 2, n),
            PairFamily::E6F4 => (12, 9),
            PairFamily::Spin8G2 => (6, 4),
        }
    }

    /// `b_k = max((k-1)m + l, kl)`.
    pub fn b(self, n: u32, k: u32) -> i64 {
        let (m, l) = self.m_l(n);
        let (m, l, k) = (m as i64, l as i64, k as i64);
        ((k - 1) * m + l).max(k * l)
    }

    /// Whether `p` is in the prime range of the table row.
    pub fn prime_allowed(self, p: u64) -> bool {
        match self {
            PairFamily::E6F4 => p >= 5,
            PairFamily::Spin8G2 => p != 3,
            _ => p >= 3,
        }
    }

    fn display_pair(self, n: u32) -> String {
        match self {
            PairFamily::SuSo => format!("(SU({}),SO({}))", 2 * n + 1, 2 * n + 1),
            PairFamily::SuSp => format!("(SU({}),Sp({n}))", 2 * n),
            PairFamily::SoEven => format!("(SO({}),SO({}))", 2 * n, 2 * n - 1),
            PairFamily::E6F4 => "(E6,F4)".into(),
            PairFamily::Spin8G2 => "(Spin(8),G2)".into(),
        }
    }
}

impl fmt::Display for PairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PairFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<PairFamily> {
        PairFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParameter(format!("unknown pair family `{s}`")))
    }
}

pub fn a_threshold(pair: &PairModel, k: u32) -> i64 {
    pair.family.a(pair.parameter, k)
}

pub fn b_threshold(pair: &PairModel, k: u32) -> i64 {
    pair.family.b(pair.parameter, k)
}

/// A non-A_k statement established by a homotopy argument rather than by
/// the cohomology criterion. It covers every `k >= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactEntry {
    pub prime: u64,
    pub k: u32,
    pub citation: &'static str,
    pub note: &'static str,
}

pub const CITE_A1: &str = "a_1";
pub const CITE_SAMELSON_SPIN8: &str = "Samelson product Spin(8)";
pub const CITE_E6_P7: &str = "a_k (E6 at p = 7)";
pub const CITE_SO_P_EQ_N: &str = "a_k (SO(2n) at p = n)";
pub const CITE_C_N: &str = "C_n";

fn facts_for(family: PairFamily, n: u32, p: u64) -> Vec<FactEntry> {
    let mut out = Vec::new();
    let a1 = family.a(n, 1);
    if (p as i64) < a1 && family != PairFamily::SoEven {
        out.push(FactEntry {
            prime: p,
            k: 2,
            citation: if family == PairFamily::Spin8G2 { CITE_SAMELSON_SPIN8 } else { CITE_A1 },
            note: if family == PairFamily::Spin8G2 {
                "q_*<[iota_7],[iota_7]> is nonzero in pi_14(G2), so q is not an H-map"
            } else {
                "p < a_1: a Samelson product with one factor killed by q survives, so q is not an H-map"
            },
        });
    }
    if family == PairFamily::E6F4 && p == 7 {
        out.push(FactEntry {
            prime: 7,
            k: 2,
            citation: CITE_E6_P7,
            note: "E6 splits as F4 x S^9 x S^17; the Samelson square of the S^17 inclusion survives q",
        });
    }
    if family == PairFamily::SoEven && p == n as u64 {
        out.push(FactEntry {
            prime: p,
            k: 2,
            citation: CITE_SO_P_EQ_N,
            note: "p = n: the Samelson square of the S^(2n-1) inclusion survives q",
        });
    }
    out
}

/// One of the five pair families at a parameter and prime.
#[derive(Debug, Clone)]
pub struct PairModel {
    family: PairFamily,
    parameter: u32,
    prime: Prime,
    g: GroupModel,
    h: GroupModel,
    restriction: Option<AlgebraMap>,
    quotient_types: Vec<u32>,
    facts: Vec<FactEntry>,
}

impl PairModel {
    pub fn family(&self) -> PairFamily {
        self.family
    }

    pub fn parameter(&self) -> u32 {
        self.parameter
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn g(&self) -> &GroupModel {
        &self.g
    }

    pub fn h(&self) -> &GroupModel {
        &self.h
    }

    /// `j*: H*(BG) -> H*(BH)`; `None` where cohomology is not modeled.
    pub fn restriction(&self) -> Option<&AlgebraMap> {
        self.restriction.as_ref()
    }

    pub fn quotient_types(&self) -> &[u32] {
        &self.quotient_types
    }

    pub fn m_l(&self) -> (u32, u32) {
        self.family.m_l(self.parameter)
    }

    pub fn facts(&self) -> &[FactEntry] {
        &self.facts
    }

    pub fn label(&self) -> String {
        self.family.display_pair(self.parameter)
    }

    /// The fact covering `k`, if any.
    pub fn fact_for(&self, k: u32) -> Option<&FactEntry> {
        self.facts.iter().find(|f| f.k <= k)
    }
}

/// Instantiates a pair; `parameter` is ignored for the exceptional rows.
pub fn instantiate_pair(family: PairFamily, parameter: u32, p: Prime) -> Result<PairModel> {
    let pv = p.value();
    if !family.prime_allowed(pv) {
        return Err(Error::UnsupportedPrime {
            p: pv,
            what: format!("pair {}", family.name()),
        });
    }
    let n = if family.has_parameter() { parameter } else { 0 };
    if family == PairFamily::SuSp && n == 1 {
        return Err(Error::ExcludedPair("(SU(2),Sp(1))".into()));
    }
    if family.has_parameter() && n < family.min_parameter() {
        return Err(Error::BadParameter(format!(
            "{} needs parameter >= {}, got {n}",
            family.name(),
            family.min_parameter()
        )));
    }
    let with_algebra = match family {
        PairFamily::E6F4 => pv > 5,
        _ => p.is_odd(),
    };
    let (gf, gn, hf, hn, quotient) = match family {
        PairFamily::SuSo => (
            Family::SU,
            2 * n + 1,
            Family::SOOdd,
            n,
            (1..=n).map(|i| 2 * i + 1).collect(),
        ),
        PairFamily::SuSp => (
            Family::SU,
            2 * n,
            Family::Sp,
            n,
            (1..n).map(|i| 2 * i + 1).collect(),
        ),
        PairFamily::SoEven => (Family::SOEven, n, Family::SOOdd, n - 1, vec![n]),
        PairFamily::E6F4 => (Family::E6, 0, Family::F4, 0, vec![5, 9]),
        PairFamily::Spin8G2 => (Family::Spin8, 0, Family::G2, 0, vec![4, 4]),
    };
    let g = group_model(gf, gn, p, with_algebra)?;
    let mut h = group_model(hf, hn, p, with_algebra)?;
    // H = SO(2n-1) is modeled on SO(2(n-1)+1).
    if family == PairFamily::SoEven {
        h.label = format!("SO({})", 2 * n - 1);
    }
    let restriction = if with_algebra {
        Some(restriction_map(family, n, &g, &h)?)
    } else {
        None
    };
    if let Some(r) = &restriction {
        check_generator_hypothesis(r)?;
    }
    Ok(PairModel {
        family,
        parameter: n,
        prime: p,
        g,
        h,
        restriction,
        quotient_types: quotient,
        facts: facts_for(family, n, pv),
    })
}

fn restriction_map(
    family: PairFamily,
    n: u32,
    g: &GroupModel,
    h: &GroupModel,
) -> Result<AlgebraMap> {
    let ga = g.require_algebra()?;
    let ha = h.require_algebra()?;
    let images: Vec<(String, String)> = match family {
        PairFamily::SuSo | PairFamily::SuSp => {
            let prefix = h.class_prefix();
            let top = if family == PairFamily::SuSo {
                2 * n + 1
            } else {
                2 * n
            };
            (2..=top)
                .map(|i| {
                    let img = if i % 2 == 1 {
                        "0".to_string()
                    } else if (i / 2) % 2 == 1 {
                        format!("-{prefix}{}", i / 2)
                    } else {
                        format!("{prefix}{}", i / 2)
                    };
                    (format!("c{i}"), img)
                })
                .collect()
        }
        PairFamily::SoEven => (1..n)
            .map(|i| (format!("p{i}"), format!("p{i}")))
            .chain(std::iter::once((format!("e{n}"), "0".to_string())))
            .collect(),
        PairFamily::E6F4 => ["x4", "x12", "x16", "x24"]
            .iter()
            .map(|x| (x.to_string(), x.to_string()))
            .chain(
                ["x10", "x18"]
                    .iter()
                    .map(|x| (x.to_string(), "0".to_string())),
            )
            .collect(),
        PairFamily::Spin8G2 => vec![
            ("p1".into(), "x4".into()),
            ("p2".into(), "0".into()),
            ("p3".into(), "x12".into()),
            ("e4".into(), "0".into()),
        ],
    };
    let pairs: Vec<(&str, &str)> = images
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    AlgebraMap::from_text("j*", ga, ha, &pairs)
}

/// Every generator must map to ± a generator or to zero, and distinct
/// generators to distinct generators.
fn check_generator_hypothesis(f: &AlgebraMap) -> Result<()> {
    let mut hit = vec![false; f.target().len()];
    for i in 0..f.source().len() {
        if let Some((j, _)) = generator_image(f, i)? {
            if std::mem::replace(&mut hit[j], true) {
                return Err(Error::BadPresentation(format!(
                    "{}: generator {} hit twice",
                    f.label(),
                    f.target().name_of(j)
                )));
            }
        }
    }
    if hit.iter().any(|h| !h) {
        return Err(Error::BadPresentation(format!(
            "{}: not onto the generators",
            f.label()
        )));
    }
    Ok(())
}

/// `Some((target generator, sign))` when generator `i` maps to `±y`,
/// `None` when it maps to zero.
pub fn generator_image(f: &AlgebraMap, i: usize) -> Result<Option<(usize, i64)>> {
    let img = match f.image(i) {
        crate::graded::GeneratorImage::Exact(p) => p,
        _ => return Err(Error::UnknownImage(f.source().name_of(i).to_string())),
    };
    if img.is_zero() {
        return Ok(None);
    }
    let terms = img.terms();
    if terms.len() == 1 {
        let (m, c) = &terms[0];
        let gens: Vec<(usize, u32)> = m.iter().collect();
        if gens.len() == 1 && gens[0].1 == 1 && (c.residue() == 1 || c.signed() == -1) {
            return Ok(Some((gens[0].0, c.signed())));
        }
    }
    Err(Error::BadPresentation(format!(
        "{}: image of {} is {}, not ± a generator",
        f.label(),
        f.source().name_of(i),
        img
    )))
}

/// Naturality maps between classical models: `c*`, `c'*`, and
/// `j*: BSO(2n+1) -> BSO(2n)` with `p_n -> e_n^2`.
pub fn c_star(n: u32, p: Prime) -> Result<AlgebraMap> {
    let su = algebras::bsu(2 * n + 1, p)?;
    let so = algebras::bso_odd(n, p)?;
    chern_to_pontrjagin("c*", &su, &so, "p", 2 * n + 1)
}

pub fn c_prime_star(n: u32, p: Prime) -> Result<AlgebraMap> {
    let su = algebras::bsu(2 * n, p)?;
    let sp = algebras::bsp(n, p)?;
    chern_to_pontrjagin("c'*", &su, &sp, "q", 2 * n)
}

fn chern_to_pontrjagin(
    label: &str,
    su: &Arc<GradedAlgebra>,
    target: &Arc<GradedAlgebra>,
    prefix: &str,
    top: u32,
) -> Result<AlgebraMap> {
    let images: Vec<(String, String)> = (2..=top)
        .map(|i| {
            let img = match (i % 2, (i / 2) % 2) {
                (1, _) => "0".to_string(),
                (_, 1) => format!("-{prefix}{}", i / 2),
                _ => format!("{prefix}{}", i / 2),
            };
            (format!("c{i}"), img)
        })
        .collect();
    let pairs: Vec<(&str, &str)> = images
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    AlgebraMap::from_text(label, su, target, &pairs)
}

pub fn j_star_orthogonal(n: u32, p: Prime) -> Result<AlgebraMap> {
    let odd = algebras::bso_odd(n, p)?;
    let even = algebras::bso_even(n, p)?;
    let images: Vec<(String, String)> = (1..=n)
        .map(|i| {
            let img = if i == n {
                format!("e{n}^2")
            } else {
                format!("p{i}")
            };
            (format!("p{i}"), img)
        })
        .collect();
    let pairs: Vec<(&str, &str)> = images
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    AlgebraMap::from_text("j*", &odd, &even, &pairs)
}

/// The generator of `G` restricting to `±y` for each generator `y` of `H`,
/// listed in canonical order of `H`.
pub fn restriction_correspondence(pair: &PairModel) -> Result<Vec<(usize, usize, i64)>> {
    let f = pair.restriction().ok_or_else(|| Error::UnsupportedPrime {
        p: pair.prime().value(),
        what: format!("cohomology of {}", pair.label()),
    })?;
    let mut out = Vec::new();
    for i in 0..f.source().len() {
        if let Some((j, s)) = generator_image(f, i)? {
            out.push((j, i, s));
        }
    }
    out.sort();
    Ok(out)
}

/// `j*` applied to one class of `H*(BG)`.
pub fn restrict(pair: &PairModel, poly: &Polynomial) -> Result<Polynomial> {
    pair.restriction()
        .ok_or_else(|| Error::UnsupportedPrime {
            p: pair.prime().value(),
            what: format!("cohomology of {}", pair.label()),
        })?
        .apply(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn group_examples() {
        let su7 = instantiate_group(Family::SU, 7, prime(5)).unwrap();
        assert_eq!(su7.algebra().unwrap().to_string(), "Z/5[c2,c3,c4,c5,c6,c7]");
        assert_eq!(su7.type_sequence(), &[2, 3, 4, 5, 6, 7]);
        let so8 = instantiate_group(Family::SOEven, 4, prime(7)).unwrap();
        assert_eq!(so8.algebra().unwrap().to_string(), "Z/7[p1,e4,p2,p3]");
        assert_eq!(so8.type_sequence(), &[2, 4, 4, 6]);
        let e6 = instantiate_group(Family::E6, 0, prime(7)).unwrap();
        assert_eq!(
            e6.algebra().unwrap().to_string(),
            "Z/7[x4,x10,x12,x16,x18,x24]"
        );
        assert!(matches!(
            instantiate_group(Family::E8, 0, prime(5)),
            Err(Error::UnsupportedPrime { .. })
        ));
        assert!(matches!(
            instantiate_group(Family::SU, 1, prime(5)),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn type_sequences_match_generator_degrees() {
        for p in [7u64, 11] {
            for (f, n) in [
                (Family::SU, 6),
                (Family::SOOdd, 4),
                (Family::SOEven, 5),
                (Family::Sp, 3),
            ] {
                let g = instantiate_group(f, n, prime(p)).unwrap();
                let mut degs: Vec<u32> = g
                    .algebra()
                    .unwrap()
                    .generators()
                    .iter()
                    .map(|x| x.degree / 2)
                    .collect();
                degs.sort_unstable();
                assert_eq!(degs, g.type_sequence());
            }
        }
    }

    #[test]
    fn pair_examples() {
        let su_so = instantiate_pair(PairFamily::SuSo, 3, prime(13)).unwrap();
        assert_eq!(su_so.g().label(), "SU(7)");
        assert_eq!(su_so.h().label(), "SO(7)");
        assert_eq!(su_so.m_l(), (7, 7));
        assert_eq!(su_so.quotient_types(), &[3, 5, 7]);
        let e6 = instantiate_pair(PairFamily::E6F4, 0, prime(11)).unwrap();
        assert_eq!(e6.m_l(), (12, 9));
        assert_eq!(e6.quotient_types(), &[5, 9]);
        let spin = instantiate_pair(PairFamily::Spin8G2, 0, prime(2)).unwrap();
        assert!(spin.restriction().is_none());
        assert_eq!(spin.facts()[0].citation, CITE_SAMELSON_SPIN8);
        assert!(matches!(
            instantiate_pair(PairFamily::SuSp, 1, prime(5)),
            Err(Error::ExcludedPair(_))
        ));
        assert!(matches!(
            instantiate_pair(PairFamily::Spin8G2, 0, prime(3)),
            Err(Error::UnsupportedPrime { .. })
        ));
        assert!(matches!(
            instantiate_pair(PairFamily::E6F4, 0, prime(3)),
            Err(Error::UnsupportedPrime { .. })
        ));
        assert!(instantiate_pair(PairFamily::E6F4, 0, prime(5))
            .unwrap()
            .restriction()
            .is_none());
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(PairFamily::E6F4.a(0, 2), 19);
        assert_eq!(PairFamily::Spin8G2.a(0, 3), 16);
        assert_eq!(PairFamily::SoEven.a(5, 2), 13);
        assert_eq!(PairFamily::E6F4.b(0, 2), 21);
        assert_eq!(PairFamily::SuSo.b(3, 2), 14);
        assert_eq!(PairFamily::Spin8G2.b(0, 2), 10);
    }

    #[test]
    fn a_equals_b_except_e6() {
        for family in PairFamily::ALL {
            for n in family.min_parameter().max(1)..=8 {
                for k in 2..=6 {
                    let shift = if family == PairFamily::E6F4 { 2 } else { 0 };
                    assert_eq!(
                        family.a(n, k),
                        family.b(n, k) - shift,
                        "{family} n={n} k={k}"
                    );
                    assert!(family.a(n, k) > family.a(n, k - 1));
                }
            }
        }
    }

    #[test]
    fn types_partition_for_classical_pairs() {
        for (family, n) in [
            (PairFamily::SuSo, 3),
            (PairFamily::SuSp, 3),
            (PairFamily::SoEven, 4),
            (PairFamily::SoEven, 5),
        ] {
            let pair = instantiate_pair(family, n, prime(7)).unwrap();
            let mut joined: Vec<u32> = pair.h().type_sequence().to_vec();
            joined.extend_from_slice(pair.quotient_types());
            joined.sort_unstable();
            assert_eq!(joined, pair.g().type_sequence(), "{family} n={n}");
        }
    }

    #[test]
    fn restrictions_satisfy_generator_hypothesis() {
        for family in PairFamily::ALL {
            let n = family.min_parameter().max(2);
            let pair = instantiate_pair(family, n, prime(7)).unwrap();
            let corr = restriction_correspondence(&pair).unwrap();
            assert_eq!(corr.len(), pair.h().algebra().unwrap().len());
        }
    }

    #[test]
    fn c_star_signs() {
        let f = c_star(3, prime(11)).unwrap();
        let c2sq = Polynomial::parse(f.source(), "c2^2").unwrap();
        assert_eq!(f.apply(&c2sq).unwrap().to_string(), "p1^2");
        let c2c3 = Polynomial::parse(f.source(), "c3*c2").unwrap();
        assert!(f.apply(&c2c3).unwrap().is_zero());
    }
}
