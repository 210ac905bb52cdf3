//! The 𝒫¹ criterion ("P^1 criterion"): a monomial `M` of `𝒫¹x_{m_k}` with
//! `k` factors such that
//!
//! 1. `n_{i_j} > m_k` for `j >= 2`, and `m_k - n_{i_1}` is not a sum of
//!    members of the type of `G`;
//! 2. for every graded map `f: H*(BH) -> H*(BG)` with
//!    `f(y_{m_i}) ≡ ±x_{m_i}` modulo decomposables, no element of `Im f`
//!    contains `M` modulo `I = (x_n : n <= m_k) - x_{n_{i_1}}`;
//!
//! shows that `G -> H` is not an A_k-map.
//!
//! Condition (2) is checked with a generic map: the decomposable part of
//! each `f(y)` carries free coefficients `α`, and the coefficient of `M`
//! in every product of `f`-images must vanish as a polynomial in `α`.
//! Only monomials dividing `M` can contribute to that coefficient, so
//! every partial product is truncated to divisors of `M`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::catalog::{j_star_orthogonal, restriction_correspondence, Family, PairModel};
use crate::error::{Error, Result};
use crate::fp::{FpElement, Prime};
use crate::graded::{GeneratorIdeal, GradedAlgebra, Monomial, MonomialStatus, Polynomial};
use crate::steenrod::{p1_exceptional, p1_wu_chern, p1_wu_pontrjagin, ExceptionalGroup, P1Action};

/// Everything needed to re-check an obstruction independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Half-degree of the H-generator `y_{m_k}`.
    pub m_k: u32,
    /// Name of `x_{m_k}` in `H*(BG)`.
    pub generator: String,
    pub monomial: Monomial,
    pub coefficient: FpElement,
    pub ideal: GeneratorIdeal,
    pub algebra: Arc<GradedAlgebra>,
    /// Number of `α` unknowns in the generic map.
    pub unknowns: usize,
}

impl Witness {
    /// `a*M` as text, e.g. `6*c7^2`.
    pub fn monomial_text(&self) -> String {
        Polynomial::from_terms(&self.algebra, [(self.monomial.clone(), self.coefficient)])
            .to_string()
    }

    pub fn ideal_text(&self) -> String {
        self.ideal.display(&self.algebra)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionVerdict {
    Obstructed(Witness),
    Inconclusive {
        reason: String,
        warnings: Vec<String>,
    },
}

impl CriterionVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, CriterionVerdict::Obstructed(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CriterionVerdict::Obstructed(w) => Some(w),
            _ => None,
        }
    }
}

/// Whether `t > 0` is a sum (with repetition, at least one term) of
/// members of `types`. Zero and negative numbers are not sums.
pub fn is_sum_of_types(t: i64, types: &[u32]) -> bool {
    if t <= 0 {
        return false;
    }
    let t = t as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for s in 1..=t {
        reach[s] = types
            .iter()
            .any(|&a| a as usize <= s && reach[s - a as usize]);
    }
    reach[t]
}

/// Half-degrees of the factors of `m`, ascending, with the generator of
/// the smallest one.
fn factor_degrees(alg: &GradedAlgebra, m: &Monomial) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = m
        .factors()
        .into_iter()
        .map(|g| (alg.degree_of(g) / 2, g))
        .collect();
    out.sort();
    out
}

fn condition_one(alg: &GradedAlgebra, m: &Monomial, m_k: u32, types: &[u32]) -> bool {
    let f = factor_degrees(alg, m);
    let Some(&(first, _)) = f.first() else {
        return false;
    };
    f[1..].iter().all(|&(n, _)| n > m_k) && !is_sum_of_types(m_k as i64 - first as i64, types)
}

fn ideal_for(alg: &GradedAlgebra, m: &Monomial, m_k: u32) -> GeneratorIdeal {
    let first = factor_degrees(alg, m)[0].1;
    GeneratorIdeal::new((0..alg.len()).filter(|&g| g != first && alg.degree_of(g) / 2 <= m_k))
}

/// Polynomial in the `α` unknowns: exponent vector -> coefficient.
type Alpha = BTreeMap<Vec<u32>, u64>;

fn alpha_mul(a: &Alpha, b: &Alpha, p: u64) -> Alpha {
    let mut out = Alpha::new();
    for (ka, &ca) in a {
        for (kb, &cb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            let slot = out.entry(key).or_insert(0);
            *slot = (*slot + ca * cb) % p;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn alpha_add_into(acc: &mut Alpha, b: &Alpha, p: u64) {
    for (k, &c) in b {
        let slot = acc.entry(k.clone()).or_insert(0);
        *slot = (*slot + c) % p;
    }
    acc.retain(|_, c| *c != 0);
}

fn alpha_degree(a: &Alpha) -> u32 {
    a.keys().map(|k| k.iter().sum()).max().unwrap_or(0)
}

/// Terms of a generic `f(y)` restricted to divisors of `M`, indexed by
/// H-generator.
struct GenericMap {
    p: u64,
    unknowns: usize,
    /// Per H-generator: G generator it lifts, and the α-terms `(b, index)`.
    lifts: Vec<(usize, Vec<(Monomial, usize)>)>,
}

impl GenericMap {
    fn new(pair: &PairModel, m: &Monomial) -> Result<GenericMap> {
        let g = pair.g().require_algebra()?;
        let h = pair.h().require_algebra()?;
        let corr = restriction_correspondence(pair)?;
        let mut lifts: Vec<(usize, Vec<(Monomial, usize)>)> =
            vec![(usize::MAX, Vec::new()); h.len()];
        let mut unknowns = 0;
        for (h_idx, g_idx, _) in corr {
            let deg = h.degree_of(h_idx);
            let alphas: Vec<(Monomial, usize)> = g
                .basis_of_degree(deg)
                .into_iter()
                .filter(|b| b.factor_count() >= 2 && b.divides(m))
                .map(|b| {
                    unknowns += 1;
                    (b, unknowns - 1)
                })
                .collect();
            lifts[h_idx] = (g_idx, alphas);
        }
        Ok(GenericMap {
            p: g.modulus().value(),
            unknowns,
            lifts,
        })
    }

    fn image(&self, h_idx: usize, sign: i64, m: &Monomial) -> Vec<(Monomial, Alpha)> {
        let (g_idx, alphas) = &self.lifts[h_idx];
        let mut out = Vec::new();
        let x = Monomial::generator(*g_idx);
        if x.divides(m) {
            let c = if sign > 0 { 1 } else { self.p - 1 };
            out.push((x, Alpha::from([(vec![0; self.unknowns], c)])));
        }
        for (b, j) in alphas {
            let mut key = vec![0; self.unknowns];
            key[*j] = 1;
            out.push((b.clone(), Alpha::from([(key, 1)])));
        }
        out
    }

    /// Coefficient of `M` in `f(Q)` for `f` with the given signs.
    fn coefficient(&self, q: &Monomial, signs: &[i64], m: &Monomial) -> Alpha {
        let mut acc: BTreeMap<Monomial, Alpha> =
            BTreeMap::from([(Monomial::one(), Alpha::from([(vec![0; self.unknowns], 1)]))]);
        for (h_idx, e) in q.iter() {
            let img = self.image(h_idx, signs[h_idx], m);
            for _ in 0..e {
                let mut next: BTreeMap<Monomial, Alpha> = BTreeMap::new();
                for (a, ca) in &acc {
                    for (b, cb) in &img {
                        let prod = a.mul(b);
                        if prod.divides(m) {
                            alpha_add_into(
                                next.entry(prod).or_default(),
                                &alpha_mul(ca, cb, self.p),
                                self.p,
                            );
                        }
                    }
                }
                next.retain(|_, c| !c.is_empty());
                if next.is_empty() {
                    return Alpha::new();
                }
                acc = next;
            }
        }
        acc.remove(m).unwrap_or_default()
    }
}

fn sign_vectors(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1u64 << n).map(move |bits| {
        (0..n)
            .map(|i| if bits >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

/// Outcome of condition (2) for one candidate.
enum Condition2 {
    Holds,
    Fails,
    /// Some coefficient is a nonzero polynomial of degree `>= p`.
    Undecided(u32),
}

fn condition_two(pair: &PairModel, m: &Monomial) -> Result<(Condition2, usize)> {
    let generic = GenericMap::new(pair, m)?;
    let h = pair.h().require_algebra()?;
    let g = pair.g().require_algebra()?;
    let degree = m.degree(g);
    let p = g.modulus().value();
    let basis = h.basis_of_degree(degree);
    let mut undecided = None;
    for signs in sign_vectors(h.len()) {
        for q in &basis {
            let c = generic.coefficient(q, &signs, m);
            if c.is_empty() {
                continue;
            }
            let d = alpha_degree(&c);
            if (d as u64) < p {
                return Ok((Condition2::Fails, generic.unknowns));
            }
            undecided = Some(d);
        }
    }
    Ok((
        undecided.map_or(Condition2::Holds, Condition2::Undecided),
        generic.unknowns,
    ))
}

/// 𝒫¹ of one G-generator as (monomial, status) pairs in term order.
fn p1_terms(pair: &PairModel, g_idx: usize) -> Result<Vec<(Monomial, MonomialStatus)>> {
    let g = pair.g();
    let alg = g.require_algebra()?;
    match g.family() {
        Family::E6 => {
            let s = p1_exceptional(ExceptionalGroup::E6, alg.name_of(g_idx), g.prime())?;
            let mut out: Vec<(Monomial, MonomialStatus)> = s
                .statuses()
                .into_iter()
                .filter(|(_, st)| *st != MonomialStatus::Unique(g.prime().zero()))
                .map(|(m, st)| (m.clone(), st))
                .collect();
            out.sort_by(|a, b| b.0.cmp(&a.0));
            Ok(out)
        }
        _ => {
            let v = g.root_action()?.p1_generator(g_idx)?;
            Ok(v.terms()
                .into_iter()
                .map(|(m, c)| (m, MonomialStatus::Unique(c)))
                .collect())
        }
    }
}

fn check_pair(pair: &PairModel, p: Prime, k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "criterion needs k >= 2, got {k}"
        )));
    }
    if pair.prime() != p {
        return Err(Error::BadParameter(format!(
            "pair instantiated at p = {}, asked about p = {}",
            pair.prime(),
            p
        )));
    }
    pair.restriction().ok_or_else(|| Error::UnsupportedPrime {
        p: p.value(),
        what: format!("cohomology of {}", pair.label()),
    })?;
    Ok(())
}

/// Searches for a witness in ascending `m_k`, then term order.
pub fn criterion_check(pair: &PairModel, p: Prime, k: u32) -> Result<CriterionVerdict> {
    check_pair(pair, p, k)?;
    let alg = pair.g().require_algebra()?.clone();
    let h = pair.h().require_algebra()?.clone();
    let types = pair.g().type_sequence().to_vec();
    let mut corr = restriction_correspondence(pair)?;
    corr.sort_by_key(|&(h_idx, _, _)| (h.degree_of(h_idx), h_idx));
    let mut warnings = Vec::new();
    for (h_idx, g_idx, _) in corr {
        let m_k = h.degree_of(h_idx) / 2;
        let terms = match p1_terms(pair, g_idx) {
            Ok(t) => t,
            Err(e @ (Error::UnknownGeneratorAction(_) | Error::Ambiguous(_))) => {
                warnings.push(format!("P^1 {} unavailable: {e}", alg.name_of(g_idx)));
                continue;
            }
            Err(e) => return Err(e),
        };
        for (m, status) in terms {
            if m.factor_count() != k || !condition_one(&alg, &m, m_k, &types) {
                continue;
            }
            let coefficient = match status {
                MonomialStatus::Unique(c) => c,
                MonomialStatus::Ambiguous => {
                    warnings.push(format!(
                        "coefficient of {} in P^1 {} is not pinned by the data",
                        m.display(&alg),
                        alg.name_of(g_idx)
                    ));
                    continue;
                }
            };
            let (cond2, unknowns) = condition_two(pair, &m)?;
            match cond2 {
                Condition2::Fails => continue,
                Condition2::Undecided(d) => {
                    warnings.push(format!(
                        "{}",
                        Error::DegreeGuardExceeded {
                            degree: d,
                            p: p.value()
                        }
                    ));
                    continue;
                }
                Condition2::Holds => {}
            }
            let witness = Witness {
                m_k,
                generator: alg.name_of(g_idx).to_string(),
                ideal: ideal_for(&alg, &m, m_k),
                monomial: m,
                coefficient,
                algebra: alg.clone(),
                unknowns,
            };
            match verify_witness(pair, k, &witness) {
                Ok(()) => return Ok(CriterionVerdict::Obstructed(witness)),
                Err(e) => warnings.push(format!(
                    "witness {} failed re-verification: {e}",
                    witness.monomial_text()
                )),
            }
        }
    }
    Ok(CriterionVerdict::Inconclusive {
        reason: format!("no monomial with {k} factors satisfies both conditions"),
        warnings,
    })
}

/// 𝒫¹ coefficient recomputed by a route other than the search: the Wu
/// formulas for classical groups (through `j*` for BSO(2n)).
fn recompute_coefficient(pair: &PairModel, w: &Witness) -> Result<FpElement> {
    let g = pair.g();
    let p = g.prime();
    let alg = g.require_algebra()?;
    let idx = alg.require(&w.generator)?;
    let k: u32 = w.generator[1..]
        .parse()
        .map_err(|_| Error::UnsupportedGenerator(w.generator.clone()))?;
    match g.family() {
        Family::SU => Ok(p1_wu_chern(g.parameter(), k, p)?.coefficient_of(&w.monomial)),
        Family::SOEven | Family::Spin8 => {
            let n = if g.family() == Family::Spin8 {
                4
            } else {
                g.parameter()
            };
            let v = j_star_orthogonal(n, p)?.apply(&p1_wu_pontrjagin(n, k, p)?)?;
            Ok(v.coefficient_of(&w.monomial))
        }
        Family::E6 => {
            p1_exceptional(ExceptionalGroup::E6, alg.name_of(idx), p)?.coefficient(&w.monomial)
        }
        _ => Err(Error::UnsupportedGenerator(w.generator.clone())),
    }
}

/// Re-checks a witness from its stored data only: the coefficient by an
/// independent formula, condition (1) from the factor degrees, the ideal,
/// and condition (2) by full polynomial arithmetic in an algebra that
/// adjoins the `α` unknowns as generators.
pub fn verify_witness(pair: &PairModel, k: u32, w: &Witness) -> Result<()> {
    let g = pair.g().require_algebra()?;
    let h = pair.h().require_algebra()?;
    let fail = |what: String| Err(Error::BadParameter(what));
    if w.coefficient.is_zero() || recompute_coefficient(pair, w)? != w.coefficient {
        return fail("coefficient does not match the Wu formula".into());
    }
    if w.monomial.factor_count() != k {
        return fail("wrong number of factors".into());
    }
    let degrees: Vec<u32> = {
        let mut d: Vec<u32> = w
            .monomial
            .factors()
            .iter()
            .map(|&i| g.degree_of(i) / 2)
            .collect();
        d.sort_unstable();
        d
    };
    let gap = w.m_k as i64 - degrees[0] as i64;
    let sums = pair.g().type_sequence();
    let representable = gap > 0 && (1..=gap).any(|c| partition_exists(gap, c, sums));
    if degrees[1..].iter().any(|&n| n <= w.m_k) || representable {
        return fail("condition (1) fails".into());
    }
    if ideal_for(g, &w.monomial, w.m_k) != w.ideal || w.ideal.kills(&w.monomial) {
        return fail("ideal mismatch".into());
    }

    // Adjoin α generators a0, a1, ... and expand in full.
    let corr = restriction_correspondence(pair)?;
    let mut gens: Vec<(String, u32)> = g
        .generators()
        .iter()
        .map(|x| (x.name.clone(), x.degree))
        .collect();
    let mut lifts: Vec<(usize, Vec<(Monomial, String)>)> = vec![(0, Vec::new()); h.len()];
    let mut count = 0;
    for &(h_idx, g_idx, _) in &corr {
        let mut alphas = Vec::new();
        for b in g.basis_of_degree(h.degree_of(h_idx)) {
            if b.factor_count() >= 2 && b.divides(&w.monomial) {
                let name = format!("a{count}");
                count += 1;
                gens.push((name.clone(), 2));
                alphas.push((b, name));
            }
        }
        lifts[h_idx] = (g_idx, alphas);
    }
    let big = GradedAlgebra::new("generic", gens, g.modulus())?;
    let to_big = |m: &Monomial| -> Result<Monomial> {
        let mut out = Monomial::one();
        for (i, e) in m.iter() {
            out = out.mul(&Monomial::power(big.require(g.name_of(i))?, e));
        }
        Ok(out)
    };
    let target = to_big(&w.monomial)?;
    let is_x: Vec<bool> = (0..big.len())
        .map(|i| g.index_of(big.name_of(i)).is_some())
        .collect();
    let x_part = |m: &Monomial| Monomial::from_pairs(m.iter().filter(|&(i, _)| is_x[i]));
    let ideal = GeneratorIdeal::new(
        w.ideal
            .members()
            .map(|i| big.require(g.name_of(i)).expect("same names")),
    );
    for signs in sign_vectors(h.len()) {
        let mut images = Vec::with_capacity(h.len());
        for (h_idx, (g_idx, alphas)) in lifts.iter().enumerate() {
            let mut f = Polynomial::term(&big, to_big(&Monomial::generator(*g_idx))?, signs[h_idx]);
            for (b, a) in alphas {
                let term = Polynomial::term(
                    &big,
                    to_big(b)?.mul(&Monomial::generator(big.require(a)?)),
                    1,
                );
                f = f.add(&term)?;
            }
            images.push(f);
        }
        for q in h.basis_of_degree(w.monomial.degree(g)) {
            let mut prod = Polynomial::one(&big);
            for (h_idx, e) in q.iter() {
                for _ in 0..e {
                    prod = prod.mul_mod(&images[h_idx], &ideal)?;
                    prod = prod.filter_terms(|m| x_part(m).divides(&target));
                }
            }
            if prod.raw_terms().any(|(m, _)| x_part(m) == target) {
                return fail(format!("f({}) reaches M modulo I", q.display(h)));
            }
        }
    }
    Ok(())
}

/// Whether `t` splits into exactly `c` parts from `types`.
fn partition_exists(t: i64, c: i64, types: &[u32]) -> bool {
    if c == 0 {
        return t == 0;
    }
    types
        .iter()
        .any(|&a| (a as i64) <= t && partition_exists(t - a as i64, c - 1, types))
}
