//! The A_k verdict for a pair at a prime, with the rule behind it.

use std::fmt;

use super::cells::{clearance, x_cells};
use super::criterion::{criterion_check, CriterionVerdict, Witness};
use crate::catalog::{a_threshold, b_threshold, PairFamily, PairModel, CITE_C_N};
use crate::error::{Error, Result};
use crate::fp::Prime;

pub const CITE_MAIN: &str = "main";
pub const CITE_MAIN_GENERAL: &str = "main general";
pub const CITE_CRITERION: &str = "P^1 criterion";
pub const CITE_REFINED: &str = "regular A_k refined";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    IsAk,
    NotAk,
    Unknown,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::IsAk => "is_Ak",
            VerdictStatus::NotAk => "not_Ak",
            VerdictStatus::Unknown => "unknown",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One rule applied, with the label of the result it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reason {
    pub rule: String,
    pub citation: String,
}

impl Reason {
    fn new(rule: impl Into<String>, citation: &str) -> Reason {
        Reason {
            rule: rule.into(),
            citation: citation.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub reasons: Vec<Reason>,
    pub k: u32,
    pub prime: Prime,
    pub pair: String,
    /// Informational remarks that do not affect `status`.
    pub notes: Vec<Reason>,
    /// The criterion witness behind a `not_Ak`, or one found in the
    /// SO(2n) gap.
    pub witness: Option<Witness>,
    /// `[a_k - n + 2, a_k)` when `status` is unknown.
    pub gap: Option<(i64, i64)>,
}

/// Lower end of the `not_Ak` region: `a_k`, or `a_k - n + 2` for SO(2n).
fn not_ak_bound(pair: &PairModel, k: u32) -> i64 {
    let a = a_threshold(pair, k);
    match pair.family() {
        PairFamily::SoEven => a - pair.parameter() as i64 + 2,
        _ => a,
    }
}

/// Runs the criterion if the pair has cohomology models at `p`.
fn try_criterion(pair: &PairModel, p: Prime, k: u32) -> Result<Option<CriterionVerdict>> {
    if pair.restriction().is_none() {
        return Ok(None);
    }
    criterion_check(pair, p, k).map(Some)
}

pub fn ak_verdict(pair: &PairModel, p: Prime, k: u32) -> Result<Verdict> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "verdict needs k >= 2, got {k}"
        )));
    }
    if pair.prime() != p {
        return Err(Error::BadParameter(format!(
            "pair instantiated at p = {}, asked about p = {}",
            pair.prime(),
            p
        )));
    }
    let pv = p.value() as i64;
    let a = a_threshold(pair, k);
    let b = b_threshold(pair, k);
    let mut v = Verdict {
        status: VerdictStatus::Unknown,
        reasons: Vec::new(),
        k,
        prime: p,
        pair: pair.label(),
        notes: Vec::new(),
        witness: None,
        gap: None,
    };
    if pair.family() == PairFamily::SuSo {
        v.notes.push(Reason::new(
            "A_k here is equivalent to the Williams C_k condition on SU(2n+1)",
            CITE_C_N,
        ));
    }

    if pv >= a {
        v.status = VerdictStatus::IsAk;
        if pv >= b {
            let rule = if a == b {
                format!("p >= a_{k} = {a}")
            } else {
                format!("p >= b_{k} = {b}")
            };
            v.reasons.push(Reason::new(rule, CITE_MAIN_GENERAL));
        } else {
            let cells = x_cells(pair, k, p)?;
            let c = clearance(pair.g(), &cells, p);
            v.reasons.push(Reason::new(
                format!(
                    "E6 special extension at p = 12k-5: X has a single cell above dimension {}",
                    24 * k - 12
                ),
                CITE_MAIN,
            ));
            v.notes.push(Reason::new(
                format!(
                    "clearance of the cells of X at p = {p}: {}",
                    if c.clear { "clear" } else { "blocked" }
                ),
                CITE_REFINED,
            ));
        }
        return Ok(v);
    }

    if pv >= not_ak_bound(pair, k) {
        let lo = not_ak_bound(pair, k);
        v.gap = Some((lo, a));
        v.reasons.push(Reason::new(
            format!("{lo} <= p < a_{k} = {a}: undecided for SO(2n)"),
            CITE_MAIN,
        ));
        if let Some(CriterionVerdict::Obstructed(w)) = try_criterion(pair, p, k)? {
            v.notes.push(Reason::new(
                format!(
                    "criterion obstructs A_{k} at this prime (stronger than the stated bound): {} in P^1 {} mod {}",
                    w.monomial_text(),
                    w.generator,
                    w.ideal_text()
                ),
                CITE_CRITERION,
            ));
            v.witness = Some(w);
        }
        return Ok(v);
    }

    v.status = VerdictStatus::NotAk;
    for kk in 2..=k {
        if pv >= not_ak_bound(pair, kk) {
            continue;
        }
        match try_criterion(pair, p, kk)? {
            Some(CriterionVerdict::Obstructed(w)) => {
                v.reasons.push(Reason::new(
                    format!(
                        "not A_{kk}: {} in P^1 {} mod {} (m_k = {})",
                        w.monomial_text(),
                        w.generator,
                        w.ideal_text(),
                        w.m_k
                    ),
                    CITE_CRITERION,
                ));
                v.witness = Some(w);
                return Ok(v);
            }
            Some(CriterionVerdict::Inconclusive { warnings, .. }) => {
                for w in warnings {
                    v.notes.push(Reason::new(
                        format!("criterion at k = {kk}: {w}"),
                        CITE_CRITERION,
                    ));
                }
            }
            None => {}
        }
    }
    if let Some(fact) = pair.fact_for(k) {
        v.reasons.push(Reason::new(fact.note, fact.citation));
    } else {
        v.reasons
            .push(Reason::new(format!("p < a_{k} = {a}"), CITE_MAIN));
        v.notes.push(Reason::new(
            "no computational witness found at this prime",
            CITE_CRITERION,
        ));
    }
    Ok(v)
}

/// Largest `k` with `p >= a_k` (0 when even `a_1` exceeds `p`).
pub fn max_ak(pair: &PairModel, p: Prime) -> u32 {
    let pv = p.value() as i64;
    (1..)
        .take_while(|&k| a_threshold(pair, k) <= pv)
        .last()
        .unwrap_or(0)
}
