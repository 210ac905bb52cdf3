//! One-shot queries: `p1`, `verdict`, `table`, `cells`.

use std::fmt;
use std::str::FromStr;

use ak_core::catalog::{
    c_prime_star, instantiate_group, instantiate_pair, j_star_orthogonal, Family, PairFamily,
};
use ak_core::graded::MonomialStatus;
use ak_core::obstruction::{ak_verdict, clearance, max_ak, x_cells, VerdictStatus};
use ak_core::steenrod::{
    p1_exceptional, p1_wu_chern, p1_wu_pontrjagin, ExceptionalGroup, P1Action,
};
use ak_core::{Error, Polynomial, Prime, Result};
use serde_json::{json, Value};

use crate::output::{command_echo, terms_value, QueryResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Bsu,
    BsoOdd,
    BsoEven,
    Bsp,
    Bspin8,
    Bg2,
    Bf4,
    Be6,
    Be8,
}

impl Space {
    pub const ALL: [Space; 9] = [
        Space::Bsu,
        Space::BsoOdd,
        Space::BsoEven,
        Space::Bsp,
        Space::Bspin8,
        Space::Bg2,
        Space::Bf4,
        Space::Be6,
        Space::Be8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Space::Bsu => "BSU",
            Space::BsoOdd => "BSO_odd",
            Space::BsoEven => "BSO_even",
            Space::Bsp => "BSp",
            Space::Bspin8 => "BSpin8",
            Space::Bg2 => "BG2",
            Space::Bf4 => "BF4",
            Space::Be6 => "BE6",
            Space::Be8 => "BE8",
        }
    }

    fn family(self) -> Family {
        match self {
            Space::Bsu => Family::SU,
            Space::BsoOdd => Family::SOOdd,
            Space::BsoEven => Family::SOEven,
            Space::Bsp => Family::Sp,
            Space::Bspin8 => Family::Spin8,
            Space::Bg2 => Family::G2,
            Space::Bf4 => Family::F4,
            Space::Be6 => Family::E6,
            Space::Be8 => Family::E8,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Space> {
        Space::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParameter(format!("unknown space `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Roots,
    Wu,
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Roots => "roots",
            Method::Wu => "wu",
            Method::Both => "both",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        [Method::Roots, Method::Wu, Method::Both]
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParameter(format!("unknown method `{s}`")))
    }
}

fn odd_prime(p: u64) -> Result<Prime> {
    Prime::new(p)?.require_odd()
}

fn class_index(class: &str) -> Result<u32> {
    class
        .trim_start_matches(|c: char| !c.is_ascii_digit())
        .parse()
        .map_err(|_| Error::UnknownGenerator(class.to_string()))
}

/// 𝒫¹ of a classical generator through the closed Wu formulas, moved by
/// the naturality maps where the formula lives in another space.
pub fn p1_wu(space: Space, param: u32, class: &str, p: Prime) -> Result<Polynomial> {
    let g = instantiate_group(space.family(), param, p)?;
    let alg = g.require_algebra()?;
    alg.require(class)?;
    let k = class_index(class)?;
    let in_target = |poly: Polynomial| poly.transport(alg);
    match space {
        Space::Bsu => p1_wu_chern(param, k, p),
        Space::BsoOdd => p1_wu_pontrjagin(param, k, p),
        Space::BsoEven | Space::Bspin8 => {
            if class.starts_with('e') {
                return Err(Error::UnsupportedGenerator(format!(
                    "{class} has no Wu formula"
                )));
            }
            let n = if space == Space::Bspin8 { 4 } else { param };
            Ok(in_target(
                j_star_orthogonal(n, p)?.apply(&p1_wu_pontrjagin(n, k, p)?)?,
            ))
        }
        Space::Bsp => {
            let image = c_prime_star(param, p)?.apply(&p1_wu_chern(2 * param, 2 * k, p)?)?;
            Ok(in_target(if k % 2 == 1 { image.neg() } else { image }))
        }
        _ => Err(Error::UnknownGeneratorAction(format!("{class} in {space}"))),
    }
}

pub fn p1_roots(space: Space, param: u32, class: &str, p: Prime) -> Result<Polynomial> {
    let g = instantiate_group(space.family(), param, p)?;
    let action = g.root_action()?;
    action.p1_generator(g.require_algebra()?.require(class)?)
}

fn wu_citation(space: Space) -> &'static str {
    match space {
        Space::Bsu | Space::Bsp => "mod p Wu",
        _ => "mod p Wu Pontrjagin",
    }
}

pub fn cmd_p1(space: &str, param: u32, prime: u64, class: &str, method: &str) -> QueryResult {
    let echo = command_echo(
        "p1",
        &[
            ("space", json!(space)),
            ("param", json!(param)),
            ("prime", json!(prime)),
            ("class", json!(class)),
            ("method", json!(method)),
        ],
    );
    match p1_payload(space, param, prime, class, method) {
        Ok((payload, citations)) => QueryResult::ok(echo, payload, citations),
        Err(e) => QueryResult::invalid(echo, &e),
    }
}

fn p1_payload(
    space: &str,
    param: u32,
    prime: u64,
    class: &str,
    method: &str,
) -> Result<(Value, Vec<String>)> {
    let space: Space = space.parse()?;
    let method: Method = method.parse()?;
    let p = odd_prime(prime)?;
    if let Some(group) = match space {
        Space::Be6 => Some(ExceptionalGroup::E6),
        Space::Be8 => Some(ExceptionalGroup::E8),
        _ => None,
    } {
        let s = p1_exceptional(group, class, p)?;
        let alg = s.algebra();
        let terms: Vec<Value> = s
            .statuses()
            .into_iter()
            .filter_map(|(m, st)| match st {
                MonomialStatus::Unique(c) if c.is_zero() => None,
                MonomialStatus::Unique(c) => {
                    Some(json!({ "monomial": m.display(alg), "coefficient": c.residue(), "status": "unique" }))
                }
                MonomialStatus::Ambiguous => {
                    Some(json!({ "monomial": m.display(alg), "coefficient": null, "status": "ambiguous" }))
                }
            })
            .collect();
        let cite = if group == ExceptionalGroup::E8 {
            "P^1 E_8"
        } else {
            "P^1 E_6"
        };
        let payload = json!({
            "space": alg.label(),
            "class": class,
            "degree": s.degree(),
            "method": "exceptional",
            "terms": terms,
        });
        return Ok((payload, vec![cite.to_string()]));
    }
    let g = instantiate_group(space.family(), param, p)?;
    let alg = g.require_algebra()?;
    let idx = alg.require(class)?;
    let degree = alg.degree_of(idx) + 2 * (prime as u32 - 1);
    let mut payload = json!({
        "space": alg.label(),
        "class": class,
        "degree": degree,
        "method": method.name(),
    });
    let mut citations = Vec::new();
    let result = match method {
        Method::Roots => p1_roots(space, param, class, p)?,
        Method::Wu => {
            citations.push(wu_citation(space).to_string());
            p1_wu(space, param, class, p)?
        }
        Method::Both => {
            citations.push(wu_citation(space).to_string());
            let r = p1_roots(space, param, class, p)?;
            let w = p1_wu(space, param, class, p)?;
            payload["methods_agree"] = json!(r == w.transport(r.algebra()));
            r
        }
    };
    payload["terms"] = terms_value(&result);
    Ok((payload, citations))
}

fn pair_param(family: PairFamily, param: Option<u32>) -> Result<u32> {
    match (family.has_parameter(), param) {
        (true, Some(n)) => Ok(n),
        (true, None) => Err(Error::BadParameter(format!("{family} needs --param"))),
        (false, _) => Ok(0),
    }
}

pub fn cmd_verdict(pair: &str, param: Option<u32>, prime: u64, k: u32) -> QueryResult {
    let echo = command_echo(
        "verdict",
        &[
            ("pair", json!(pair)),
            ("param", json!(param)),
            ("prime", json!(prime)),
            ("k", json!(k)),
        ],
    );
    match verdict_payload(pair, param, prime, k) {
        Ok((payload, citations)) => QueryResult::ok(echo, payload, citations),
        Err(e) => QueryResult::invalid(echo, &e),
    }
}

fn verdict_payload(
    pair: &str,
    param: Option<u32>,
    prime: u64,
    k: u32,
) -> Result<(Value, Vec<String>)> {
    let family: PairFamily = pair.parse()?;
    let n = pair_param(family, param)?;
    let p = Prime::new(prime)?;
    let model = instantiate_pair(family, n, p)?;
    let v = ak_verdict(&model, p, k)?;
    let reason_value =
        |r: &ak_core::obstruction::Reason| json!({ "rule": r.rule, "citation": r.citation });
    let witness = v.witness.as_ref().map(|w| {
        json!({
            "m_k": w.m_k,
            "generator": w.generator,
            "monomial": w.monomial_text(),
            "ideal": w.ideal_text(),
        })
    });
    let max_k = max_ak(&model, p);
    let payload = json!({
        "pair": v.pair,
        "family": family.name(),
        "param": if family.has_parameter() { json!(n) } else { Value::Null },
        "prime": prime,
        "k": k,
        "status": v.status.as_str(),
        "a_k": family.a(n, k),
        "b_k": family.b(n, k),
        "reasons": v.reasons.iter().map(reason_value).collect::<Vec<_>>(),
        "notes": v.notes.iter().map(reason_value).collect::<Vec<_>>(),
        "witness": witness,
        "gap": v.gap.map(|(lo, hi)| json!([lo, hi])),
        "max_k": if v.status == VerdictStatus::Unknown { Value::Null } else { json!(max_k) },
    });
    let citations = v
        .reasons
        .iter()
        .chain(&v.notes)
        .map(|r| r.citation.clone())
        .collect();
    Ok((payload, citations))
}

/// One line of the threshold table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: PairFamily,
    pub param: Option<u32>,
    pub k: u32,
    pub a_k: i64,
    pub b_k: i64,
    pub m: u32,
    pub l: u32,
}

pub fn table_rows(kmax: u32, family: Option<PairFamily>, params: &[u32]) -> Result<Vec<TableRow>> {
    if kmax < 1 {
        return Err(Error::BadParameter("--kmax must be at least 1".into()));
    }
    let families: Vec<PairFamily> = family.map_or(PairFamily::ALL.to_vec(), |f| vec![f]);
    let mut rows = Vec::new();
    for f in families {
        let ns: Vec<Option<u32>> = if !f.has_parameter() {
            vec![None]
        } else if params.is_empty() {
            (f.min_parameter()..=8).map(Some).collect()
        } else {
            if let Some(&bad) = params.iter().find(|&&n| n < f.min_parameter()) {
                return Err(Error::BadParameter(format!(
                    "{f} needs n >= {}, got {bad}",
                    f.min_parameter()
                )));
            }
            params.iter().copied().map(Some).collect()
        };
        for n in ns {
            let nv = n.unwrap_or(0);
            let (m, l) = f.m_l(nv);
            for k in 1..=kmax {
                rows.push(TableRow {
                    family: f,
                    param: n,
                    k,
                    a_k: f.a(nv, k),
                    b_k: f.b(nv, k),
                    m,
                    l,
                });
            }
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::BadParameter(format!("unknown format `{s}`"))),
        }
    }
}

fn row_value(r: &TableRow) -> Value {
    json!({
        "family": r.family.name(),
        "param": r.param,
        "k": r.k,
        "a_k": r.a_k,
        "b_k": r.b_k,
        "m": r.m,
        "l": r.l,
    })
}

pub fn cmd_table(kmax: u32, family: Option<&str>, params: &[u32]) -> QueryResult {
    let echo = command_echo(
        "table",
        &[
            ("kmax", json!(kmax)),
            ("family", json!(family)),
            ("params", json!(params)),
        ],
    );
    let rows = family
        .map(str::parse::<PairFamily>)
        .transpose()
        .and_then(|f| table_rows(kmax, f, params));
    match rows {
        Ok(rows) => QueryResult::ok(
            echo,
            json!({ "rows": rows.iter().map(row_value).collect::<Vec<_>>() }),
            vec!["main".into(), "main general".into()],
        ),
        Err(e) => QueryResult::invalid(echo, &e),
    }
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "param", "k", "a_k", "b_k", "m", "l"])
        .expect("in-memory write");
    for r in rows {
        w.write_record([
            r.family.name().to_string(),
            r.param.map_or(String::new(), |n| n.to_string()),
            r.k.to_string(),
            r.a_k.to_string(),
            r.b_k.to_string(),
            r.m.to_string(),
            r.l.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
}

pub fn cmd_cells(pair: &str, param: Option<u32>, k: u32, prime: u64) -> QueryResult {
    let echo = command_echo(
        "cells",
        &[
            ("pair", json!(pair)),
            ("param", json!(param)),
            ("k", json!(k)),
            ("prime", json!(prime)),
        ],
    );
    match cells_payload(pair, param, k, prime) {
        Ok(payload) => QueryResult::ok(
            echo,
            payload,
            vec!["P^lS".into(), "regular A_k refined".into()],
        ),
        Err(e) => QueryResult::invalid(echo, &e),
    }
}

fn cells_payload(pair: &str, param: Option<u32>, k: u32, prime: u64) -> Result<Value> {
    let family: PairFamily = pair.parse()?;
    let n = pair_param(family, param)?;
    let p = Prime::new(prime)?;
    let model = instantiate_pair(family, n, p)?;
    let cells = x_cells(&model, k, p)?;
    let c = clearance(model.g(), &cells, p);
    Ok(json!({
        "pair": model.label(),
        "k": k,
        "prime": prime,
        "dims": cells.to_vec(),
        "max": cells.max(),
        "two_bk": 2 * family.b(n, k),
        "clear": c.clear,
        "failing": c.failing,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_spaces() {
        assert_eq!("bso_odd".parse::<Space>().unwrap(), Space::BsoOdd);
        assert!("BSO".parse::<Space>().is_err());
    }

    #[test]
    fn sp_wu_matches_roots() {
        let p = Prime::new(7).unwrap();
        for k in 1..=3 {
            let class = format!("q{k}");
            let r = p1_roots(Space::Bsp, 3, &class, p).unwrap();
            let w = p1_wu(Space::Bsp, 3, &class, p).unwrap();
            assert_eq!(r, w, "{class}");
        }
    }

    #[test]
    fn table_needs_kmax() {
        assert!(table_rows(0, None, &[]).is_err());
        assert_eq!(table_rows(2, Some(PairFamily::E6F4), &[]).unwrap().len(), 2);
    }
}
