//! Verification suites. Each acceptance criterion is one [`Check`]; the
//! `verify` command and the acceptance test target both run these.

pub mod tabulated;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use ak_core::catalog::{
    c_prime_star, c_star, instantiate_group, instantiate_pair, j_star_orthogonal, Family,
    PairFamily,
};
use ak_core::fp::{is_prime, rational_to_fp};
use ak_core::graded::{AlgebraMap, MonomialStatus};
use ak_core::obstruction::{criterion_check, x_cells, CriterionVerdict};
use ak_core::steenrod::{
    p1_derivation, p1_exceptional, p1_wu_chern, p1_wu_pontrjagin, ExceptionalGroup, P1Action,
};
use ak_core::{Error, Polynomial, Prime, Result};
use serde_json::Value;

use crate::commands::{cmd_table, p1_roots, Space};
use tabulated::LemmaEntry;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grid {
    Small,
    Full,
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Grid> {
        match s.to_ascii_lowercase().as_str() {
            "small" => Ok(Grid::Small),
            "full" => Ok(Grid::Full),
            _ => Err(Error::BadParameter(format!("unknown grid `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Arith,
    Oracle,
    Lemmas,
    Criterion,
    Cells,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "arith" => Suite::Arith,
            "oracle" => Suite::Oracle,
            "lemmas" => Suite::Lemmas,
            "criterion" => Suite::Criterion,
            "cells" => Suite::Cells,
            "all" => Suite::All,
            _ => return Err(Error::BadParameter(format!("unknown suite `{s}`"))),
        })
    }
}

/// Outcome of one check over a grid of points.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    pub citation: &'static str,
    pub points: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Check {
    fn new(
        id: &'static str,
        name: &'static str,
        citation: &'static str,
        budget_secs: u64,
    ) -> Check {
        Check {
            id,
            name,
            citation,
            points: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
            budget: Duration::from_secs(budget_secs),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.points += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String, e: &Error) {
        self.points += 1;
        self.failures.push(format!("{what}: {e}"));
    }

    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.points > 0 && self.within_budget()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {} ({}; {} points, {} failed, {:.2}s of {}s) [{}]",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.citation,
            self.points,
            self.failures.len(),
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            if self.within_budget() {
                "in budget"
            } else {
                "over budget"
            }
        )?;
        for line in &self.failures {
            write!(f, "\n    - {line}")?;
        }
        Ok(())
    }
}

fn timed(mut c: Check, body: impl FnOnce(&mut Check)) -> Check {
    let t = Instant::now();
    body(&mut c);
    c.elapsed = t.elapsed();
    c
}

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

fn prime(p: u64) -> Prime {
    Prime::new(p).expect("prime constant")
}

fn primes_for(grid: Grid) -> &'static [u64] {
    match grid {
        Grid::Small => &PRIMES[..3],
        Grid::Full => &PRIMES,
    }
}

/// Small field identities: inverses, Fermat, rational reduction.
pub fn field_arithmetic(grid: Grid) -> Check {
    timed(
        Check::new(
            "arith",
            "F_p inverses, Fermat and rational reduction",
            "mod p Wu",
            10,
        ),
        |c| {
            let top = if grid == Grid::Full { 200 } else { 50 };
            for p in (3..top).filter(|&p| is_prime(p)) {
                let pp = prime(p);
                for a in 1..p as i64 {
                    let x = pp.element(a);
                    c.expect(
                        x.inv().map(|i| (i * x).residue() == 1).unwrap_or(false),
                        || format!("inverse of {a} mod {p}"),
                    );
                    c.expect(x.pow(p - 1).residue() == 1, || format!("{a}^(p-1) mod {p}"));
                }
                c.expect(rational_to_fp(1, p as i64, pp).is_err(), || {
                    format!("1/{p} accepted mod {p}")
                });
                c.expect(
                    rational_to_fp(-1, 2, pp).map(|v| (v * pp.element(2)).signed()) == Ok(-1),
                    || format!("-1/2 mod {p}"),
                );
            }
        },
    )
}

/// Criterion 1: Wu formula against the Newton power-sum oracle, Chern case.
pub fn criterion_1(grid: Grid) -> Check {
    timed(
        Check::new("1", "Wu = roots oracle for BSU(n)", "mod p Wu", 60),
        |c| {
            let n_max = if grid == Grid::Full { 8 } else { 5 };
            for &p in primes_for(grid) {
                for n in 2..=n_max {
                    for k in 2..=n {
                        let label = format!("BSU({n}) c{k} p={p}");
                        match (
                            p1_wu_chern(n, k, prime(p)),
                            p1_roots(Space::Bsu, n, &format!("c{k}"), prime(p)),
                        ) {
                            (Ok(w), Ok(r)) => c.expect(w.transport(r.algebra()) == r, || label),
                            (Err(e), _) | (_, Err(e)) => c.error(label, &e),
                        }
                    }
                }
            }
        },
    )
}

/// Criterion 2: the Pontrjagin case.
pub fn criterion_2(grid: Grid) -> Check {
    timed(
        Check::new(
            "2",
            "Wu = roots oracle for BSO(2n+1)",
            "mod p Wu Pontrjagin",
            120,
        ),
        |c| {
            let n_max = if grid == Grid::Full { 7 } else { 4 };
            for &p in primes_for(grid) {
                for n in 1..=n_max {
                    for k in 1..=n {
                        let label = format!("BSO({}) p{k} p={p}", 2 * n + 1);
                        match (
                            p1_wu_pontrjagin(n, k, prime(p)),
                            p1_roots(Space::BsoOdd, n, &format!("p{k}"), prime(p)),
                        ) {
                            (Ok(w), Ok(r)) => c.expect(w.transport(r.algebra()) == r, || label),
                            (Err(e), _) | (_, Err(e)) => c.error(label, &e),
                        }
                    }
                }
            }
        },
    )
}

/// Compares one published entry with the computed 𝒫¹ (roots oracle for
/// classical spaces, the BSO(15) pull-back for exceptional ones).
fn check_entry(c: &mut Check, e: &LemmaEntry) {
    let label = e.describe();
    let expected = match e.expected() {
        Ok(v) => v,
        Err(err) => return c.error(label, &err),
    };
    let p = prime(e.prime);
    let computed: Result<MonomialStatus> = match e.space {
        Space::Be6 | Space::Be8 => {
            let group = if e.space == Space::Be6 {
                ExceptionalGroup::E6
            } else {
                ExceptionalGroup::E8
            };
            p1_exceptional(group, &e.class, p).and_then(|s| Ok(s.status(&e.monomial(s.algebra())?)))
        }
        _ => p1_roots(e.space, e.param, &e.class, p).and_then(|poly| {
            Ok(MonomialStatus::Unique(
                poly.coefficient_of(&e.monomial(poly.algebra())?),
            ))
        }),
    };
    match computed {
        Ok(MonomialStatus::Unique(v)) => c.expect(v == expected, || {
            format!(
                "{label}: computed {}, printed value reduces to {}",
                v.residue(),
                expected.residue()
            )
        }),
        Ok(MonomialStatus::Ambiguous) => {
            c.expect(false, || format!("{label}: coefficient not unique"))
        }
        Err(err) => c.error(label, &err),
    }
}

/// Criterion 3: Lemma "P^1 SU".
pub fn criterion_3(grid: Grid) -> Check {
    timed(
        Check::new("3", "Lemma P^1 SU reproduced", "P^1 SU", 120),
        |c| {
            let n_max = if grid == Grid::Full { 6 } else { 3 };
            for e in tabulated::su_entries(n_max, &[2, 3]) {
                check_entry(c, &e);
            }
        },
    )
}

/// Criterion 4: Lemma "P^1 SO(15)", plus the vanishing at p = 7.
pub fn criterion_4(grid: Grid) -> Check {
    timed(
        Check::new("4", "Lemma P^1 SO(15) reproduced", "P^1 SO(15)", 120),
        |c| {
            let ks: &[u32] = if grid == Grid::Full { &[2, 3] } else { &[2] };
            for e in tabulated::so15_entries(ks) {
                check_entry(c, &e);
            }
            let vanishing = tabulated::so15_entries(&[2])
                .into_iter()
                .find(|e| e.prime == 7 && e.class == "p4")
                .expect("p = 12k-17 entry");
            c.expect(
                vanishing.expected().map(|v| v.is_zero()).unwrap_or(false),
                || "printed 7 p7 in P^1 p4 at p = 7 should vanish".into(),
            );
            let computed = p1_roots(Space::BsoOdd, 7, "p4", prime(7))
                .and_then(|poly| Ok(poly.coefficient_of(&vanishing.monomial(poly.algebra())?)));
            c.expect(matches!(computed, Ok(v) if v.is_zero()), || {
                "p7 in P^1 p4 at p = 7 is nonzero".into()
            });
        },
    )
}

/// Criterion 5: Lemmas "P^1 SO(2n)" and "SO(8)".
pub fn criterion_5(grid: Grid) -> Check {
    timed(
        Check::new(
            "5",
            "Lemmas P^1 SO(2n) and SO(8) reproduced",
            "P^1 SO(2n)",
            120,
        ),
        |c| {
            let ns: &[u32] = if grid == Grid::Full { &[4, 5, 6] } else { &[4] };
            for e in tabulated::so2n_entries(ns, &[3]) {
                check_entry(c, &e);
            }
            for e in tabulated::so8_entries(&[2]) {
                check_entry(c, &e);
            }
        },
    )
}

/// Criterion 6: Lemma "P^1 E_8" and Corollary "P^1 E_6" at k = 2.
pub fn criterion_6(_grid: Grid) -> Check {
    timed(
        Check::new(
            "6",
            "Exceptional P^1 at k = 2 with unique status",
            "P^1 E_8",
            120,
        ),
        |c| {
            for e in tabulated::exceptional_entries(2) {
                check_entry(c, &e);
            }
        },
    )
}

/// Criterion 7: `table` output against the closed forms, written out here
/// independently of the catalog.
pub fn criterion_7(_grid: Grid) -> Check {
    timed(
        Check::new("7", "Threshold table matches closed forms", "main", 30),
        |c| {
            let result = cmd_table(6, None, &[]);
            let rows = result.payload["rows"]
                .as_array()
                .cloned()
                .unwrap_or_default();
            c.expect(!rows.is_empty(), || "table produced no rows".into());
            for row in rows {
                let get = |key: &str| row[key].as_i64();
                let family = row["family"].as_str().unwrap_or("");
                let n = get("param").unwrap_or(0);
                let (Some(k), Some(a), Some(b)) = (get("k"), get("a_k"), get("b_k")) else {
                    c.expect(false, || format!("malformed row {row}"));
                    continue;
                };
                let (want_a, m, l) = match family {
                    "SU_SO" => (k * (2 * n + 1), 2 * n + 1, 2 * n + 1),
                    "SU_Sp" => (2 * k * n - 1, 2 * n, 2 * n - 1),
                    "SO_even" => (2 * (k - 1) * (n - 1) + n, 2 * n - 2, n),
                    "E6_F4" => (12 * k - 5, 12, 9),
                    "Spin8_G2" => (6 * k - 2, 6, 4),
                    _ => {
                        c.expect(false, || format!("unknown family in {row}"));
                        continue;
                    }
                };
                let want_b = ((k - 1) * m + l).max(k * l);
                let label = format!("{family} n={n} k={k}");
                c.expect(a == want_a, || format!("{label}: a_k {a} != {want_a}"));
                c.expect(b == want_b, || format!("{label}: b_k {b} != {want_b}"));
                let gap = if family == "E6_F4" { 2 } else { 0 };
                c.expect(b - a == gap, || format!("{label}: b_k - a_k = {}", b - a));
            }
            c.expect(
                result.payload["rows"].as_array().map(Vec::len) == Some((8 + 7 + 7 + 1 + 1) * 6),
                || "row count".into(),
            );
        },
    )
}

fn valid_odd_primes(family: PairFamily, lo: i64, hi: i64) -> Vec<u64> {
    (lo.max(3)..hi)
        .map(|p| p as u64)
        .filter(|&p| is_prime(p) && p != 2 && family.prime_allowed(p))
        .collect()
}

/// Criterion 8: the criterion obstructs exactly below `a_k`.
pub fn criterion_8(grid: Grid) -> Check {
    timed(
        Check::new(
            "8",
            "Criterion agrees with the theorem",
            "P^1 criterion",
            600,
        ),
        |c| {
            let families = [
                PairFamily::SuSo,
                PairFamily::SuSp,
                PairFamily::E6F4,
                PairFamily::Spin8G2,
            ];
            let n_max = if grid == Grid::Full { 4 } else { 2 };
            for family in families {
                let ns: Vec<u32> = if family.has_parameter() {
                    (family.min_parameter()..=n_max).collect()
                } else {
                    vec![0]
                };
                for n in ns {
                    for k in 2..=3u32 {
                        let (lo, a, hi) = (family.a(n, k - 1), family.a(n, k), family.a(n, k + 1));
                        for p in valid_odd_primes(family, lo, hi) {
                            let pp = prime(p);
                            let label = format!("{family} n={n} k={k} p={p}");
                            let pair = match instantiate_pair(family, n, pp) {
                                Ok(pair) => pair,
                                Err(e) => {
                                    c.error(label, &e);
                                    continue;
                                }
                            };
                            let below = (p as i64) < a;
                            if below && pair.fact_for(k).is_some() {
                                continue;
                            }
                            match criterion_check(&pair, pp, k) {
                                Ok(v) if below => c.expect(v.is_obstructed(), || {
                                    format!(
                                        "{label}: expected obstruction, {}",
                                        inconclusive_text(&v)
                                    )
                                }),
                                Ok(v) => c.expect(!v.is_obstructed(), || {
                                    format!("{label}: unexpected obstruction")
                                }),
                                Err(e) => c.error(label, &e),
                            }
                        }
                    }
                }
            }
        },
    )
}

fn inconclusive_text(v: &CriterionVerdict) -> String {
    match v {
        CriterionVerdict::Inconclusive { reason, warnings } if warnings.is_empty() => {
            reason.clone()
        }
        CriterionVerdict::Inconclusive { reason, warnings } => {
            format!("{reason} ({})", warnings.join("; "))
        }
        CriterionVerdict::Obstructed(_) => "obstructed".into(),
    }
}

/// Criterion 9: `max(x_cells) = 2 b_k`, and the E6 cell gap.
pub fn criterion_9(grid: Grid) -> Check {
    timed(
        Check::new("9", "Cell dimensions of X", "regular A_k refined", 30),
        |c| {
            let (n_max, k_max) = if grid == Grid::Full { (8, 6) } else { (4, 4) };
            for family in PairFamily::ALL {
                let ns: Vec<u32> = if family.has_parameter() {
                    (family.min_parameter()..=n_max).collect()
                } else {
                    vec![0]
                };
                for n in ns {
                    for k in 2..=k_max {
                        for p in valid_odd_primes(family, k as i64 + 1, 32) {
                            let pp = prime(p);
                            let label = format!("{family} n={n} k={k} p={p}");
                            match instantiate_pair(family, n, pp)
                                .and_then(|pair| x_cells(&pair, k, pp))
                            {
                                Ok(cells) => {
                                    let want = 2 * family.b(n, k);
                                    c.expect(cells.max().map(i64::from) == Some(want), || {
                                        format!("{label}: max {:?} != {want}", cells.max())
                                    });
                                    if family == PairFamily::E6F4 && k <= 3 {
                                        let (lo, hi) = (24 * k - 12, 24 * k - 6);
                                        c.expect(cells.dims().all(|d| d <= lo || d >= hi), || {
                                        format!("{label}: a cell lies strictly between {lo} and {hi}")
                                    });
                                    }
                                }
                                Err(e) => c.error(label, &e),
                            }
                        }
                    }
                }
            }
        },
    )
}

fn naturality(
    c: &mut Check,
    map: &AlgebraMap,
    source: (Family, u32),
    target: (Family, u32),
    p: Prime,
) {
    let run = || -> Result<Vec<(String, bool)>> {
        let g = instantiate_group(source.0, source.1, p)?;
        let h = instantiate_group(target.0, target.1, p)?;
        let (ga, ha) = (g.root_action()?, h.root_action()?);
        let mut out = Vec::new();
        for i in 0..map.source().len() {
            let x = Polynomial::generator(map.source(), i);
            let left = map.apply(&ga.p1_generator(i)?.transport(map.source()))?;
            let right = p1_derivation(&ha, &map.apply(&x)?.transport(ha.algebra()))?;
            out.push((
                map.source().name_of(i).to_string(),
                left.transport(ha.algebra()) == right,
            ));
        }
        Ok(out)
    };
    let label = format!("{} p={}", map.label(), p);
    match run() {
        Ok(results) => {
            for (name, ok) in results {
                c.expect(ok, || format!("{label} on {name}"));
            }
        }
        Err(e) => c.error(label, &e),
    }
}

/// Criterion 10: 𝒫¹ commutes with `c*`, `c'*` and `j*`.
pub fn criterion_10(grid: Grid) -> Check {
    timed(
        Check::new("10", "Naturality of P^1 under c*, c'*, j*", "P^1 SU", 120),
        |c| {
            let n_max = if grid == Grid::Full { 6 } else { 3 };
            for &p in primes_for(grid) {
                let pp = prime(p);
                for n in 1..=n_max {
                    match c_star(n, pp) {
                        Ok(m) => naturality(c, &m, (Family::SU, 2 * n + 1), (Family::SOOdd, n), pp),
                        Err(e) => c.error(format!("c* n={n}"), &e),
                    }
                    match c_prime_star(n, pp) {
                        Ok(m) => naturality(c, &m, (Family::SU, 2 * n), (Family::Sp, n), pp),
                        Err(e) => c.error(format!("c'* n={n}"), &e),
                    }
                    if n >= 2 {
                        match j_star_orthogonal(n, pp) {
                            Ok(m) => naturality(c, &m, (Family::SOOdd, n), (Family::SOEven, n), pp),
                            Err(e) => c.error(format!("j* n={n}"), &e),
                        }
                    }
                }
            }
        },
    )
}

/// The ten acceptance criteria, in order.
pub fn acceptance(grid: Grid) -> Vec<Check> {
    vec![
        criterion_1(grid),
        criterion_2(grid),
        criterion_3(grid),
        criterion_4(grid),
        criterion_5(grid),
        criterion_6(grid),
        criterion_7(grid),
        criterion_8(grid),
        criterion_9(grid),
        criterion_10(grid),
    ]
}

pub fn run_suite(suite: Suite, grid: Grid) -> Vec<Check> {
    match suite {
        Suite::Arith => vec![field_arithmetic(grid), criterion_7(grid)],
        Suite::Oracle => vec![criterion_1(grid), criterion_2(grid), criterion_10(grid)],
        Suite::Lemmas => vec![
            criterion_3(grid),
            criterion_4(grid),
            criterion_5(grid),
            criterion_6(grid),
        ],
        Suite::Criterion => vec![criterion_8(grid)],
        Suite::Cells => vec![criterion_9(grid)],
        Suite::All => {
            let mut all = vec![field_arithmetic(grid)];
            all.extend(acceptance(grid));
            all
        }
    }
}

/// JSON summary of a suite run (stable order: as listed).
pub fn checks_value(checks: &[Check]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "id": c.id,
                    "name": c.name,
                    "citation": c.citation,
                    "passed": c.passed(),
                    "points": c.points,
                    "failures": c.failures,
                })
            })
            .collect(),
    )
}
