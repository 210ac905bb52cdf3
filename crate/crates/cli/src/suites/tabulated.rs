//! Published closed forms, transcribed as data: each entry claims that a
//! monomial occurs in 𝒫¹ of a generator with a given rational coefficient.

use ak_core::fp::rational_to_fp;
use ak_core::{FpElement, GradedAlgebra, Monomial, Prime, Result};

use crate::commands::Space;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaEntry {
    pub citation: &'static str,
    pub space: Space,
    /// Space parameter (unused for exceptional spaces).
    pub param: u32,
    pub prime: u64,
    pub class: String,
    pub factors: Vec<(String, u32)>,
    pub num: i64,
    pub den: i64,
}

impl LemmaEntry {
    pub fn monomial(&self, alg: &GradedAlgebra) -> Result<Monomial> {
        let mut m = Monomial::one();
        for (name, e) in &self.factors {
            m = m.mul(&Monomial::power(alg.require(name)?, *e));
        }
        Ok(m)
    }

    pub fn expected(&self) -> Result<FpElement> {
        rational_to_fp(self.num, self.den, Prime::new(self.prime)?)
    }

    pub fn describe(&self) -> String {
        let mono: Vec<String> = self
            .factors
            .iter()
            .map(|(n, e)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        let frac = if self.den == 1 {
            format!("{}", self.num)
        } else {
            format!("{}/{}", self.num, self.den)
        };
        format!(
            "{}({}) p={}: P^1 {} >= {} {}",
            self.space,
            self.param,
            self.prime,
            self.class,
            frac,
            mono.join("*")
        )
    }
}

fn is_odd_prime(n: i64) -> bool {
    n > 2 && ak_core::fp::is_prime(n as u64)
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Product of factors, merging repeated names; zero exponents dropped.
fn factors(list: &[(String, u32)]) -> Vec<(String, u32)> {
    let mut out: Vec<(String, u32)> = Vec::new();
    for (n, e) in list {
        if *e == 0 {
            continue;
        }
        match out.iter_mut().find(|(m, _)| m == n) {
            Some(slot) => slot.1 += e,
            None => out.push((n.clone(), *e)),
        }
    }
    out
}

fn f(name: String, e: u32) -> (String, u32) {
    (name, e)
}

/// Lemma "P^1 SU" for `n <= n_max` and the given `k`.
pub fn su_entries(n_max: u32, ks: &[u32]) -> Vec<LemmaEntry> {
    const CITE: &str = "P^1 SU";
    let mut out = Vec::new();
    for n in 1..=n_max {
        let top = 2 * n + 1;
        let (t, ni) = (top as i64, n as i64);
        for &k in ks {
            let ki = k as i64;
            for p in (ki - 1) * t..ki * t - 1 {
                let s = p - (ki - 1) * t + 1;
                if is_odd_prime(p) && (2..=t).contains(&s) {
                    out.push(LemmaEntry {
                        citation: CITE,
                        space: Space::Bsu,
                        param: top,
                        prime: p as u64,
                        class: "c2".into(),
                        factors: factors(&[f(format!("c{top}"), k - 1), f(format!("c{s}"), 1)]),
                        num: sign(ki - 1),
                        den: 1,
                    });
                }
            }
            let p = ki * t - 1;
            if is_odd_prime(p) {
                out.push(LemmaEntry {
                    citation: CITE,
                    space: Space::Bsu,
                    param: top,
                    prime: p as u64,
                    class: "c2".into(),
                    factors: vec![f(format!("c{top}"), k)],
                    num: sign(ki - 1),
                    den: ki,
                });
            }
            if n >= 2 {
                let even = 2 * n;
                for p in 2 * (ki - 1) * ni..2 * ki * ni - 1 {
                    let s = p - 2 * (ki - 1) * ni + 2;
                    if is_odd_prime(p) && (2..=2 * ni).contains(&s) {
                        out.push(LemmaEntry {
                            citation: CITE,
                            space: Space::Bsu,
                            param: even,
                            prime: p as u64,
                            class: "c2".into(),
                            factors: factors(&[
                                f(format!("c{even}"), k - 2),
                                f(format!("c{}", even - 1), 1),
                                f(format!("c{s}"), 1),
                            ]),
                            num: sign(ki - 1) * (ki - 1),
                            den: 1,
                        });
                    }
                }
                let p = 2 * (ki - 1) * ni - 1;
                if is_odd_prime(p) {
                    out.push(LemmaEntry {
                        citation: CITE,
                        space: Space::Bsu,
                        param: even,
                        prime: p as u64,
                        class: "c4".into(),
                        factors: factors(&[
                            f(format!("c{even}"), k - 2),
                            f(format!("c{}", even - 1), 1),
                            f("c3".into(), 1),
                        ]),
                        num: sign(ki - 1) * 3 * (ki - 1),
                        den: 1,
                    });
                }
            }
        }
        if n >= 2 && is_odd_prime(t) {
            out.push(LemmaEntry {
                citation: CITE,
                space: Space::Bsu,
                param: top,
                prime: top as u64,
                class: "c4".into(),
                factors: vec![f(format!("c{top}"), 1), f("c3".into(), 1)],
                num: -3,
                den: 1,
            });
        }
    }
    out
}

/// Lemma "P^1 SO(15)". Entries at non-prime `p` are skipped.
pub fn so15_entries(ks: &[u32]) -> Vec<LemmaEntry> {
    let mut out = Vec::new();
    for &k in ks {
        let ki = k as i64;
        let p6 = || f("p6".into(), k - 2);
        #[allow(clippy::type_complexity)]
        let rows: [(i64, &str, Vec<(String, u32)>, i64, i64); 5] = [
            (
                12 * ki - 7,
                "p1",
                factors(&[f("p7".into(), 1), p6(), f("p2".into(), 1)]),
                5,
                12,
            ),
            (
                12 * ki - 11,
                "p1",
                factors(&[f("p7".into(), 1), p6()]),
                1,
                1,
            ),
            (
                12 * ki - 13,
                "p2",
                factors(&[f("p7".into(), 1), p6()]),
                3,
                1,
            ),
            (
                12 * ki - 13,
                "p4",
                factors(&[f("p7".into(), 1), p6(), f("p2".into(), 1)]),
                29,
                12,
            ),
            (
                12 * ki - 17,
                "p4",
                factors(&[f("p7".into(), 1), p6()]),
                7,
                1,
            ),
        ];
        for (p, class, fs, num, den) in rows {
            if !is_odd_prime(p) {
                continue;
            }
            out.push(LemmaEntry {
                citation: "P^1 SO(15)",
                space: Space::BsoOdd,
                param: 7,
                prime: p as u64,
                class: class.into(),
                factors: fs,
                num: sign(ki + (p - 1) / 2) * num,
                den,
            });
        }
    }
    out
}

/// Lemma "P^1 SO(2n)": the `p_1` family for the given `k >= 3` and the
/// `e_n^2` family for every odd prime `p <= 2n - 1`.
pub fn so2n_entries(ns: &[u32], ks: &[u32]) -> Vec<LemmaEntry> {
    let mut out = Vec::new();
    for &n in ns {
        let ni = n as i64;
        for &k in ks {
            let ki = k as i64;
            for p in 2 * (ki - 2) * (ni - 1) + 2..2 * (ki - 1) * (ni - 1) + 2 {
                let s = (p - 1) / 2 - (ki - 2) * (ni - 1);
                if !is_odd_prime(p) || !(1..ni).contains(&s) {
                    continue;
                }
                out.push(LemmaEntry {
                    citation: "P^1 SO(2n)",
                    space: Space::BsoEven,
                    param: n,
                    prime: p as u64,
                    class: "p1".into(),
                    factors: factors(&[
                        f(format!("p{}", n - 1), k - 3),
                        f(format!("p{s}"), 1),
                        f(format!("e{n}"), 2),
                    ]),
                    num: sign(ki + (p - 1) / 2) * (ki - 2),
                    den: 1,
                });
            }
        }
        for p in 3..=2 * ni - 1 {
            if !is_odd_prime(p) {
                continue;
            }
            out.push(LemmaEntry {
                citation: "P^1 SO(2n)",
                space: Space::BsoEven,
                param: n,
                prime: p as u64,
                class: format!("p{}", ni - (p - 1) / 2),
                factors: vec![f(format!("e{n}"), 2)],
                num: sign((p - 1) / 2) * 2 * ni,
                den: 1,
            });
        }
    }
    out
}

/// Lemma "SO(8)".
pub fn so8_entries(ks: &[u32]) -> Vec<LemmaEntry> {
    let mut out = Vec::new();
    for &k in ks {
        let ki = k as i64;
        let fs = || factors(&[f("p3".into(), k - 2), f("p2".into(), 2)]);
        for (p, class, s, den) in [
            (6 * ki - 5, "p1", sign(ki + (6 * ki - 6) / 2), 12),
            (6 * ki - 7, "p2", sign(ki + (6 * ki - 6) / 2), 4),
        ] {
            if !is_odd_prime(p) {
                continue;
            }
            out.push(LemmaEntry {
                citation: "SO(8)",
                space: Space::BsoEven,
                param: 4,
                prime: p as u64,
                class: class.into(),
                factors: fs(),
                num: s,
                den,
            });
        }
    }
    out
}

/// Lemma "P^1 E_8" and Corollary "P^1 E_6" at the given `k`.
pub fn exceptional_entries(k: u32) -> Vec<LemmaEntry> {
    let ki = k as i64;
    let sixty = 60i64.pow(k - 1);
    let x24 = || f("x24".into(), k - 2);
    let mut out = Vec::new();
    let e8: [(i64, &str, &str, i64, i64, i64); 4] = [
        (12 * ki - 7, "x4", "x36", -1, 5, 96),
        (12 * ki - 11, "x4", "x28", 1, 1, 8),
        (12 * ki - 13, "x16", "x36", -1, 35, 8),
        (12 * ki - 17, "x16", "x28", -1, 7, 8),
    ];
    for (p, class, top, half, num, den) in e8 {
        if !is_odd_prime(p) {
            continue;
        }
        out.push(LemmaEntry {
            citation: "P^1 E_8",
            space: Space::Be8,
            param: 0,
            prime: p as u64,
            class: class.into(),
            factors: factors(&[f(top.into(), 1), x24()]),
            num: sign(ki + (p + half) / 2) * num,
            den: den * sixty,
        });
    }
    #[allow(clippy::type_complexity)]
    let e6: [(i64, &str, Vec<(String, u32)>, i64, i64, i64); 4] = [
        (
            12 * ki - 7,
            "x4",
            factors(&[x24(), f("x18".into(), 2)]),
            1,
            25,
            48,
        ),
        (
            12 * ki - 11,
            "x4",
            factors(&[x24(), f("x18".into(), 1), f("x10".into(), 1)]),
            1,
            5,
            1,
        ),
        (
            12 * ki - 13,
            "x16",
            factors(&[x24(), f("x18".into(), 2)]),
            1,
            175,
            4,
        ),
        (
            12 * ki - 17,
            "x16",
            factors(&[x24(), f("x18".into(), 1), f("x10".into(), 1)]),
            -1,
            35,
            1,
        ),
    ];
    for (p, class, fs, half, num, den) in e6 {
        if !is_odd_prime(p) {
            continue;
        }
        out.push(LemmaEntry {
            citation: "P^1 E_6",
            space: Space::Be6,
            param: 0,
            prime: p as u64,
            class: class.into(),
            factors: fs,
            num: sign(ki + (p + half) / 2) * num,
            den: den * sixty,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bsu7_at_13() {
        let e = su_entries(3, &[2]);
        let hit = e
            .iter()
            .find(|x| x.param == 7 && x.prime == 13 && x.class == "c2")
            .expect("entry");
        assert_eq!(hit.factors, vec![("c7".to_string(), 2)]);
        assert_eq!(hit.expected().unwrap().residue(), 6);
    }

    #[test]
    fn so15_at_11() {
        let e = so15_entries(&[2]);
        let hit = e.iter().find(|x| x.prime == 11 && x.class == "p2").unwrap();
        assert_eq!(hit.expected().unwrap().residue(), 8);
    }

    #[test]
    fn so8_at_5_and_7() {
        let e = so8_entries(&[2]);
        assert_eq!(e.len(), 2);
        assert_eq!(
            e.iter()
                .find(|x| x.prime == 7)
                .unwrap()
                .expected()
                .unwrap()
                .residue(),
            4
        );
        assert_eq!(
            e.iter()
                .find(|x| x.prime == 5)
                .unwrap()
                .expected()
                .unwrap()
                .residue(),
            1
        );
        let so8 = so2n_entries(&[4], &[]);
        let hit = so8.iter().find(|x| x.prime == 5).unwrap();
        assert_eq!(
            (hit.class.as_str(), hit.expected().unwrap().residue()),
            ("p2", 3)
        );
    }

    #[test]
    fn exceptional_values_as_printed() {
        let e = exceptional_entries(2);
        assert_eq!(e.len(), 8);
        let get = |cite: &str, p: u64| {
            e.iter()
                .find(|x| x.citation == cite && x.prime == p)
                .unwrap()
                .expected()
                .unwrap()
                .residue()
        };
        assert_eq!(get("P^1 E_8", 13), 1);
        assert_eq!(get("P^1 E_6", 13), 1);
        assert_eq!(get("P^1 E_6", 11), 6);
        assert_eq!(get("P^1 E_6", 17), 11);
        assert_eq!(get("P^1 E_8", 7), 0);
    }
}
