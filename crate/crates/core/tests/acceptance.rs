//! The ten acceptance criteria on the full grid, one PASS/FAIL line each.
//!
//! Tolerances are pinned: every comparison is exact equality in F_p, and
//! each criterion carries its own wall-clock budget (see `Check::budget`).
//! Exits nonzero if any criterion fails.

use ak_cli::suites::{acceptance, Grid};

fn main() {
    let checks = acceptance(Grid::Full);
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    println!(
        "\nacceptance: {} passed, {failed} failed",
        checks.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
