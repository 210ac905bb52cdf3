use std::process::ExitCode;

use ak_cli::commands::{cmd_cells, cmd_p1, cmd_table, cmd_verdict, table_csv, table_rows, Format};
use ak_cli::output::{command_echo, QueryResult, Status};
use ak_cli::suites::{checks_value, run_suite, Grid, Suite};
use clap::{Parser, Subcommand};
use serde_json::json;

/// Steenrod powers on classifying spaces and A_k verdicts for the
/// projections G -> G/H.
#[derive(Parser)]
#[command(name = "ak", version)]
struct Cli {
    /// Indented JSON instead of one line.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// P^1 of one generator.
    P1 {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 0)]
        param: u32,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        class: String,
        #[arg(long, default_value = "roots")]
        method: String,
    },
    /// Whether the projection is an A_k-map at a prime.
    Verdict {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        param: Option<u32>,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        k: u32,
    },
    /// a_k and b_k for each family.
    Table {
        #[arg(long)]
        kmax: u32,
        #[arg(long)]
        family: Option<String>,
        #[arg(long = "param")]
        params: Vec<u32>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Cell dimensions of X and the vanishing test.
    Cells {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        param: Option<u32>,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        prime: u64,
    },
    /// Run verification suites; exit 1 on any failure.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "small")]
        grid: String,
    },
}

fn emit(result: &QueryResult, pretty: bool) -> ExitCode {
    println!(
        "{}",
        if pretty {
            result.to_pretty()
        } else {
            result.to_json()
        }
    );
    ExitCode::from(result.status.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match cli.command {
        Command::P1 {
            space,
            param,
            prime,
            class,
            method,
        } => emit(&cmd_p1(&space, param, prime, &class, &method), pretty),
        Command::Verdict {
            pair,
            param,
            prime,
            k,
        } => emit(&cmd_verdict(&pair, param, prime, k), pretty),
        Command::Table {
            kmax,
            family,
            params,
            format,
        } => {
            let result = cmd_table(kmax, family.as_deref(), &params);
            match format.parse::<Format>() {
                Ok(Format::Csv) if result.status == Status::Ok => {
                    let family = family
                        .as_deref()
                        .map(|f| f.parse().expect("validated by cmd_table"));
                    let rows = table_rows(kmax, family, &params).expect("validated by cmd_table");
                    print!("{}", table_csv(&rows));
                    ExitCode::SUCCESS
                }
                Ok(_) => emit(&result, pretty),
                Err(e) => emit(&QueryResult::invalid(result.command, &e), pretty),
            }
        }
        Command::Cells {
            pair,
            param,
            k,
            prime,
        } => emit(&cmd_cells(&pair, param, k, prime), pretty),
        Command::Verify { suite, grid } => {
            let echo = command_echo("verify", &[("suite", json!(suite)), ("grid", json!(grid))]);
            let parsed = suite
                .parse::<Suite>()
                .and_then(|s| Ok((s, grid.parse::<Grid>()?)));
            let (suite, grid) = match parsed {
                Ok(x) => x,
                Err(e) => return emit(&QueryResult::invalid(echo, &e), pretty),
            };
            let checks = run_suite(suite, grid);
            for c in &checks {
                eprintln!("{c}");
            }
            let status = if checks.iter().all(|c| c.passed()) {
                Status::Ok
            } else {
                Status::Fail
            };
            let citations = checks.iter().map(|c| c.citation.to_string()).collect();
            let mut result =
                QueryResult::ok(echo, json!({ "checks": checks_value(&checks) }), citations);
            result.status = status;
            emit(&result, pretty)
        }
    }
}
