//! `qksl`: run the exact verification suites from the command line.
//!
//! Exit codes: 0 when everything passes, 1 when anything fails, 2 on a
//! usage error.

mod render;
mod suites;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qksl_core::dims::dims_table;
use qksl_core::wolf::{wolf_row, wolf_table, WolfRow};
use qksl_core::Status;
use serde::Serialize;

use suites::{Grid, SuiteArg};

#[derive(Parser, Debug)]
#[command(version, about = "Exact verification of the quaternionic Kähler spinor algebra")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one verification suite, or all of them.
    Verify(VerifyArgs),
    /// Ranks of the spinor summands S_r and their sum.
    Dims {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// The eight Wolf spaces with l-constants, ρ eigenvalues and regularity.
    WolfTable {
        /// Quaternionic dimension used for the three classical families.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(value_enum, conflicts_with = "suite_flag", required_unless_present = "suite_flag")]
    suite: Option<SuiteArg>,
    #[arg(long = "suite", value_enum)]
    suite_flag: Option<SuiteArg>,
    /// Largest n in the grid; n = 4 is noticeably slower.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(2..))]
    n_max: u32,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(0..))]
    r_max: u32,
    #[arg(long)]
    json: bool,
    /// Leave per-instance timings out so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("QKSL_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("QKSL_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn exit(status: Status) -> ExitCode {
    match status {
        Status::Fail => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let choice = args.suite.or(args.suite_flag).expect("clap enforces a suite");
    let label = match choice {
        SuiteArg::All => "all".to_string(),
        one => one.suites()[0].name(),
    };
    let grid = Grid { n_max: args.n_max as usize, r_max: args.r_max as i32 };
    let list = choice.suites();
    let instances = suites::run(&list, grid, !args.no_timing);
    let status = suites::aggregate(&instances);
    if args.json {
        let doc = render::Document { schema: render::SCHEMA, suite: &label, instances: &instances, status };
        println!("{}", render::json(&doc));
    } else {
        for i in &instances {
            println!("{}", render::instance_line(i));
        }
        if list.contains(&suites::Suite::Wolf) {
            match wolf_rows(grid.n_max) {
                Ok(rows) => print!("\n{}", render::wolf_table(&rows)),
                Err(e) => println!("wolf table: {e}"),
            }
        }
        println!("{}", render::summary(&label, &instances, status));
    }
    exit(status)
}

fn wolf_rows(n: usize) -> qksl_core::Result<Vec<WolfRow>> {
    wolf_table(n)?.iter().map(wolf_row).collect()
}

#[derive(Serialize)]
struct Payload<'a, T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: &'a T,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match cli.cmd {
        Command::Verify(args) => verify(args),
        Command::Dims { n, json } => match dims_table(n) {
            Ok(t) => {
                if json {
                    println!("{}", render::json(&Payload { schema: render::SCHEMA, body: &t }));
                } else {
                    print!("{}", render::dims(&t));
                }
                exit(if t.consistent() { Status::Pass } else { Status::Fail })
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::WolfTable { n, json } => match wolf_rows(n as usize) {
            Ok(rows) => {
                if json {
                    #[derive(Serialize)]
                    struct Rows<'a> {
                        rows: &'a [WolfRow],
                    }
                    println!("{}", render::json(&Payload { schema: render::SCHEMA, body: &Rows { rows: &rows } }));
                } else {
                    print!("{}", render::wolf_table(&rows));
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
    }
}
