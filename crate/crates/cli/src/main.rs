//! `k4v`: verification and search front end for the `K(1,4)_+ ⊕ ℂC` Verma-module engine.
//!
//! Every command prints a JSON report and exits with status 0 iff all of its checks passed.
//! `K4V_THREADS` caps the worker pool.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "k4v", version, about = "Exact computations for Verma modules over K(1,4)_+ ⊕ ℂC")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conformal axioms, super-Jacobi, cocycle and the map K_4 → K(1,4)_+.
    Axioms {
        #[command(flatten)]
        args: commands::AxiomsArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve for highest weight singular vectors of one degree at one weight.
    Search(commands::SearchArgs),
    /// Solve at every tabulated weight and at seeded off-list weights.
    VerifyTheorems(commands::VerifyTheoremsArgs),
    /// Build the morphism graph, check compositions and duality, export DOT and JSON.
    Complexes(commands::ComplexesArgs),
    /// The coadjoint module and its identification with M(0,0,2,0).
    Coadjoint(commands::CoadjointArgs),
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(raw) = std::env::var("K4V_THREADS") {
        let threads: usize =
            raw.trim().parse().map_err(|_| anyhow::anyhow!("K4V_THREADS must be a positive integer, got {raw:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    configure_threads()?;
    let (report, out) = match &cli.command {
        Command::Axioms { args, out } => (commands::axioms(args)?, out.as_deref()),
        Command::Search(args) => (commands::search(args)?, args.out.as_deref()),
        Command::VerifyTheorems(args) => (commands::verify_theorems(args)?, args.out.as_deref()),
        // The graph files take --out; the report always goes to stdout.
        Command::Complexes(args) => (commands::complexes(args)?, None),
        Command::Coadjoint(args) => (commands::coadjoint(args)?, args.out.as_deref()),
    };
    report::emit(&report, out)?;
    for check in report.checks.iter().filter(|c| !c.passed) {
        eprintln!("FAILED {}: {}", check.name, check.counterexample.as_deref().unwrap_or(""));
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
