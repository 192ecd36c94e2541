use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use conekahler_cli::commands::{self, RunOptions};
use conekahler_cli::RunReport;

#[derive(Parser)]
#[command(name = "conekahler", version, about = "Scalar-flat Kähler metrics with cone singularities on hyperbolic space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Scenario file (TOML).
    #[arg(long)]
    config: PathBuf,
    /// Seed for every randomised sample; overrides the scenario's own.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Multiplies every tolerance except the convergence-order window.
    #[arg(long, default_value_t = 1.0)]
    tol_scale: f64,
}

impl From<&Common> for RunOptions {
    fn from(c: &Common) -> Self {
        RunOptions {
            config: c.config.clone(),
            seed: c.seed,
            out: c.out.clone(),
            tol_scale: c.tol_scale,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Measure everything and cache the results under OUT/cache.
    Solve(Common),
    /// Measure and assess in one pass; writes OUT/report.json.
    Verify(Common),
    /// Cone-angle probes at the configured feet and any given with --at.
    ProbeCone {
        #[command(flatten)]
        common: Common,
        /// Extra probe foot `X2,X3`; may be repeated.
        #[arg(long, value_parser = parse_foot)]
        at: Vec<[f64; 2]>,
    },
    /// Shoot geodesics; writes OUT/trajectories.csv.
    Geodesic(Common),
    /// Assess a cache written by `solve`; writes OUT/report.json.
    Report(Common),
}

fn parse_foot(s: &str) -> Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok([
            a.parse().map_err(|e| format!("{a}: {e}"))?,
            b.parse().map_err(|e| format!("{b}: {e}"))?,
        ]),
        _ => Err(format!("expected X2,X3, got `{s}`")),
    }
}

fn emit(r: RunReport) -> ExitCode {
    print!("{}", commands::render(&r));
    ExitCode::from(r.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(c) => commands::solve(&c.into()).map(|m| {
            println!(
                "cached scenario {} (seed {}, {} grids) under {}",
                m.scenario,
                m.seed,
                m.grids.len(),
                c.out.join("cache").display()
            );
            ExitCode::SUCCESS
        }),
        Command::Verify(c) => commands::verify(&c.into()).map(emit),
        Command::ProbeCone { common, at } => commands::probe_cone(&common.into(), at).map(emit),
        Command::Geodesic(c) => commands::geodesic(&c.into()).map(emit),
        Command::Report(c) => commands::report(&c.into()).map(emit),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}
