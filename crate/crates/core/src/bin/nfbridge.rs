use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use nfbridge::report::{emit_report, run_suite, Mode, ReportFormat, Scenario, SuiteReport};

/// Runs verification suites of the Dirac/Maxwell correspondence.
///
/// Exit status: 0 when every check passes, 1 when any check fails, 2 on
/// configuration or input errors.
#[derive(Debug, Parser)]
#[command(name = "nfbridge", version)]
struct Cli {
    /// Suite to run: algebra, bilinears, directions, canonical, planewave,
    /// currents, grid, conservation, lagrangian, forces, hydro or all.
    #[arg(long)]
    suite: Option<String>,

    /// Arithmetic: exact or float.
    #[arg(long, env = "NFBRIDGE_MODE")]
    mode: Option<Mode>,

    /// RNG seed; each suite draws from its own stream.
    #[arg(long)]
    seed: Option<u64>,

    /// Grid spacing; Richardson checks also use h/2.
    #[arg(long)]
    h: Option<f64>,

    /// Scenario JSON file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,

    /// Write the CSV report here.
    #[arg(long)]
    csv: Option<PathBuf>,

    /// Print every check, not only failures.
    #[arg(long, short)]
    verbose: bool,
}

fn scenario(cli: &Cli) -> nfbridge::Result<Scenario> {
    let mut s = match &cli.config {
        Some(p) => Scenario::load(p)?,
        None => Scenario::default(),
    };
    if let Some(suite) = &cli.suite {
        s.suite = suite.clone();
    }
    if let Some(mode) = cli.mode {
        s.mode = mode;
    }
    if let Some(seed) = cli.seed {
        s.seed = seed;
    }
    if let Some(h) = cli.h {
        s.grid.h = h;
    }
    s.validate()?;
    Ok(s)
}

fn print(report: &SuiteReport, verbose: bool) {
    for c in &report.checks {
        if verbose || !c.pass {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            println!("{tag} {} [{}] {}", c.id, c.paper_eq, c.detail);
        }
    }
    let s = &report.summary;
    println!(
        "suite {} ({} mode, seed {}): {} checks, {} passed, {} failed",
        report.suite, report.mode, report.seed, s.total, s.passed, s.failed
    );
}

fn run(cli: &Cli) -> nfbridge::Result<SuiteReport> {
    let s = scenario(cli)?;
    let start = Instant::now();
    let report = run_suite(&s.suite, &s)?;
    if cli.verbose {
        eprintln!("wall time: {:.3} s", start.elapsed().as_secs_f64());
    }
    if let Some(p) = &cli.json {
        emit_report(&report, ReportFormat::Json, p)?;
    }
    if let Some(p) = &cli.csv {
        emit_report(&report, ReportFormat::Csv, p)?;
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print(&report, cli.verbose);
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
