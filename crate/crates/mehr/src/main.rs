//! Thin command-line front end: CSV in, hole report out.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use mehr::report::{build_oracle_report, build_report, DatasetSummary};
use mehr::{
    clean_and_normalize, enumerate_all_mehrs, load_csv, run_search, ExpansionStrategy, SearchConfig,
};

/// Find large maximal empty hyper-rectangles (holes) in numeric CSV data.
///
/// Non-numeric and constant columns are dropped, rows with missing values
/// are dropped, and the remaining columns are min-max normalized before
/// the randomized search runs. Bounds in the report are translated back
/// to original units.
#[derive(Parser)]
#[command(name = "mehr", version)]
struct Cli {
    /// CSV file to search (header row required)
    #[arg(long, value_name = "PATH")]
    input: PathBuf,

    /// Expansion strategy: 1 = max-per-dimension, 2 = equal-step-rounds,
    /// 3 = random-amounts
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    strategy: u8,

    /// Consecutive large non-improving rectangles before the search halts
    #[arg(long, default_value_t = 1000, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    stop: u64,

    /// Seed for the deterministic random stream
    #[arg(long, default_value_t = 0, value_name = "N")]
    seed: u64,

    /// Independent runs (seeds seed, seed+1, ...) merged into one report
    #[arg(long, default_value_t = 1, value_name = "R", value_parser = clap::value_parser!(u64).range(1..))]
    runs: u64,

    /// Volume below which rectangles are ignored (default: 1/rows)
    #[arg(long, value_name = "X")]
    min_volume: Option<f64>,

    /// How many of the largest distinct rectangles to retain
    #[arg(long, default_value_t = 100, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    top: u64,

    /// Hard cap on generated rectangles per run (default: 10 * stop * dims)
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    max_iterations: Option<u64>,

    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// List every dimension in extracted rules, even full-width ones
    #[arg(long)]
    include_full_width: bool,

    /// Exhaustively enumerate instead of searching (small instances only)
    #[arg(long, hide = true)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Rules,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(cause) = source {
                eprintln!("  caused by: {cause}");
                source = cause.source();
            }
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> mehr::Result<ExitCode> {
    let table = load_csv(&cli.input)?;
    let (points, log) = clean_and_normalize(&table)?;
    let dataset = DatasetSummary::from_parts(&table, &points, &log);

    if cli.oracle {
        let oracle = enumerate_all_mehrs(&points)?;
        let report = build_oracle_report(dataset, &oracle, &points, cli.include_full_width);
        let text = match cli.format {
            OutputFormat::Json => report.to_json_string(),
            OutputFormat::Rules => report.to_rules_text(),
            OutputFormat::Csv => report.to_csv_text(points.dim_names()),
        };
        return Ok(emit(&text));
    }

    let config = SearchConfig {
        strategy: ExpansionStrategy::from_number(cli.strategy).expect("value range is 1..=3"),
        stop: cli.stop,
        seed: cli.seed,
        min_volume: cli.min_volume,
        top_n: cli.top as usize,
        max_iterations: cli.max_iterations,
    };
    let projections = points.projections();
    let search = run_search(&points, &projections, &config, cli.runs as usize)?;
    let report = build_report(
        dataset,
        &config,
        cli.runs as usize,
        cli.include_full_width,
        &search,
        &points,
    );
    let text = match cli.format {
        OutputFormat::Json => report.to_json_string(),
        OutputFormat::Rules => report.to_rules_text(),
        OutputFormat::Csv => report.to_csv_text(points.dim_names()),
    };
    Ok(emit(&text))
}

/// Write the report to stdout. A consumer that stops reading early (`head`,
/// a closed pager) is normal termination, not an error.
fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write report to stdout: {e}");
            ExitCode::FAILURE
        }
    }
}
