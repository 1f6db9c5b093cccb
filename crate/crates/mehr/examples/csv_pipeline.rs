//! CSV in, holes out: the full ingestion pipeline on the iris table.
//!
//! The species column is text and gets dropped; the four measurement
//! columns are min-max normalized for the search, and results come back
//! in centimeters.

use std::path::PathBuf;

use mehr::report::{build_report, DatasetSummary};
use mehr::{clean_and_normalize, load_csv, run_search, SearchConfig};

fn main() -> mehr::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join("iris.csv");
    let table = load_csv(&path)?;
    let (points, log) = clean_and_normalize(&table)?;

    println!(
        "loaded {} rows x {} columns",
        table.row_count(),
        table.column_count()
    );
    for (name, reason) in &log.dropped_columns {
        println!("  dropped column {name}: {reason}");
    }
    println!(
        "searching {} points in {} dimensions: {}",
        points.point_count(),
        points.dim_count(),
        points.dim_names().join(", ")
    );

    let projections = points.projections();
    let config = SearchConfig {
        stop: 800,
        seed: 4,
        top_n: 5,
        ..SearchConfig::default()
    };
    let search = run_search(&points, &projections, &config, 1)?;
    let report = build_report(
        DatasetSummary::from_parts(&table, &points, &log),
        &config,
        1,
        false,
        &search,
        &points,
    );

    println!("\nfive largest holes (bounds in original units):");
    print!("{}", report.to_rules_text());
    Ok(())
}
