//! From rectangles to if/then rules in original units.
//!
//! The search works in the normalized unit cube, but rules are only
//! useful in the units the data arrived in. Dimensions a rectangle spans
//! completely say nothing about where the hole is, so they are omitted
//! unless explicitly requested.

use mehr::{extract_rule, run_search, PointSet, SearchConfig};

fn main() -> mehr::Result<()> {
    // Temperatures in [15, 35] degrees, pressures in [950, 1050] hPa,
    // already normalized here with the scale recorded alongside.
    let points = PointSet::new(
        &[
            vec![0.00, 0.10],
            vec![0.10, 0.80],
            vec![0.25, 0.35],
            vec![0.30, 1.00],
            vec![0.85, 0.05],
            vec![0.90, 0.90],
            vec![1.00, 0.50],
        ],
        vec!["temperature".to_string(), "pressure".to_string()],
        vec![(15.0, 35.0), (950.0, 1050.0)],
    )?;
    let projections = points.projections();
    let config = SearchConfig {
        stop: 400,
        top_n: 3,
        ..SearchConfig::default()
    };
    let report = run_search(&points, &projections, &config, 1)?;

    println!("three largest holes as rules:");
    for (i, rect) in report.top.iter().enumerate() {
        let rule = extract_rule(rect, &points, false);
        println!(
            "  {}. volume {:.3}: if {rule} then empty",
            i + 1,
            rect.volume()
        );
    }

    let best = report.max_rect();
    println!("\nthe same best hole with full-width dimensions included:");
    println!("  if {} then empty", extract_rule(best, &points, true));
    println!(
        "\nnormalized bounds for comparison: {:?} to {:?}",
        best.lower(),
        best.upper()
    );
    Ok(())
}
