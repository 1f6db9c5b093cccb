//! The shortest path from a point set to its largest hole.

use mehr::{extract_rule, run_search, PointSet, SearchConfig};

fn main() -> mehr::Result<()> {
    // A small cloud with a deliberate gap: no point has x in (0.3, 0.8).
    let points = PointSet::from_rows(&[
        vec![0.3, 0.4],
        vec![0.8, 0.6],
        vec![0.1, 0.9],
        vec![0.9, 0.1],
        vec![0.0, 0.0],
        vec![1.0, 1.0],
    ])?;
    let projections = points.projections();

    let config = SearchConfig {
        stop: 500,
        ..SearchConfig::default()
    };
    let report = run_search(&points, &projections, &config, 1)?;

    let best = report.max_rect();
    println!("largest hole: volume {:.3}", best.volume());
    println!("  spans {:?} to {:?}", best.lower(), best.upper());
    println!("  rule: {}", extract_rule(best, &points, false));
    println!(
        "  found after {} of {} candidate rectangles",
        report.stats.before_best + 1,
        report.stats.generated
    );
    Ok(())
}
