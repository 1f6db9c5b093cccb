//! Hole search on a high-dimensional uniform cloud.
//!
//! In many dimensions even thousands of points leave enormous empty
//! regions, and exhaustive enumeration is hopeless — exactly the regime
//! the randomized search is built for. This example generates a uniform
//! cloud, runs a fixed budget of rectangle generations, and reports the
//! throughput and the largest holes found.
//!
//! Usage: high_dimensional [points] [dims] [rectangles] [strategy]

use std::time::Instant;

use mehr::{find_mehrs, ExpansionStrategy, PointSet, RandomSource, SearchConfig};

fn arg(n: usize, default: u64) -> u64 {
    std::env::args()
        .nth(n)
        .map(|s| s.parse().expect("numeric argument"))
        .unwrap_or(default)
}

fn main() -> mehr::Result<()> {
    let n = arg(1, 800) as usize;
    let k = arg(2, 10) as usize;
    let rectangles = arg(3, 2_000);
    let strategy = ExpansionStrategy::from_number(arg(4, 3) as u8).expect("strategy 1..=3");

    let mut rng = RandomSource::new(11);
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..k).map(|_| rng.uniform()).collect())
        .collect();
    let points = PointSet::from_rows(&rows)?;
    let projections = points.projections();

    let config = SearchConfig {
        strategy,
        // Patience never triggers; the iteration cap sets the budget.
        stop: u64::MAX,
        max_iterations: Some(rectangles),
        seed: 7,
        top_n: 5,
        ..SearchConfig::default()
    };

    println!("searching {n} points in {k} dimensions with {strategy} ...");
    let start = Instant::now();
    let report = find_mehrs(&points, &projections, &config)?;
    let elapsed = start.elapsed();

    let per_sec = report.stats.generated as f64 / elapsed.as_secs_f64();
    println!(
        "generated {} rectangles in {:.2?} ({:.0}/s)",
        report.stats.generated, elapsed, per_sec
    );
    println!(
        "small-rectangle fraction: {:.4}%",
        100.0 * report.stats.too_small as f64 / report.stats.generated as f64
    );
    println!("largest holes:");
    for rect in &report.top {
        let bounded: Vec<usize> = (0..k).filter(|&d| rect.is_bounding_dim(d)).collect();
        println!(
            "  volume {:.4}  ({} of {} dimensions bounded)",
            rect.volume(),
            bounded.len(),
            k
        );
    }
    Ok(())
}
