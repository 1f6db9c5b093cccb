//! Validating the randomized search against exhaustive enumeration.
//!
//! For small instances every maximal empty rectangle can be listed
//! outright, which turns the enumerator into a ground-truth oracle: each
//! rectangle the search emits must appear in that list, and enough trials
//! should recover the true maximum.

use mehr::{create_mehr, enumerate_all_mehrs, ExpansionStrategy, PointSet, RandomSource};

fn main() -> mehr::Result<()> {
    let mut data_rng = RandomSource::new(12);
    let rows: Vec<Vec<f64>> = (0..7)
        .map(|_| (0..2).map(|_| data_rng.uniform()).collect())
        .collect();
    let points = PointSet::from_rows(&rows)?;
    let projections = points.projections();

    let oracle = enumerate_all_mehrs(&points)?;
    println!(
        "oracle: {} maximal empty rectangles, largest volume {:.4}",
        oracle.count(),
        oracle.max_volume()
    );

    for strategy in ExpansionStrategy::ALL {
        let mut rng = RandomSource::new(5);
        let mut best: f64 = 0.0;
        let mut members = 0;
        const TRIALS: usize = 500;
        for _ in 0..TRIALS {
            let rect = create_mehr(&points, &projections, strategy, &mut rng);
            assert!(
                oracle.contains(&rect),
                "{strategy} emitted a rectangle the oracle does not know"
            );
            members += 1;
            best = best.max(rect.volume());
        }
        let found_max = if best == oracle.max_volume() {
            "recovered the true maximum"
        } else {
            "did not reach the true maximum"
        };
        println!(
            "{strategy}: {members}/{TRIALS} emitted rectangles are oracle members, \
             best {best:.4} — {found_max}"
        );
    }
    Ok(())
}
