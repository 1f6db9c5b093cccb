//! Helpers shared by the integration test binaries.
#![allow(dead_code)] // each test binary uses its own subset

use std::path::PathBuf;

use mehr::{PointSet, RandomSource};

/// Path to a bundled data fixture.
pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

/// `n` uniform random points in `k` dimensions; `n == 0` still yields a
/// `k`-dimensional (empty) set.
pub fn uniform_points(rng: &mut RandomSource, n: usize, k: usize) -> PointSet {
    if n == 0 {
        let names = (0..k).map(|d| format!("d{d}")).collect();
        return PointSet::new(&[], names, vec![(0.0, 1.0); k]).unwrap();
    }
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..k).map(|_| rng.uniform()).collect())
        .collect();
    PointSet::from_rows(&rows).unwrap()
}
