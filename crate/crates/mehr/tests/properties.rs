//! Property-based invariants: every rectangle the search emits must be
//! empty and maximal, faces must sit exactly on their blocking limits,
//! ingestion must account for every row and column, and reports must
//! round-trip. One statistical test checks that no strategy favors a
//! dimension or direction.

mod common;

use common::uniform_points;
use proptest::prelude::*;

use mehr::report::{build_report, DatasetSummary, JsonReport};
use mehr::{
    clean_and_normalize, create_mehr, find_mehrs, sample_query_point, seed_rectangle, Direction,
    Error, ExpansionStrategy, HyperRect, PointSet, RandomSource, RawTable, SearchConfig,
};

/// Random point sets driven by a seed so shrinking stays meaningful.
fn arb_points(max_n: usize, max_k: usize) -> impl Strategy<Value = PointSet> {
    (1..=max_k, 0..=max_n, any::<u64>()).prop_map(|(k, n, seed)| {
        let mut rng = RandomSource::new(seed);
        uniform_points(&mut rng, n, k)
    })
}

proptest! {
    #[test]
    fn seed_rectangles_are_empty_and_contain_their_query(
        points in arb_points(24, 4),
        seed: u64,
    ) {
        let proj = points.projections();
        let mut rng = RandomSource::new(seed);
        let query = sample_query_point(&proj, &mut rng);
        let rect = seed_rectangle(&query, &proj);
        prop_assert!(rect.is_empty(&points));
        prop_assert!(rect.contains_interior(&query));
    }

    #[test]
    fn every_strategy_emits_empty_maximal_rectangles_deterministically(
        points in arb_points(24, 4),
        seed: u64,
    ) {
        let proj = points.projections();
        for strategy in ExpansionStrategy::ALL {
            let a = create_mehr(&points, &proj, strategy, &mut RandomSource::new(seed));
            let b = create_mehr(&points, &proj, strategy, &mut RandomSource::new(seed));
            prop_assert_eq!(&a, &b, "same seed, same rectangle ({})", strategy);
            prop_assert!(a.is_empty(&points), "{} emitted a non-empty rectangle", strategy);
            prop_assert!(a.is_maximal(&points), "{} emitted a non-maximal rectangle", strategy);
        }
    }

    #[test]
    fn finished_faces_sit_exactly_on_their_blocking_limits(
        points in arb_points(24, 4),
        seed: u64,
    ) {
        let proj = points.projections();
        for strategy in ExpansionStrategy::ALL {
            let rect = create_mehr(&points, &proj, strategy, &mut RandomSource::new(seed));
            for d in 0..rect.dim_count() {
                prop_assert_eq!(rect.blocking_limit(&points, d, Direction::Up), rect.upper()[d]);
                prop_assert_eq!(rect.blocking_limit(&points, d, Direction::Down), rect.lower()[d]);
            }
        }
    }

    #[test]
    fn nudging_any_interior_face_outward_breaks_emptiness(
        points in arb_points(24, 4),
        seed: u64,
    ) {
        let proj = points.projections();
        for strategy in ExpansionStrategy::ALL {
            let rect = create_mehr(&points, &proj, strategy, &mut RandomSource::new(seed));
            for d in 0..rect.dim_count() {
                let (lower, upper) = (rect.lower()[d], rect.upper()[d]);
                if upper < 1.0 {
                    let mut grown = rect.upper().to_vec();
                    grown[d] = upper + (1.0 - upper) / 2.0;
                    let bigger = HyperRect::new(rect.lower().to_vec(), grown).unwrap();
                    prop_assert!(!bigger.is_empty(&points), "{strategy} left slack above dim {d}");
                }
                if lower > 0.0 {
                    let mut shrunk = rect.lower().to_vec();
                    shrunk[d] = lower / 2.0;
                    let bigger = HyperRect::new(shrunk, rect.upper().to_vec()).unwrap();
                    prop_assert!(!bigger.is_empty(&points), "{strategy} left slack below dim {d}");
                }
            }
        }
    }

    #[test]
    fn cleaning_accounts_for_every_row_and_column(
        (cols, cells) in (1usize..5).prop_flat_map(|cols| {
            let cell = prop_oneof![
                Just(String::new()),
                Just("1".to_string()),
                Just("2.5".to_string()),
                Just("-0.75".to_string()),
                Just("x".to_string()),
                Just("7".to_string()),
            ];
            let row = proptest::collection::vec(cell, cols..=cols);
            (Just(cols), proptest::collection::vec(row, 0..12))
        })
    ) {
        let names = (0..cols).map(|c| format!("c{c}")).collect();
        let table = RawTable::new(names, cells).unwrap();
        match clean_and_normalize(&table) {
            Ok((points, log)) => {
                prop_assert_eq!(
                    log.retained.len() + log.dropped_columns.len(),
                    table.column_count()
                );
                prop_assert_eq!(points.point_count() + log.dropped_rows, table.row_count());
                for p in points.points() {
                    for &x in p {
                        prop_assert!((0.0..=1.0).contains(&x));
                    }
                }
            }
            Err(Error::NoDimensions { dropped }) => {
                prop_assert_eq!(dropped.len(), table.column_count());
            }
            Err(other) => prop_assert!(false, "unexpected error: {other}"),
        }
    }

    #[test]
    fn normalization_round_trips_to_original_units(
        rows in proptest::collection::vec(
            proptest::collection::vec(-1.0e6f64..1.0e6, 3),
            2..16,
        )
    ) {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|v| format!("{v:?}")).collect())
            .collect();
        let names: Vec<String> = (0..3).map(|c| format!("c{c}")).collect();
        let table = RawTable::new(names.clone(), cells).unwrap();
        let (points, log) = match clean_and_normalize(&table) {
            Ok(ok) => ok,
            // All three columns constant is possible but vanishingly rare.
            Err(Error::NoDimensions { .. }) => return Ok(()),
            Err(other) => return Err(TestCaseError::fail(format!("unexpected error: {other}"))),
        };
        prop_assert_eq!(log.dropped_rows, 0);
        for (dim, name) in points.dim_names().iter().enumerate() {
            let col: usize = name[1..].parse().unwrap();
            let mut original: Vec<f64> = rows.iter().map(|r| r[col]).collect();
            let mut recovered: Vec<f64> =
                points.points().map(|p| points.denormalize(dim, p[dim])).collect();
            original.sort_by(f64::total_cmp);
            recovered.sort_by(f64::total_cmp);
            for (&a, &b) in original.iter().zip(&recovered) {
                prop_assert!(
                    (a - b).abs() <= 1e-9 * a.abs().max(1.0),
                    "column {name}: {a} became {b}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reports_round_trip_through_json(
        points in arb_points(16, 3),
        seed: u64,
    ) {
        let proj = points.projections();
        let config = SearchConfig {
            stop: 40,
            seed,
            top_n: 8,
            ..SearchConfig::default()
        };
        let search = find_mehrs(&points, &proj, &config).unwrap();
        let report = build_report(
            DatasetSummary::for_point_set(&points),
            &config,
            1,
            false,
            &search,
            &points,
        );
        let once = report.to_json_string();
        let again = JsonReport::from_json(&once).unwrap().to_json_string();
        prop_assert_eq!(once, again);
    }
}

/// Two points placed symmetrically leave four large maximal holes that
/// map onto each other under coordinate swap (the two bands) and under
/// point reflection (the two corner squares). An implementation with no
/// dimension-order or direction bias must find the members of each pair
/// equally often.
#[test]
fn no_strategy_favors_a_dimension_or_direction() {
    let points = PointSet::from_rows(&[vec![0.3, 0.7], vec![0.7, 0.3]]).unwrap();
    let proj = points.projections();
    let rect =
        |lower: [f64; 2], upper: [f64; 2]| HyperRect::new(lower.to_vec(), upper.to_vec()).unwrap();
    let horizontal_band = rect([0.0, 0.3], [1.0, 0.7]);
    let vertical_band = rect([0.3, 0.0], [0.7, 1.0]);
    let low_square = rect([0.0, 0.0], [0.7, 0.7]);
    let high_square = rect([0.3, 0.3], [1.0, 1.0]);

    const TRIALS: usize = 10_000;
    const TOLERANCE: f64 = 0.05;
    for strategy in ExpansionStrategy::ALL {
        let mut counts = [0usize; 4];
        for seed in 0..TRIALS as u64 {
            let mut rng = RandomSource::new(seed);
            let found = create_mehr(&points, &proj, strategy, &mut rng);
            for (slot, target) in [&horizontal_band, &vertical_band, &low_square, &high_square]
                .iter()
                .enumerate()
            {
                if found == **target {
                    counts[slot] += 1;
                }
            }
        }
        let freq = |i: usize| counts[i] as f64 / TRIALS as f64;
        assert!(
            (freq(0) - freq(1)).abs() < TOLERANCE,
            "{strategy}: horizontal band {} vs vertical band {}",
            counts[0],
            counts[1]
        );
        assert!(
            (freq(2) - freq(3)).abs() < TOLERANCE,
            "{strategy}: low square {} vs high square {}",
            counts[2],
            counts[3]
        );
        assert!(
            counts[0] + counts[1] > 0,
            "{strategy} never found either band in {TRIALS} trials"
        );
    }
}

/// The unit-cube degenerate case flows through the whole stack.
#[test]
fn empty_datasets_search_to_the_unit_cube() {
    let mut rng = RandomSource::new(5);
    let points = uniform_points(&mut rng, 0, 3);
    let proj = points.projections();
    for strategy in ExpansionStrategy::ALL {
        let rect = create_mehr(&points, &proj, strategy, &mut rng);
        assert_eq!(rect, HyperRect::unit_cube(3));
    }
}
