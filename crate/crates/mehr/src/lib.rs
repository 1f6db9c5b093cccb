//! Monte Carlo discovery of maximal empty hyper-rectangles (holes) in
//! numeric point sets.
//!
//! Given `n` points in a `k`-dimensional unit cube, an *empty
//! hyper-rectangle* is an axis-aligned box containing no point strictly
//! inside it; it is *maximal* when every face either lies on the domain
//! boundary or is pinned by a point that would fall strictly inside if the
//! face moved any further. Large maximal empty rectangles are the holes of
//! a dataset — regions where observations are conspicuously absent — and
//! each one reads directly as an if/then rule over the original columns.
//!
//! Exhaustive enumeration is exponential in `k`, so the search is
//! randomized: sample a query point, snap a seed box to the neighboring
//! coordinate projections, then grow it dimension by dimension until every
//! face is blocked. Three interchangeable growth strategies
//! ([`ExpansionStrategy`]) trade greed for variety; repeated seeded trials
//! rank the discovered rectangles by volume. Results are deterministic for
//! a fixed seed, and on small instances every emitted rectangle can be
//! cross-checked against the exhaustive enumerator in [`oracle`].
//!
//! ```
//! use mehr::{run_search, PointSet, SearchConfig};
//!
//! // Four points leaving an obvious vertical band untouched.
//! let points = PointSet::from_rows(&[
//!     vec![0.3, 0.4],
//!     vec![0.8, 0.6],
//!     vec![0.1, 0.9],
//!     vec![0.9, 0.1],
//! ])?;
//! let projections = points.projections();
//! let config = SearchConfig {
//!     stop: 200,
//!     ..SearchConfig::default()
//! };
//! let report = run_search(&points, &projections, &config, 1)?;
//! let best = report.max_rect();
//! assert!(best.is_empty(&points) && best.is_maximal(&points));
//! assert!(report.max_volume() > 0.2);
//! # Ok::<(), mehr::Error>(())
//! ```
//!
//! The crate ships a thin CLI (`mehr`) that runs the same pipeline over a
//! CSV file: non-numeric and constant columns are dropped, rows with
//! missing values are dropped, surviving columns are min-max normalized,
//! and the findings are reported as JSON, ranked rules, or CSV with
//! bounds translated back to original units.

pub mod error;
pub mod expand;
pub mod geom;
pub mod ingest;
pub mod oracle;
pub mod report;
pub mod rng;
pub mod rules;
pub mod search;

pub use error::{Error, Result};
pub use expand::{create_mehr, sample_query_point, seed_rectangle, ExpansionStrategy};
pub use geom::{Direction, HyperRect, PointSet, Projections};
pub use ingest::{clean_and_normalize, load_csv, CleaningLog, DropReason, RawTable};
pub use oracle::{enumerate_all_mehrs, OracleResult, MAX_ORACLE_DIMS, MAX_ORACLE_POINTS};
pub use report::{build_oracle_report, build_report, DatasetSummary, JsonReport, OracleReport};
pub use rng::RandomSource;
pub use rules::{extract_rule, Rule, RuleTerm};
pub use search::{
    bounding_dimension_frequencies, find_mehrs, merge_reports, rank, run_search, SearchConfig,
    SearchReport, SearchStats,
};
