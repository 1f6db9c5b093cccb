//! The Monte Carlo search loop, result ranking, and summary analyses.
//!
//! A run repeatedly generates maximal empty rectangles and keeps score:
//! a patience counter `c` resets whenever a rectangle strictly beats the
//! best volume so far and advances only on sufficiently-large
//! non-improving rectangles (volume above the `min_volume` filter,
//! default `1/n`). The run halts once `c` reaches the configured `stop`
//! patience — or at a hard iteration cap that guards against datasets
//! where large rectangles are so rare the counter never moves.

use std::cmp::Ordering;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::expand::{create_mehr, ExpansionStrategy};
use crate::geom::{HyperRect, PointSet, Projections};
use crate::rng::RandomSource;

/// Tuning knobs for one search run.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub strategy: ExpansionStrategy,
    /// Patience: consecutive large non-improving rectangles before halting.
    pub stop: u64,
    pub seed: u64,
    /// Volume filter; `None` means the `1/n` default (`0` when `n = 0`).
    pub min_volume: Option<f64>,
    /// Capacity of the retained largest-rectangle set.
    pub top_n: usize,
    /// Hard cap on generated rectangles; `None` means `10 * stop * k`.
    pub max_iterations: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            strategy: ExpansionStrategy::RandomAmounts,
            stop: 1000,
            seed: 0,
            min_volume: None,
            top_n: 100,
            max_iterations: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.stop == 0 {
            return Err(Error::InvalidConfig("stop must be at least 1".to_string()));
        }
        if self.top_n == 0 {
            return Err(Error::InvalidConfig("top_n must be at least 1".to_string()));
        }
        if let Some(v) = self.min_volume {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidConfig(format!(
                    "min_volume {v} must lie in [0, 1]"
                )));
            }
        }
        if self.max_iterations == Some(0) {
            return Err(Error::InvalidConfig(
                "max_iterations must be at least 1".to_string(),
            ));
        }
        Ok(())
    }

    /// The volume filter actually applied for an `n`-point dataset.
    pub fn effective_min_volume(&self, n: usize) -> f64 {
        self.min_volume
            .unwrap_or(if n == 0 { 0.0 } else { 1.0 / n as f64 })
    }

    /// The iteration cap actually applied for a `k`-dimensional dataset.
    pub fn effective_max_iterations(&self, k: usize) -> u64 {
        self.max_iterations
            .unwrap_or_else(|| self.stop.saturating_mul(10).saturating_mul(k as u64))
            .max(1)
    }
}

/// Counters describing one run (or a merge of runs).
#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    /// Total rectangles generated.
    pub generated: u64,
    /// How many had volume at or below the filter.
    pub too_small: u64,
    /// Rectangles generated before the final maximum first appeared.
    pub before_best: u64,
    /// Wall-clock time of the search, in milliseconds.
    pub wall_ms: u64,
    /// Whether the hard iteration cap ended the run instead of patience.
    pub capped: bool,
}

/// Everything a run produces.
#[derive(Clone, Debug)]
pub struct SearchReport {
    /// Time-ordered rectangles that each strictly improved the maximum
    /// volume; the last entry is the run's answer. Never empty.
    pub improving: Vec<HyperRect>,
    /// Up to `top_n` distinct largest rectangles seen, best first.
    pub top: Vec<HyperRect>,
    pub stats: SearchStats,
}

impl SearchReport {
    /// The largest rectangle found.
    pub fn max_rect(&self) -> &HyperRect {
        self.improving
            .last()
            .expect("a completed search has at least one improving rectangle")
    }

    pub fn max_volume(&self) -> f64 {
        self.max_rect().volume()
    }
}

/// Deterministic ordering for result lists: volume descending, ties broken
/// lexicographically by lower then upper bounds. `Equal` iff the bound
/// vectors are identical.
pub fn rect_order(a: &HyperRect, b: &HyperRect) -> Ordering {
    b.volume()
        .total_cmp(&a.volume())
        .then_with(|| lex(a.lower(), b.lower()))
        .then_with(|| lex(a.upper(), b.upper()))
}

fn lex(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Sorted copy of a rectangle list under [`rect_order`].
pub fn rank(rects: &[HyperRect]) -> Vec<HyperRect> {
    let mut sorted = rects.to_vec();
    sorted.sort_by(rect_order);
    sorted
}

/// Bounded, sorted, duplicate-free set of the best rectangles seen.
#[derive(Clone, Debug)]
struct TopSet {
    cap: usize,
    rects: Vec<HyperRect>,
}

impl TopSet {
    fn new(cap: usize) -> Self {
        TopSet {
            cap,
            rects: Vec::new(),
        }
    }

    fn offer(&mut self, rect: &HyperRect) {
        match self.rects.binary_search_by(|r| rect_order(r, rect)) {
            Ok(_) => {} // exact duplicate bounds
            Err(pos) => {
                if pos < self.cap {
                    self.rects.insert(pos, rect.clone());
                    self.rects.truncate(self.cap);
                }
            }
        }
    }

    fn into_vec(self) -> Vec<HyperRect> {
        self.rects
    }
}

/// Runs the Monte Carlo search until the patience counter reaches
/// `cfg.stop` (or the iteration cap fires). For an empty dataset the unit
/// cube is the unique answer and is returned immediately.
pub fn find_mehrs(
    points: &PointSet,
    proj: &Projections,
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    cfg.validate()?;
    let start = Instant::now();
    let k = points.dim_count();
    if points.point_count() == 0 {
        let cube = HyperRect::unit_cube(k);
        return Ok(SearchReport {
            improving: vec![cube.clone()],
            top: vec![cube],
            stats: SearchStats {
                generated: 1,
                wall_ms: start.elapsed().as_millis() as u64,
                ..SearchStats::default()
            },
        });
    }

    let min_volume = cfg.effective_min_volume(points.point_count());
    let cap = cfg.effective_max_iterations(k);
    let mut rng = RandomSource::new(cfg.seed);
    let mut top = TopSet::new(cfg.top_n);
    let mut improving: Vec<HyperRect> = Vec::new();
    let mut best = 0.0_f64;
    let mut stats = SearchStats::default();
    let mut misses = 0u64;

    while misses < cfg.stop {
        if stats.generated >= cap {
            stats.capped = true;
            break;
        }
        let rect = create_mehr(points, proj, cfg.strategy, &mut rng);
        stats.generated += 1;
        let volume = rect.volume();
        top.offer(&rect);
        if volume <= min_volume {
            stats.too_small += 1;
        }
        if volume > best {
            best = volume;
            stats.before_best = stats.generated - 1;
            improving.push(rect);
            misses = 0;
        } else if volume > min_volume {
            misses += 1;
        }
    }

    stats.wall_ms = start.elapsed().as_millis() as u64;
    Ok(SearchReport {
        improving,
        top: top.into_vec(),
        stats,
    })
}

/// Runs `runs` independent searches (seeds `cfg.seed`, `cfg.seed + 1`, ...)
/// concurrently over the shared point set and merges the reports: the
/// best run contributes the improving history, generation counters are
/// summed, and the top set is the best of all runs combined.
pub fn run_search(
    points: &PointSet,
    proj: &Projections,
    cfg: &SearchConfig,
    runs: usize,
) -> Result<SearchReport> {
    if runs == 0 {
        return Err(Error::InvalidConfig("runs must be at least 1".to_string()));
    }
    cfg.validate()?;
    if runs == 1 {
        return find_mehrs(points, proj, cfg);
    }
    let start = Instant::now();
    let reports: Vec<SearchReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..runs)
            .map(|r| {
                let run_cfg = SearchConfig {
                    seed: cfg.seed.wrapping_add(r as u64),
                    ..cfg.clone()
                };
                scope.spawn(move || {
                    find_mehrs(points, proj, &run_cfg)
                        .expect("configuration was validated before spawning")
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut merged = merge_reports(reports, cfg.top_n);
    merged.stats.wall_ms = start.elapsed().as_millis() as u64;
    Ok(merged)
}

/// Merges per-run reports deterministically (run order, first-best wins
/// volume ties). Panics on an empty input list.
pub fn merge_reports(reports: Vec<SearchReport>, top_n: usize) -> SearchReport {
    assert!(
        !reports.is_empty(),
        "contract violation: cannot merge zero reports"
    );
    let mut winner = 0;
    for (i, report) in reports.iter().enumerate() {
        if report.max_volume() > reports[winner].max_volume() {
            winner = i;
        }
    }
    let mut top = TopSet::new(top_n);
    let mut stats = SearchStats::default();
    for report in &reports {
        for rect in &report.top {
            top.offer(rect);
        }
        stats.generated += report.stats.generated;
        stats.too_small += report.stats.too_small;
        stats.capped |= report.stats.capped;
        stats.wall_ms = stats.wall_ms.max(report.stats.wall_ms);
    }
    stats.before_best = reports[winner].stats.before_best;
    SearchReport {
        improving: reports[winner].improving.clone(),
        top: top.into_vec(),
        stats,
    }
}

/// For each dimension, the fraction of rectangles whose normalized bounds
/// differ from the full `[0, 1]` span — the dimensions that would appear
/// in extracted rules.
///
/// Panics on an empty list or inconsistent dimension counts.
pub fn bounding_dimension_frequencies(rects: &[HyperRect]) -> Vec<f64> {
    assert!(
        !rects.is_empty(),
        "contract violation: frequency analysis needs at least one rectangle"
    );
    let k = rects[0].dim_count();
    assert!(
        rects.iter().all(|r| r.dim_count() == k),
        "contract violation: rectangles must share one dimension count"
    );
    (0..k)
        .map(|d| {
            let bounded = rects.iter().filter(|r| r.is_bounding_dim(d)).count();
            bounded as f64 / rects.len() as f64
        })
        .collect()
}
