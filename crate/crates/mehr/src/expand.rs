//! Seed-rectangle construction and the three expansion strategies.
//!
//! One Monte Carlo iteration is: sample a random query point that avoids
//! every projection value, wrap it in the guaranteed-empty seed rectangle
//! spanned by the adjacent projection values, then grow that seed to
//! maximality with one of three strategies:
//!
//! * [`MaxPerDimension`](ExpansionStrategy::MaxPerDimension) — one full
//!   sweep per dimension in shuffled order. Fast and heavily biased: every
//!   dimension expanded before the last reaches the domain boundary
//!   unopposed (no point can be strictly interior to an untouched seed
//!   gap), so outputs span the full domain in all but one dimension.
//! * [`EqualStepRounds`](ExpansionStrategy::EqualStepRounds) — all
//!   directions advance one candidate value per round until each freezes
//!   at its blocking limit.
//! * [`RandomAmounts`](ExpansionStrategy::RandomAmounts) — repeatedly
//!   pick a random unblocked direction and a random admissible growth
//!   amount; the only strategy whose reachable set is every maximal
//!   rectangle containing the seed.
//!
//! All three terminate because every step moves a bound to one of finitely
//! many candidate values and never retreats, and all three preserve
//! emptiness because no step crosses a blocking limit.

use crate::geom::{Direction, HyperRect, PointSet, Projections};
use crate::rng::RandomSource;

/// Policy for growing a seed rectangle to maximality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionStrategy {
    /// Approach 1: maximally expand one dimension at a time.
    MaxPerDimension,
    /// Approach 2: advance every direction one candidate step per round.
    EqualStepRounds,
    /// Approach 3: random direction, random admissible amount.
    RandomAmounts,
}

impl ExpansionStrategy {
    /// All strategies, in numbering order.
    pub const ALL: [ExpansionStrategy; 3] = [
        ExpansionStrategy::MaxPerDimension,
        ExpansionStrategy::EqualStepRounds,
        ExpansionStrategy::RandomAmounts,
    ];

    /// The conventional 1-based number used on the command line.
    pub fn number(self) -> u8 {
        match self {
            ExpansionStrategy::MaxPerDimension => 1,
            ExpansionStrategy::EqualStepRounds => 2,
            ExpansionStrategy::RandomAmounts => 3,
        }
    }

    /// Inverse of [`number`](Self::number).
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(ExpansionStrategy::MaxPerDimension),
            2 => Some(ExpansionStrategy::EqualStepRounds),
            3 => Some(ExpansionStrategy::RandomAmounts),
            _ => None,
        }
    }

    /// Grows `seed` to a maximal empty rectangle with this strategy.
    pub fn expand(
        self,
        seed: HyperRect,
        points: &PointSet,
        proj: &Projections,
        rng: &mut RandomSource,
    ) -> HyperRect {
        match self {
            ExpansionStrategy::MaxPerDimension => expand_max_per_dimension(seed, points, rng),
            ExpansionStrategy::EqualStepRounds => expand_equal_rounds(seed, points, proj, rng),
            ExpansionStrategy::RandomAmounts => expand_random_amounts(seed, points, proj, rng),
        }
    }
}

impl std::fmt::Display for ExpansionStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            ExpansionStrategy::MaxPerDimension => "max-per-dimension",
            ExpansionStrategy::EqualStepRounds => "equal-step-rounds",
            ExpansionStrategy::RandomAmounts => "random-amounts",
        };
        write!(f, "{name}")
    }
}

/// Draws a query point with each coordinate uniform in `[0, 1)` and not
/// equal to any projection value of its dimension; a coordinate that
/// collides exactly is redrawn.
pub fn sample_query_point(proj: &Projections, rng: &mut RandomSource) -> Vec<f64> {
    (0..proj.dim_count())
        .map(|d| loop {
            let r = rng.uniform();
            if !proj.contains(d, r) {
                break r;
            }
        })
        .collect()
}

/// Builds the empty rectangle around `query`: per dimension, the largest
/// projection value below the query coordinate (or 0) and the smallest
/// above it (or 1).
///
/// The result is empty by construction: a point strictly inside it would
/// project, in every dimension, strictly between two *adjacent* projection
/// values — a contradiction.
pub fn seed_rectangle(query: &[f64], proj: &Projections) -> HyperRect {
    assert_eq!(
        query.len(),
        proj.dim_count(),
        "contract violation: query point and projections disagree on dimension count"
    );
    let mut lower = Vec::with_capacity(query.len());
    let mut upper = Vec::with_capacity(query.len());
    for (d, &q) in query.iter().enumerate() {
        debug_assert!(
            !proj.contains(d, q),
            "query point must avoid projection values"
        );
        lower.push(proj.below(d, q).unwrap_or(0.0));
        upper.push(proj.above(d, q).unwrap_or(1.0));
    }
    HyperRect::new(lower, upper).expect("adjacent projection values bracket the query strictly")
}

/// Approach 1: visits dimensions in a shuffled order and, within each,
/// both directions in a shuffled order, setting every bound straight to
/// its blocking limit.
pub fn expand_max_per_dimension(
    rect: HyperRect,
    points: &PointSet,
    rng: &mut RandomSource,
) -> HyperRect {
    let mut rect = rect;
    let mut dims: Vec<usize> = (0..rect.dim_count()).collect();
    rng.shuffle(&mut dims);
    for d in dims {
        let mut dirs = Direction::BOTH;
        rng.shuffle(&mut dirs);
        for dir in dirs {
            let limit = rect.blocking_limit(points, d, dir);
            rect.set_bound(d, dir, limit);
        }
    }
    rect
}

/// Approach 2: round-based lockstep growth. Each round visits the still-
/// open directions in a freshly shuffled order and advances each bound to
/// the next projection value (never past the blocking limit); a direction
/// freezes once its bound sits at the blocking limit, which includes the
/// domain boundary case.
pub fn expand_equal_rounds(
    rect: HyperRect,
    points: &PointSet,
    proj: &Projections,
    rng: &mut RandomSource,
) -> HyperRect {
    let mut rect = rect;
    let mut open: Vec<(usize, Direction)> = all_directions(rect.dim_count());
    while !open.is_empty() {
        rng.shuffle(&mut open);
        let mut still_open = Vec::with_capacity(open.len());
        for &(d, dir) in &open {
            let bound = rect.bound(d, dir);
            let limit = rect.blocking_limit(points, d, dir);
            if limit == bound {
                continue;
            }
            // The nearest projection value beyond the bound, capped at the
            // limit. A blocker's coordinate is itself a projection value,
            // so the cap only ever bites at equality — or when the limit
            // is the domain boundary and no projection value remains.
            let target = match dir {
                Direction::Up => proj.above(d, bound).map_or(limit, |v| v.min(limit)),
                Direction::Down => proj.below(d, bound).map_or(limit, |v| v.max(limit)),
            };
            rect.set_bound(d, dir, target);
            if target != limit {
                still_open.push((d, dir));
            }
        }
        open = still_open;
    }
    rect
}

/// Approach 3: repeatedly picks a uniformly random unblocked direction and
/// moves its bound to a uniformly random choice among the projection
/// values strictly beyond it, or all the way to the blocking limit. Every
/// pick strictly advances, so termination is guaranteed; drawing from the
/// discrete candidate set is what lets the bound *reach* the limit at all.
pub fn expand_random_amounts(
    rect: HyperRect,
    points: &PointSet,
    proj: &Projections,
    rng: &mut RandomSource,
) -> HyperRect {
    let mut rect = rect;
    let mut open = all_directions(rect.dim_count());
    while !open.is_empty() {
        let pick = rng.index(open.len());
        let (d, dir) = open[pick];
        let bound = rect.bound(d, dir);
        let limit = rect.blocking_limit(points, d, dir);
        if limit == bound {
            open.swap_remove(pick);
            continue;
        }
        let between = match dir {
            Direction::Up => proj.open_range(d, bound, limit),
            Direction::Down => proj.open_range(d, limit, bound),
        };
        let choice = rng.index(between.len() + 1);
        let target = between.get(choice).copied().unwrap_or(limit);
        rect.set_bound(d, dir, target);
        if target == limit {
            open.swap_remove(pick);
        }
    }
    rect
}

/// One full Monte Carlo iteration: query point, seed, expansion.
pub fn create_mehr(
    points: &PointSet,
    proj: &Projections,
    strategy: ExpansionStrategy,
    rng: &mut RandomSource,
) -> HyperRect {
    let query = sample_query_point(proj, rng);
    let seed = seed_rectangle(&query, proj);
    strategy.expand(seed, points, proj, rng)
}

fn all_directions(k: usize) -> Vec<(usize, Direction)> {
    (0..k)
        .flat_map(|d| Direction::BOTH.into_iter().map(move |dir| (d, dir)))
        .collect()
}
