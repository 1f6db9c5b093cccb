//! Core geometry: normalized point sets, per-dimension projections, and
//! axis-aligned hyper-rectangles inside the unit cube.
//!
//! Everything downstream works in normalized space: each of the `k`
//! dimensions spans `[0, 1]`, and a rectangle is *empty* when no data point
//! lies strictly inside it. Points on a bounding face do not violate
//! emptiness — they are what pins a maximal rectangle in place.
//!
//! Comparisons are exact `f64` equality throughout. Every bound a rectangle
//! can take is drawn from the finite set of projection values plus the
//! domain boundaries, so there is no accumulated arithmetic to tolerate.

use crate::error::{Error, Result};

/// Direction of travel along one dimension: towards 0 or towards 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Down,
    Up,
}

impl Direction {
    /// Both directions, in a fixed canonical order.
    pub const BOTH: [Direction; 2] = [Direction::Down, Direction::Up];
}

/// An immutable set of `n` points in `[0, 1]^k`, with enough bookkeeping to
/// map results back to the original units.
///
/// Invariants enforced at construction: `k >= 1`, every coordinate lies in
/// `[0, 1]`, all rows have the same width, and per-dimension scale ranges
/// are non-degenerate (`min < max`). A set may be empty (`n = 0`); searching
/// one yields the unit cube.
#[derive(Clone, Debug)]
pub struct PointSet {
    /// Row-major coordinates, `n * k` long.
    coords: Vec<f64>,
    n: usize,
    k: usize,
    dim_names: Vec<String>,
    /// `(min, max)` of each dimension in original units, for denormalizing.
    dim_scale: Vec<(f64, f64)>,
}

impl PointSet {
    /// Builds a point set from normalized rows plus naming and scale
    /// metadata. `names` and `scale` must both have length `k`.
    pub fn new(rows: &[Vec<f64>], names: Vec<String>, scale: Vec<(f64, f64)>) -> Result<Self> {
        let k = names.len();
        if k == 0 {
            return Err(Error::InvalidPointSet(
                "a point set needs at least one dimension".to_string(),
            ));
        }
        if scale.len() != k {
            return Err(Error::InvalidPointSet(format!(
                "{} dimension names but {} scale ranges",
                k,
                scale.len()
            )));
        }
        for (d, &(lo, hi)) in scale.iter().enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidPointSet(format!(
                    "dimension {} ({}) has degenerate scale range [{lo}, {hi}]",
                    d, names[d]
                )));
            }
        }
        let mut coords = Vec::with_capacity(rows.len() * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidPointSet(format!(
                    "row {} has {} coordinates, expected {}",
                    i,
                    row.len(),
                    k
                )));
            }
            for (d, &v) in row.iter().enumerate() {
                // NaN fails this comparison, so it is rejected here too.
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::InvalidPointSet(format!(
                        "row {i}, dimension {d}: coordinate {v} is outside [0, 1]"
                    )));
                }
            }
            coords.extend_from_slice(row);
        }
        Ok(PointSet {
            coords,
            n: rows.len(),
            k,
            dim_names: names,
            dim_scale: scale,
        })
    }

    /// Convenience constructor for already-normalized data: dimensions are
    /// named `d0, d1, ...` and the identity scale `(0, 1)` is assumed.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let k = rows.first().map_or(1, Vec::len);
        let names = (0..k).map(|d| format!("d{d}")).collect();
        let scale = vec![(0.0, 1.0); k];
        Self::new(rows, names, scale)
    }

    /// Number of points.
    pub fn point_count(&self) -> usize {
        self.n
    }

    /// Number of dimensions (`k >= 1`).
    pub fn dim_count(&self) -> usize {
        self.k
    }

    /// The `i`-th point as a coordinate slice of length `k`.
    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.k..(i + 1) * self.k]
    }

    /// Iterates over all points.
    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.k)
    }

    pub fn dim_names(&self) -> &[String] {
        &self.dim_names
    }

    pub fn dim_scale(&self) -> &[(f64, f64)] {
        &self.dim_scale
    }

    /// Maps a normalized coordinate in dimension `dim` back to original
    /// units.
    pub fn denormalize(&self, dim: usize, v: f64) -> f64 {
        let (lo, hi) = self.dim_scale[dim];
        lo + v * (hi - lo)
    }

    /// Computes the sorted distinct projection values of every dimension.
    pub fn projections(&self) -> Projections {
        Projections::new(self)
    }
}

/// Sorted distinct projection values of a point set, one list per dimension.
///
/// These are the only interior positions a rectangle bound can take, which
/// is what makes exact `f64` comparison sound.
#[derive(Clone, Debug)]
pub struct Projections {
    values: Vec<Vec<f64>>,
}

impl Projections {
    pub fn new(points: &PointSet) -> Self {
        let k = points.dim_count();
        let mut values = vec![Vec::with_capacity(points.point_count()); k];
        for p in points.points() {
            for (d, &v) in p.iter().enumerate() {
                values[d].push(v);
            }
        }
        for vs in &mut values {
            vs.sort_by(f64::total_cmp);
            vs.dedup();
        }
        Projections { values }
    }

    pub fn dim_count(&self) -> usize {
        self.values.len()
    }

    /// Sorted distinct values of dimension `dim`.
    pub fn values(&self, dim: usize) -> &[f64] {
        &self.values[dim]
    }

    /// Does `x` coincide exactly with a projection value of `dim`?
    pub fn contains(&self, dim: usize, x: f64) -> bool {
        self.values[dim]
            .binary_search_by(|v| v.total_cmp(&x))
            .is_ok()
    }

    /// Largest projection value strictly below `x`, if any.
    pub fn below(&self, dim: usize, x: f64) -> Option<f64> {
        let vs = &self.values[dim];
        let idx = vs.partition_point(|&v| v < x);
        if idx == 0 {
            None
        } else {
            Some(vs[idx - 1])
        }
    }

    /// Smallest projection value strictly above `x`, if any.
    pub fn above(&self, dim: usize, x: f64) -> Option<f64> {
        let vs = &self.values[dim];
        let idx = vs.partition_point(|&v| v <= x);
        vs.get(idx).copied()
    }

    /// Projection values of `dim` strictly between `lo` and `hi`
    /// (both ends excluded).
    pub fn open_range(&self, dim: usize, lo: f64, hi: f64) -> &[f64] {
        let vs = &self.values[dim];
        let start = vs.partition_point(|&v| v <= lo);
        let end = vs.partition_point(|&v| v < hi);
        &vs[start.min(end)..end]
    }
}

/// An axis-aligned hyper-rectangle inside the unit cube, stored as per-
/// dimension lower and upper bounds with `0 <= lower < upper <= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperRect {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl HyperRect {
    /// Builds a rectangle, validating bound ordering and range.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidRect(format!(
                "bound vectors must be non-empty and equal length (got {} and {})",
                lower.len(),
                upper.len()
            )));
        }
        for (d, (&l, &u)) in lower.iter().zip(&upper).enumerate() {
            if !(0.0 <= l && l < u && u <= 1.0) {
                return Err(Error::InvalidRect(format!(
                    "dimension {d}: bounds [{l}, {u}] must satisfy 0 <= lower < upper <= 1"
                )));
            }
        }
        Ok(HyperRect { lower, upper })
    }

    /// The whole normalized domain `[0, 1]^k`.
    pub fn unit_cube(k: usize) -> Self {
        assert!(
            k >= 1,
            "contract violation: a rectangle needs at least one dimension"
        );
        HyperRect {
            lower: vec![0.0; k],
            upper: vec![1.0; k],
        }
    }

    pub fn dim_count(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Width along `dim`.
    pub fn width(&self, dim: usize) -> f64 {
        self.upper[dim] - self.lower[dim]
    }

    /// Product of per-dimension widths. Always positive.
    pub fn volume(&self) -> f64 {
        (0..self.dim_count()).map(|d| self.width(d)).product()
    }

    /// Is this dimension bounded by data rather than spanning the whole
    /// domain?
    pub fn is_bounding_dim(&self, dim: usize) -> bool {
        self.lower[dim] != 0.0 || self.upper[dim] != 1.0
    }

    /// The bound addressed by `(dim, dir)`: lower for [`Direction::Down`],
    /// upper for [`Direction::Up`].
    pub fn bound(&self, dim: usize, dir: Direction) -> f64 {
        match dir {
            Direction::Down => self.lower[dim],
            Direction::Up => self.upper[dim],
        }
    }

    pub(crate) fn set_bound(&mut self, dim: usize, dir: Direction, v: f64) {
        match dir {
            Direction::Down => self.lower[dim] = v,
            Direction::Up => self.upper[dim] = v,
        }
        debug_assert!(self.lower[dim] < self.upper[dim]);
    }

    /// Is `point` strictly inside this rectangle? Points on a face are
    /// *not* contained.
    ///
    /// Panics if the point's dimension count differs from the rectangle's.
    pub fn contains_interior(&self, point: &[f64]) -> bool {
        assert_eq!(
            point.len(),
            self.dim_count(),
            "contract violation: point has {} coordinates, rectangle has {} dimensions",
            point.len(),
            self.dim_count()
        );
        self.lower
            .iter()
            .zip(&self.upper)
            .zip(point)
            .all(|((&l, &u), &x)| l < x && x < u)
    }

    /// Like [`contains_interior`](Self::contains_interior) but ignoring one
    /// dimension — the interiority test used for face support and blocking.
    fn interior_except(&self, point: &[f64], skip: usize) -> bool {
        for d in 0..self.dim_count() {
            if d == skip {
                continue;
            }
            let x = point[d];
            if x <= self.lower[d] || x >= self.upper[d] {
                return false;
            }
        }
        true
    }

    /// Does no point of `points` lie strictly inside this rectangle?
    ///
    /// Panics if the point set's dimension count differs from the
    /// rectangle's.
    pub fn is_empty(&self, points: &PointSet) -> bool {
        assert_eq!(
            points.dim_count(),
            self.dim_count(),
            "contract violation: point set has {} dimensions, rectangle has {}",
            points.dim_count(),
            self.dim_count()
        );
        !points.points().any(|p| self.contains_interior(p))
    }

    /// Is this empty rectangle maximal — i.e. is every face either on the
    /// domain boundary or supported by a point lying on that face while
    /// strictly interior in all other dimensions?
    ///
    /// Panics if the rectangle is not empty with respect to `points`;
    /// maximality is only defined for empty rectangles.
    pub fn is_maximal(&self, points: &PointSet) -> bool {
        assert!(
            self.is_empty(points),
            "contract violation: maximality is only defined for empty rectangles"
        );
        for d in 0..self.dim_count() {
            let lower_supported = self.lower[d] == 0.0
                || points
                    .points()
                    .any(|p| p[d] == self.lower[d] && self.interior_except(p, d));
            if !lower_supported {
                return false;
            }
            let upper_supported = self.upper[d] == 1.0
                || points
                    .points()
                    .any(|p| p[d] == self.upper[d] && self.interior_except(p, d));
            if !upper_supported {
                return false;
            }
        }
        true
    }

    /// How far the `(dim, dir)` bound of this *empty* rectangle can move
    /// before a point would end up strictly inside.
    ///
    /// For [`Direction::Up`] this is the smallest coordinate `p[dim]` at or
    /// beyond the current upper bound among points strictly interior in all
    /// other dimensions, or `1.0` when no such point exists; `Down` is
    /// symmetric towards `0.0`. A blocker lying exactly on the current
    /// bound freezes it in place (the limit equals the bound).
    ///
    /// The rectangle must be empty with respect to `points`; this is not
    /// re-checked here because the expansion loops call it millions of
    /// times.
    pub fn blocking_limit(&self, points: &PointSet, dim: usize, dir: Direction) -> f64 {
        debug_assert!(dim < self.dim_count());
        debug_assert_eq!(points.dim_count(), self.dim_count());
        match dir {
            Direction::Up => {
                let bound = self.upper[dim];
                let mut limit = 1.0;
                for p in points.points() {
                    let c = p[dim];
                    if c >= bound && c < limit && self.interior_except(p, dim) {
                        limit = c;
                    }
                }
                limit
            }
            Direction::Down => {
                let bound = self.lower[dim];
                let mut limit = 0.0;
                for p in points.points() {
                    let c = p[dim];
                    if c <= bound && c > limit && self.interior_except(p, dim) {
                        limit = c;
                    }
                }
                limit
            }
        }
    }

    /// Component-wise containment: does this rectangle enclose `other`
    /// (faces may touch)?
    pub fn contains_rect(&self, other: &HyperRect) -> bool {
        assert_eq!(self.dim_count(), other.dim_count());
        self.lower.iter().zip(&other.lower).all(|(&a, &b)| a <= b)
            && self.upper.iter().zip(&other.upper).all(|(&a, &b)| a >= b)
    }
}
