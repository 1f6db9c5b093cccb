//! Exhaustive ground-truth enumeration for small instances.
//!
//! Every face of a maximal empty rectangle lies either on the domain
//! boundary or on a data point's coordinate, so the candidate values
//! `{0} ∪ projections ∪ {1}` per dimension discretize the search space
//! losslessly. The enumerator tries every candidate interval combination,
//! keeps the empty ones, and filters to maximal members by the one-step
//! growth test: a rectangle is maximal iff growing any single face to its
//! adjacent candidate value admits a point. (Growing a face by *less* than
//! one candidate step can only swallow a point already lying on that face,
//! and growing it further only adds more space, so checking the single
//! adjacent step per direction is exact.)
//!
//! Cost is combinatorial — with `c` candidates per dimension there are
//! `O(c^{2k})` interval combinations — hence the hard size guard.

use crate::error::{Error, Result};
use crate::geom::{HyperRect, PointSet};
use crate::search::rect_order;

/// Largest point count the enumerator accepts.
pub const MAX_ORACLE_POINTS: usize = 12;
/// Largest dimension count the enumerator accepts.
pub const MAX_ORACLE_DIMS: usize = 3;

/// The complete maximal-empty-rectangle set of one instance.
#[derive(Clone, Debug)]
pub struct OracleResult {
    mehrs: Vec<HyperRect>,
}

impl OracleResult {
    /// All maximal empty rectangles, best-first (volume descending, ties
    /// by lower then upper bounds).
    pub fn mehrs(&self) -> &[HyperRect] {
        &self.mehrs
    }

    pub fn count(&self) -> usize {
        self.mehrs.len()
    }

    /// The global maximum volume.
    pub fn max_volume(&self) -> f64 {
        self.mehrs.first().map_or(0.0, HyperRect::volume)
    }

    /// Exact membership test. Rectangle bounds produced by the search are
    /// drawn from the same candidate values, so bitwise comparison is the
    /// right notion of equality.
    pub fn contains(&self, rect: &HyperRect) -> bool {
        self.mehrs.binary_search_by(|r| rect_order(r, rect)).is_ok()
    }
}

/// Enumerates every maximal empty rectangle of `points`. Refuses
/// instances beyond the size guard.
pub fn enumerate_all_mehrs(points: &PointSet) -> Result<OracleResult> {
    let n = points.point_count();
    let k = points.dim_count();
    if n > MAX_ORACLE_POINTS || k > MAX_ORACLE_DIMS {
        return Err(Error::InstanceTooLarge {
            points: n,
            dims: k,
            max_points: MAX_ORACLE_POINTS,
            max_dims: MAX_ORACLE_DIMS,
        });
    }

    let proj = points.projections();
    let candidates: Vec<Vec<f64>> = (0..k)
        .map(|d| {
            let mut vs = Vec::with_capacity(proj.values(d).len() + 2);
            vs.push(0.0);
            vs.extend_from_slice(proj.values(d));
            vs.push(1.0);
            vs.dedup();
            vs
        })
        .collect();

    let mut mehrs = Vec::new();
    let mut lo_idx = vec![0usize; k];
    let mut hi_idx = vec![0usize; k];
    collect(points, &candidates, 0, &mut lo_idx, &mut hi_idx, &mut mehrs);
    mehrs.sort_by(rect_order);
    Ok(OracleResult { mehrs })
}

fn collect(
    points: &PointSet,
    candidates: &[Vec<f64>],
    dim: usize,
    lo_idx: &mut [usize],
    hi_idx: &mut [usize],
    out: &mut Vec<HyperRect>,
) {
    if dim == candidates.len() {
        if rect_is_empty(points, candidates, lo_idx, hi_idx)
            && is_one_step_maximal(points, candidates, lo_idx, hi_idx)
        {
            let lower = lo_idx
                .iter()
                .enumerate()
                .map(|(d, &i)| candidates[d][i])
                .collect();
            let upper = hi_idx
                .iter()
                .enumerate()
                .map(|(d, &i)| candidates[d][i])
                .collect();
            out.push(HyperRect::new(lower, upper).expect("candidate bounds are ordered"));
        }
        return;
    }
    let c = candidates[dim].len();
    for lo in 0..c {
        for hi in (lo + 1)..c {
            lo_idx[dim] = lo;
            hi_idx[dim] = hi;
            collect(points, candidates, dim + 1, lo_idx, hi_idx, out);
        }
    }
}

fn rect_is_empty(
    points: &PointSet,
    candidates: &[Vec<f64>],
    lo_idx: &[usize],
    hi_idx: &[usize],
) -> bool {
    'points: for p in points.points() {
        for d in 0..candidates.len() {
            let x = p[d];
            if x <= candidates[d][lo_idx[d]] || x >= candidates[d][hi_idx[d]] {
                continue 'points;
            }
        }
        return false;
    }
    true
}

/// Maximal iff no single face can move one candidate step outward while
/// the rectangle stays empty.
fn is_one_step_maximal(
    points: &PointSet,
    candidates: &[Vec<f64>],
    lo_idx: &mut [usize],
    hi_idx: &mut [usize],
) -> bool {
    for d in 0..candidates.len() {
        if lo_idx[d] > 0 {
            lo_idx[d] -= 1;
            let grown_empty = rect_is_empty(points, candidates, lo_idx, hi_idx);
            lo_idx[d] += 1;
            if grown_empty {
                return false;
            }
        }
        if hi_idx[d] + 1 < candidates[d].len() {
            hi_idx[d] += 1;
            let grown_empty = rect_is_empty(points, candidates, lo_idx, hi_idx);
            hi_idx[d] -= 1;
            if grown_empty {
                return false;
            }
        }
    }
    true
}
