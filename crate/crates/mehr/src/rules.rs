//! Turning rectangles into human-readable if/then statements.
//!
//! A maximal empty rectangle is an assertion about the data: inside this
//! region there are no observations. Reported in original units, that
//! becomes an if/then rule whose antecedent lists only the dimensions that
//! actually constrain the region — dimensions spanning their entire range
//! say nothing and are omitted unless explicitly requested.

use crate::geom::{HyperRect, PointSet};
use crate::report::round_sig;

/// One conjunct of a rule: `name` lies in `[low, high]`, original units.
#[derive(Clone, Debug, PartialEq)]
pub struct RuleTerm {
    pub dim: usize,
    pub name: String,
    pub low: f64,
    pub high: f64,
}

/// The antecedent of an emptiness rule: a conjunction of interval terms.
/// An empty term list describes a rectangle spanning the whole space.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub terms: Vec<RuleTerm>,
}

/// Describes `rect` in original units. Dimensions whose normalized bounds
/// are exactly `(0, 1)` are omitted unless `include_full_width` is set.
pub fn extract_rule(rect: &HyperRect, points: &PointSet, include_full_width: bool) -> Rule {
    assert_eq!(
        rect.dim_count(),
        points.dim_count(),
        "contract violation: rectangle and point set disagree on dimension count"
    );
    let terms = (0..rect.dim_count())
        .filter(|&d| include_full_width || rect.is_bounding_dim(d))
        .map(|d| RuleTerm {
            dim: d,
            name: points.dim_names()[d].clone(),
            low: points.denormalize(d, rect.lower()[d]),
            high: points.denormalize(d, rect.upper()[d]),
        })
        .collect();
    Rule { terms }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "(no bounding dimensions)");
        }
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " and ")?;
            }
            write!(
                f,
                "{} in [{}, {}]",
                term.name,
                round_sig(term.low),
                round_sig(term.high)
            )?;
        }
        Ok(())
    }
}
