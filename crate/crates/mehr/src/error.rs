//! Error type shared across the crate.
//!
//! Recoverable conditions (bad input files, invalid configuration, oversized
//! oracle requests) surface as [`Error`] values. Violations of internal
//! contracts — mismatched dimensions, maximality queries on non-empty
//! rectangles — are programming errors and panic instead.

use std::path::PathBuf;

use crate::ingest::DropReason;

/// Anything that can go wrong while loading data or configuring a search.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A point set constructor was handed rows that break its invariants.
    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    /// A rectangle constructor was handed out-of-order or out-of-range bounds.
    #[error("invalid rectangle: {0}")]
    InvalidRect(String),

    /// A search configuration field is out of range.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An input file could not be opened or read.
    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An input file was read but is not well-formed CSV (ragged rows,
    /// invalid UTF-8, missing header row, ...).
    #[error("malformed input {path}: {message}")]
    MalformedCsv { path: PathBuf, message: String },

    /// Cleaning removed every column, so there is nothing to search.
    /// Lists each dropped column together with the reason it was dropped.
    #[error(
        "no usable dimensions remain after cleaning: {}",
        dropped_summary(dropped)
    )]
    NoDimensions { dropped: Vec<(String, DropReason)> },

    /// The exhaustive enumerator refuses instances beyond its size guard;
    /// its candidate grid grows combinatorially.
    #[error(
        "instance too large for exhaustive enumeration: {points} points in {dims} dimensions \
         (limits: {max_points} points, {max_dims} dimensions)"
    )]
    InstanceTooLarge {
        points: usize,
        dims: usize,
        max_points: usize,
        max_dims: usize,
    },
}

fn dropped_summary(dropped: &[(String, DropReason)]) -> String {
    let parts: Vec<String> = dropped
        .iter()
        .map(|(name, reason)| format!("{name} ({reason})"))
        .collect();
    parts.join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
