//! CSV loading, column/row cleaning, and min-max normalization.
//!
//! The search operates on fully numeric data in the unit cube, so raw
//! tables go through a bookkept pipeline first:
//!
//! 1. columns whose non-missing cells do not all parse as finite numbers
//!    are dropped (`non-numeric`), as are columns with no values at all;
//! 2. rows with a missing value in any surviving numeric column are
//!    dropped;
//! 3. columns that are constant across the surviving rows are dropped
//!    (`constant`) — a constant dimension has no interior to be empty in;
//! 4. each retained column is min-max scaled so its minimum maps to 0 and
//!    its maximum to 1, with the original `(min, max)` retained for
//!    reporting results in original units.
//!
//! Every drop is recorded in a [`CleaningLog`] so reports can account for
//! exactly what was searched. A table with zero data rows is legal: all
//! columns are retained with a neutral scale and the search degenerates to
//! the unit cube.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::geom::PointSet;

/// A parsed CSV table: header names plus string cells, rectangular.
#[derive(Clone, Debug)]
pub struct RawTable {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

/// Why a column was removed during cleaning.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DropReason {
    NonNumeric,
    Constant,
}

impl std::fmt::Display for DropReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DropReason::NonNumeric => write!(f, "non-numeric"),
            DropReason::Constant => write!(f, "constant"),
        }
    }
}

/// Bookkeeping from [`clean_and_normalize`]: what was dropped and why,
/// and which columns survived, in input order.
#[derive(Clone, Debug, PartialEq)]
pub struct CleaningLog {
    pub dropped_columns: Vec<(String, DropReason)>,
    pub dropped_rows: usize,
    pub retained: Vec<String>,
}

impl RawTable {
    /// Builds a table from parts, enforcing rectangularity and a header.
    pub fn new(columns: Vec<String>, rows: Vec<Vec<String>>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::MalformedCsv {
                path: PathBuf::new(),
                message: "a table needs at least one column".to_string(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != columns.len() {
                return Err(Error::MalformedCsv {
                    path: PathBuf::new(),
                    message: format!(
                        "row {} has {} fields, expected {}",
                        i + 1,
                        row.len(),
                        columns.len()
                    ),
                });
            }
        }
        Ok(RawTable { columns, rows })
    }

    pub fn column_names(&self) -> &[String] {
        &self.columns
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn cell(&self, row: usize, col: usize) -> &str {
        &self.rows[row][col]
    }

    /// Is every non-missing cell of this column a finite number, with at
    /// least one value present? A zero-row table counts every column as
    /// numeric. Cells are trimmed; empty cells are missing values.
    pub fn is_numeric_column(&self, col: usize) -> bool {
        if self.rows.is_empty() {
            return true;
        }
        let mut any_value = false;
        for row in &self.rows {
            match parse_cell(&row[col]) {
                Cell::Missing => {}
                Cell::Number(_) => any_value = true,
                Cell::Text => return false,
            }
        }
        any_value
    }
}

enum Cell {
    Missing,
    Number(f64),
    Text,
}

fn parse_cell(raw: &str) -> Cell {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Cell::Missing;
    }
    match trimmed.parse::<f64>() {
        Ok(v) if v.is_finite() => Cell::Number(v),
        _ => Cell::Text,
    }
}

/// Reads a CSV file (RFC-4180 quoting, UTF-8, header row required) into a
/// [`RawTable`]. Ragged rows, invalid encoding, and headerless files are
/// reported as malformed input.
pub fn load_csv(path: impl AsRef<Path>) -> Result<RawTable> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .trim(csv::Trim::All)
        .from_reader(file);
    let malformed = |message: String| Error::MalformedCsv {
        path: path.to_path_buf(),
        message,
    };
    let headers = reader
        .headers()
        .map_err(|e| malformed(e.to_string()))?
        .clone();
    if headers.is_empty() {
        return Err(malformed("empty file: missing header row".to_string()));
    }
    let columns: Vec<String> = headers.iter().map(str::to_string).collect();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| malformed(e.to_string()))?;
        rows.push(record.iter().map(str::to_string).collect());
    }
    RawTable::new(columns, rows)
}

/// Runs the cleaning pipeline and produces a normalized [`PointSet`] plus
/// the log of everything that was dropped. Fails only when no usable
/// dimension survives.
pub fn clean_and_normalize(table: &RawTable) -> Result<(PointSet, CleaningLog)> {
    let cols = table.column_count();
    let numeric: Vec<usize> = (0..cols).filter(|&c| table.is_numeric_column(c)).collect();

    // Rows must be complete in every numeric column (constant columns are
    // not yet known; missingness is judged against all numeric columns).
    let kept_rows: Vec<usize> = (0..table.row_count())
        .filter(|&r| {
            numeric
                .iter()
                .all(|&c| !matches!(parse_cell(table.cell(r, c)), Cell::Missing))
        })
        .collect();
    let dropped_rows = table.row_count() - kept_rows.len();

    // Column-major parse of the surviving cells.
    let mut values: Vec<Vec<f64>> = Vec::with_capacity(numeric.len());
    for &c in &numeric {
        let column = kept_rows
            .iter()
            .map(|&r| match parse_cell(table.cell(r, c)) {
                Cell::Number(v) => v,
                _ => unreachable!("kept rows have no missing numeric cells"),
            })
            .collect();
        values.push(column);
    }

    let mut retained_cols: Vec<usize> = Vec::new();
    let mut constant_cols: Vec<usize> = Vec::new();
    let mut scales: Vec<(f64, f64)> = Vec::new();
    for (i, &c) in numeric.iter().enumerate() {
        if kept_rows.is_empty() {
            // No data: keep the dimension with a neutral scale so the
            // degenerate search still has a space to report on.
            retained_cols.push(c);
            scales.push((0.0, 1.0));
            continue;
        }
        let lo = values[i].iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values[i].iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if lo == hi {
            constant_cols.push(c);
        } else {
            retained_cols.push(c);
            scales.push((lo, hi));
        }
    }

    let mut dropped_columns: Vec<(String, DropReason)> = Vec::new();
    for c in 0..cols {
        if !numeric.contains(&c) {
            dropped_columns.push((table.column_names()[c].clone(), DropReason::NonNumeric));
        } else if constant_cols.contains(&c) {
            dropped_columns.push((table.column_names()[c].clone(), DropReason::Constant));
        }
    }
    if retained_cols.is_empty() {
        return Err(Error::NoDimensions {
            dropped: dropped_columns,
        });
    }

    let retained_names: Vec<String> = retained_cols
        .iter()
        .map(|&c| table.column_names()[c].clone())
        .collect();
    let mut rows_normalized = Vec::with_capacity(kept_rows.len());
    for row_pos in 0..kept_rows.len() {
        let mut row = Vec::with_capacity(retained_cols.len());
        for (dim, &c) in retained_cols.iter().enumerate() {
            let col_pos = numeric.iter().position(|&x| x == c).unwrap();
            let v = values[col_pos][row_pos];
            let (lo, hi) = scales[dim];
            row.push((v - lo) / (hi - lo));
        }
        rows_normalized.push(row);
    }

    let ps = PointSet::new(&rows_normalized, retained_names.clone(), scales)?;
    let log = CleaningLog {
        dropped_columns,
        dropped_rows,
        retained: retained_names,
    };
    Ok((ps, log))
}
