//! Report assembly and serialization.
//!
//! A finished search is summarized as one [`JsonReport`]: where the data
//! came from and what cleaning did to it, the exact configuration, the
//! best rectangle, the retained top list, run statistics, and per-dimension
//! bounding frequencies. The same structure drives all three output
//! formats (`json`, `rules`, `csv`).
//!
//! Every float that reaches an output is rounded to 12 significant digits
//! first. That keeps reports byte-stable across platforms while leaving
//! far more precision than the data warrants; rounding is idempotent, so
//! parsing a report and re-serializing it reproduces it exactly.

use serde::{Deserialize, Serialize};

use crate::geom::{HyperRect, PointSet};
use crate::ingest::{CleaningLog, DropReason, RawTable};
use crate::oracle::OracleResult;
use crate::rules::extract_rule;
use crate::search::{bounding_dimension_frequencies, SearchConfig, SearchReport};

/// Rounds to 12 significant digits. Idempotent; leaves zero and
/// non-finite values untouched.
pub(crate) fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}")
        .parse()
        .expect("scientific notation round-trips through parse")
}

/// Provenance of the searched data: table shape before and after
/// cleaning, with every dropped column named.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub rows_in: usize,
    pub rows_used: usize,
    pub dims_in: usize,
    pub dims_used: usize,
    pub dropped: Vec<DroppedColumn>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DroppedColumn {
    pub column: String,
    pub reason: DropReason,
}

impl DatasetSummary {
    /// Summary for a table that went through CSV cleaning.
    pub fn from_parts(table: &RawTable, points: &PointSet, log: &CleaningLog) -> Self {
        DatasetSummary {
            rows_in: table.row_count(),
            rows_used: points.point_count(),
            dims_in: table.column_count(),
            dims_used: points.dim_count(),
            dropped: log
                .dropped_columns
                .iter()
                .map(|(column, reason)| DroppedColumn {
                    column: column.clone(),
                    reason: *reason,
                })
                .collect(),
        }
    }

    /// Summary for a point set constructed directly, with no cleaning.
    pub fn for_point_set(points: &PointSet) -> Self {
        DatasetSummary {
            rows_in: points.point_count(),
            rows_used: points.point_count(),
            dims_in: points.dim_count(),
            dims_used: points.dim_count(),
            dropped: Vec::new(),
        }
    }
}

/// The fully resolved configuration a search actually ran with; optional
/// settings are reported at their effective values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigSection {
    pub strategy: u8,
    pub stop: u64,
    pub seed: u64,
    pub runs: usize,
    pub min_volume: f64,
    pub top_n: usize,
    pub max_iterations: u64,
    pub include_full_width: bool,
}

/// One rectangle: volume, bounds in both unit-cube and original units,
/// and its if/then rule terms (original units).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RectSection {
    pub volume: f64,
    pub bounds_normalized: BoundsSection,
    pub bounds_original: BoundsSection,
    pub rule: Vec<RuleTermSection>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuleTermSection {
    pub dim: usize,
    pub name: String,
    pub low: f64,
    pub high: f64,
}

impl RectSection {
    pub fn from_rect(rect: &HyperRect, points: &PointSet, include_full_width: bool) -> Self {
        let k = points.dim_count();
        let lower_n: Vec<f64> = rect.lower().iter().copied().map(round_sig).collect();
        let upper_n: Vec<f64> = rect.upper().iter().copied().map(round_sig).collect();
        let lower_o: Vec<f64> = (0..k)
            .map(|d| round_sig(points.denormalize(d, rect.lower()[d])))
            .collect();
        let upper_o: Vec<f64> = (0..k)
            .map(|d| round_sig(points.denormalize(d, rect.upper()[d])))
            .collect();
        let rule = extract_rule(rect, points, include_full_width)
            .terms
            .into_iter()
            .map(|t| RuleTermSection {
                dim: t.dim,
                name: t.name,
                low: round_sig(t.low),
                high: round_sig(t.high),
            })
            .collect();
        RectSection {
            volume: round_sig(rect.volume()),
            bounds_normalized: BoundsSection {
                lower: lower_n,
                upper: upper_n,
            },
            bounds_original: BoundsSection {
                lower: lower_o,
                upper: upper_o,
            },
            rule,
        }
    }

    fn rule_predicate(&self) -> String {
        if self.rule.is_empty() {
            return "the whole space is empty".to_string();
        }
        let terms: Vec<String> = self
            .rule
            .iter()
            .map(|t| format!("{} in [{}, {}]", t.name, t.low, t.high))
            .collect();
        format!("if {} then empty", terms.join(" and "))
    }
}

/// Counters from the run (summed across runs when several are merged).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsSection {
    pub generated: u64,
    pub too_small: u64,
    pub before_best: u64,
    pub improving_count: usize,
    pub wall_ms: u64,
    pub capped: bool,
}

/// The complete machine-readable result of one search invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub dataset: DatasetSummary,
    pub config: ConfigSection,
    pub max: RectSection,
    pub top: Vec<RectSection>,
    pub stats: StatsSection,
    pub bounding_frequencies: Vec<f64>,
}

/// Assembles the report for a finished search.
pub fn build_report(
    dataset: DatasetSummary,
    config: &SearchConfig,
    runs: usize,
    include_full_width: bool,
    report: &SearchReport,
    points: &PointSet,
) -> JsonReport {
    let config_section = ConfigSection {
        strategy: config.strategy.number(),
        stop: config.stop,
        seed: config.seed,
        runs,
        min_volume: round_sig(config.effective_min_volume(points.point_count())),
        top_n: config.top_n,
        max_iterations: config.effective_max_iterations(points.dim_count()),
        include_full_width,
    };
    let max = RectSection::from_rect(report.max_rect(), points, include_full_width);
    let top: Vec<RectSection> = report
        .top
        .iter()
        .map(|r| RectSection::from_rect(r, points, include_full_width))
        .collect();
    let frequencies = bounding_dimension_frequencies(&report.top)
        .into_iter()
        .map(round_sig)
        .collect();
    JsonReport {
        dataset,
        config: config_section,
        max,
        top,
        stats: StatsSection {
            generated: report.stats.generated,
            too_small: report.stats.too_small,
            before_best: report.stats.before_best,
            improving_count: report.improving.len(),
            wall_ms: report.stats.wall_ms,
            capped: report.stats.capped,
        },
        bounding_frequencies: frequencies,
    }
}

impl JsonReport {
    /// Pretty-printed JSON, newline-terminated.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Human-readable ranked rule list (bounds in original units,
    /// volumes in normalized units).
    pub fn to_rules_text(&self) -> String {
        rules_text(&self.top)
    }

    /// One row per retained rectangle: rank, volume, then per-dimension
    /// low/high bounds in original units.
    pub fn to_csv_text(&self, dim_names: &[String]) -> String {
        csv_text(&self.top, dim_names)
    }
}

/// Exhaustive enumeration result in report form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub dataset: DatasetSummary,
    pub count: usize,
    pub max_volume: f64,
    pub mehrs: Vec<RectSection>,
}

pub fn build_oracle_report(
    dataset: DatasetSummary,
    oracle: &OracleResult,
    points: &PointSet,
    include_full_width: bool,
) -> OracleReport {
    OracleReport {
        dataset,
        count: oracle.count(),
        max_volume: round_sig(oracle.max_volume()),
        mehrs: oracle
            .mehrs()
            .iter()
            .map(|r| RectSection::from_rect(r, points, include_full_width))
            .collect(),
    }
}

impl OracleReport {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_rules_text(&self) -> String {
        rules_text(&self.mehrs)
    }

    pub fn to_csv_text(&self, dim_names: &[String]) -> String {
        csv_text(&self.mehrs, dim_names)
    }
}

fn rules_text(rects: &[RectSection]) -> String {
    let mut out = String::new();
    for (i, r) in rects.iter().enumerate() {
        out.push_str(&format!(
            "{}. volume {}: {}\n",
            i + 1,
            r.volume,
            r.rule_predicate()
        ));
    }
    out
}

fn csv_text(rects: &[RectSection], dim_names: &[String]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["rank".to_string(), "volume".to_string()];
    for name in dim_names {
        header.push(format!("{name}_low"));
        header.push(format!("{name}_high"));
    }
    writer.write_record(&header).expect("in-memory write");
    for (i, r) in rects.iter().enumerate() {
        let mut row = vec![(i + 1).to_string(), r.volume.to_string()];
        for d in 0..dim_names.len() {
            row.push(r.bounds_original.lower[d].to_string());
            row.push(r.bounds_original.upper[d].to_string());
        }
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf8")
}
