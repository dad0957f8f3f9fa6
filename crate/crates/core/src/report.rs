//! CSV and JSON rendering of simulation reports.
//!
//! The CSV schema is fixed: nine columns, plain decimal points, no
//! thousands separators, every line newline-terminated. Identical
//! configurations reproduce identical rows byte for byte except the
//! `runtime_ns` column, which is wall-clock measurement.

use crate::error::Error;
use crate::sim::{SweepReport, TrialRecord};

pub const CSV_HEADER: &str = "trial,seed,n,rate,e,algorithm,outcome,distortion,runtime_ns";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::InvalidParameter(format!(
                "unknown report format '{other}' (want csv or json)"
            ))),
        }
    }
}

fn csv_line(row: &TrialRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}\n",
        row.trial,
        row.seed,
        row.n,
        row.rate,
        row.e,
        row.algorithm,
        row.outcome,
        row.distortion,
        row.runtime_ns
    )
}

pub fn to_csv(rows: &[TrialRecord]) -> String {
    let mut out = String::with_capacity(32 + 48 * rows.len());
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&csv_line(row));
    }
    out
}

pub fn to_json(report: &SweepReport) -> Result<String, Error> {
    serde_json::to_string_pretty(report)
        .map_err(|e| Error::InvalidParameter(format!("report serialization failed: {e}")))
}

pub fn render(report: &SweepReport, format: ReportFormat) -> Result<String, Error> {
    match format {
        ReportFormat::Csv => Ok(to_csv(&report.rows)),
        ReportFormat::Json => to_json(report),
    }
}
