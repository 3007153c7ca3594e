//! JSON records for reports, one per line in batch output.
//!
//! Big numbers are decimal strings and fields serialize in declaration
//! order, so a record without a timestamp encodes byte-for-byte the same on
//! every run.

use serde::{Deserialize, Serialize};

use crate::search::SearchBounds;
use crate::solve::SolutionReport;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Ok,
    BudgetExceeded,
    ValidationError,
    ParseError,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub status: RecordStatus,
    /// The raw input line for batch records.
    pub input: Option<String>,
    pub version: String,
    /// Seconds since the Unix epoch; absent in canonical output.
    pub timestamp: Option<u64>,
    pub bounds: SearchBounds,
    pub report: Option<SolutionReport>,
    pub error: Option<String>,
}

impl ReportRecord {
    pub fn from_report(report: SolutionReport, input: Option<String>, timestamp: Option<u64>) -> Self {
        let status = if report.budget_exhausted {
            RecordStatus::BudgetExceeded
        } else {
            RecordStatus::Ok
        };
        ReportRecord {
            status,
            input,
            version: ARTIFACT_VERSION.to_owned(),
            timestamp,
            bounds: report.search.bounds.clone(),
            report: Some(report),
            error: None,
        }
    }

    pub fn failure(
        status: RecordStatus,
        input: Option<String>,
        bounds: SearchBounds,
        error: impl Into<String>,
        timestamp: Option<u64>,
    ) -> Self {
        ReportRecord {
            status,
            input,
            version: ARTIFACT_VERSION.to_owned(),
            timestamp,
            bounds,
            report: None,
            error: Some(error.into()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
