//! Check results and the report written by `verify`.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A recorded discrepancy in the source text; never fails a run.
    Flagged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub paper_location: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub engine_version: String,
    pub timestamp: String,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, timestamp: String, results: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Flagged => summary.flagged += 1,
            }
        }
        Self {
            suite: suite.to_string(),
            engine_version: octoverify_core::VERSION.to_string(),
            timestamp,
            results,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "# octoverify report: {}\n\nengine {} at {}\n\n",
            self.suite, self.engine_version, self.timestamp
        );
        out.push_str("| check | location | expected | actual | status |\n");
        out.push_str("|---|---|---|---|---|\n");
        for r in &self.results {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                r.check_id,
                r.paper_location,
                escape(&r.expected),
                escape(&r.actual),
                r.status.as_str()
            ));
        }
        out.push_str(&format!(
            "\n{} pass, {} fail, {} flagged\n",
            self.summary.pass, self.summary.fail, self.summary.flagged
        ));
        out
    }
}

fn escape(cell: &str) -> String {
    cell.replace('|', "\\|")
}
