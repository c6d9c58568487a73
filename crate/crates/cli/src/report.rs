//! The JSON run report. Everything except `timing` is a function of the
//! input, the flags and the seed.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub path: String,
    pub format: String,
    pub graphs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub max_steps: u64,
    /// Graphs on which some search ran out of budget.
    pub indeterminate: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input: Option<InputDescriptor>,
    pub params: Value,
    pub results: Vec<Value>,
    pub summary: Value,
    pub budget: Budget,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// `report` with its `timing` field removed, for byte-wise comparison.
pub fn strip_timing(report: &str) -> Result<String, serde_json::Error> {
    let mut r: RunReport = serde_json::from_str(report)?;
    r.timing = None;
    Ok(r.to_json())
}
