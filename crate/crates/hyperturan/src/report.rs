//! The JSON document written by `--json`.

use serde::Serialize;
use serde_json::Value;

/// Bumped whenever a field of [`RunReport`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// The published schema for [`RunReport`].
pub const SCHEMA: &str = include_str!("../schema/run-report.schema.json");

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// A bound failed or a pattern was found.
    Flagged,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub status: Status,
    pub exit_code: i32,
    pub wall_time_ms: f64,
    pub results: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            inputs: Vec::new(),
            status: Status::Ok,
            exit_code: 0,
            wall_time_ms: 0.0,
            results: Vec::new(),
            error: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
