use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Summary of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub arguments: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub verdict: String,
    pub exit_code: u8,
    pub outputs: Value,
    pub stats: Value,
    pub elapsed_ms: f64,
    /// Choices made by the extension procedure, in order.
    pub steps: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_detail: Option<Value>,
}

impl RunReport {
    pub fn new(arguments: Vec<String>) -> Self {
        RunReport {
            command: String::new(),
            arguments,
            inputs: Vec::new(),
            verdict: String::new(),
            exit_code: 0,
            outputs: Value::Null,
            stats: Value::Null,
            elapsed_ms: 0.0,
            steps: Vec::new(),
            error: None,
            error_detail: None,
        }
    }

    pub fn add_input(&mut self, path: &Path, contents: &str) {
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex_digest(contents.as_bytes()),
        });
    }

    pub fn fail(&mut self, e: &CliError) {
        self.verdict = "error".into();
        self.error = Some(e.message.clone());
        self.error_detail = e.detail.clone();
    }

    pub fn finish(&mut self, elapsed: Duration, code: u8) {
        self.elapsed_ms = elapsed.as_secs_f64() * 1e3;
        self.exit_code = code;
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
