//! Deterministic JSON reports.

use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
    pub content: String,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Input>,
    pub verdicts: Map<String, Value>,
    pub certificates: Map<String, Value>,
    pub caveats: Vec<String>,
    pub seed: u64,
    pub tool_version: String,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            verdicts: Map::new(),
            certificates: Map::new(),
            caveats: Vec::new(),
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn verdict(&mut self, key: &str, value: impl Serialize) {
        self.verdicts.insert(key.to_string(), to_value(value));
    }

    pub fn certificate(&mut self, key: &str, value: impl Serialize) {
        self.certificates.insert(key.to_string(), to_value(value));
    }

    pub fn caveat(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.caveats.contains(&text) {
            self.caveats.push(text);
        }
    }

    /// Reads a file and records it as an input.
    pub fn read_input(&mut self, path: &Path) -> Result<String, String> {
        let content = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let digest = Sha256::digest(content.as_bytes());
        self.inputs.push(Input {
            path: path.display().to_string(),
            sha256: hex::encode(digest),
            content: content.clone(),
        });
        Ok(content)
    }

    pub fn write(&self, path: &Path) -> Result<(), String> {
        let mut text = serde_json::to_string_pretty(self).map_err(|e| e.to_string())?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("report values serialize")
}
