//! Machine-readable reports. Reports are deterministic: identical inputs
//! produce byte-identical output, every numeric value is an exact string,
//! and the echoed documents re-parse to the same digest.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::doc::FunctionSpecDoc;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub options: BTreeMap<String, Value>,
    pub inputs: Vec<InputEcho>,
    pub results: Value,
    pub certificates: Vec<Value>,
    pub warnings: Vec<Warning>,
}

#[derive(Serialize)]
pub struct InputEcho {
    pub path: String,
    pub digest: String,
    pub document: FunctionSpecDoc,
}

#[derive(Serialize, Clone)]
pub struct Warning {
    pub input: usize,
    pub message: String,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            options: BTreeMap::new(),
            inputs: Vec::new(),
            results: Value::Null,
            certificates: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn option(&mut self, key: &str, value: impl Serialize) {
        self.options.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable option"),
        );
    }

    pub fn push_input(&mut self, path: &str, document: FunctionSpecDoc) {
        self.inputs.push(InputEcho {
            path: path.to_string(),
            digest: document_digest(&document),
            document,
        });
    }

    pub fn warn(&mut self, input: usize, message: impl Into<String>) {
        self.warnings.push(Warning {
            input,
            message: message.into(),
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Digest of the canonical (compact) serialization of a document; the
/// echoed document re-parses and re-serializes to the same digest.
pub fn document_digest(doc: &FunctionSpecDoc) -> String {
    let canonical = serde_json::to_string(doc).expect("document serialization");
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    format!("sha256:{:x}", hasher.finalize())
}
