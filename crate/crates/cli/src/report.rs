//! The JSON report every command emits.

use std::collections::BTreeMap;
use std::fmt;

use realspec::io::sha256_hex;
use serde::Serialize;
use serde_json::Value as Json;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    /// Input name to the SHA-256 of its bytes.
    pub inputs: BTreeMap<String, String>,
    pub outputs: Json,
    /// Names of the checks this command ran.
    pub checks: Vec<String>,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            outputs: Json::Object(Default::default()),
            checks: Vec::new(),
            violations: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn input(&mut self, name: &str, bytes: &str) {
        self.inputs.insert(name.into(), sha256_hex(bytes));
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("serializable output");
        self.outputs.as_object_mut().expect("object").insert(key.into(), v);
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks.push(name.into());
        if !ok {
            self.violations.push(format!("{name}: {}", detail()));
        }
    }

    pub fn render(&self) -> String {
        // serde_json maps are BTreeMaps here, so keys come out sorted.
        let v = serde_json::to_value(self).expect("serializable report");
        serde_json::to_string_pretty(&v).expect("json") + "\n"
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable or malformed files.
    Usage(String),
    /// A checked claim failed on the given data.
    Assertion(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "error: {s}"),
            CliError::Assertion(s) => write!(f, "VIOLATION: {s}"),
        }
    }
}

impl From<realspec::Error> for CliError {
    fn from(e: realspec::Error) -> Self {
        use realspec::Error as E;
        match e {
            E::Violation(_) | E::HypothesisInconsistent(_) => CliError::Assertion(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
