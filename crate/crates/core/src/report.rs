//! JSON verification reports.

use std::time::Instant;

use serde::Serialize;

/// Version of the report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub q: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// The object the check was run on, e.g. a subspace or an inequality.
    pub subject: String,
    pub message: String,
}

impl Violation {
    pub fn new(subject: impl Into<String>, message: impl Into<String>) -> Violation {
        Violation {
            subject: subject.into(),
            message: message.into(),
        }
    }
}

/// Outcome of one verifier. An empty `violations` list means success.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub check: String,
    pub params: Params,
    pub checked_count: u64,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

impl Report {
    pub fn new(check: &str, params: Params) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            check: check.to_string(),
            params,
            checked_count: 0,
            violations: Vec::new(),
            elapsed_ms: None,
            details: serde_json::Value::Null,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn record(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.checked_count += 1;
        if !ok {
            self.violations.push(violation());
        }
    }

    pub(crate) fn finish(mut self, started: Instant) -> Report {
        self.elapsed_ms = Some(started.elapsed().as_millis() as u64);
        self
    }

    /// Drops run-dependent metadata so output is byte-reproducible.
    pub fn without_meta(mut self) -> Report {
        self.elapsed_ms = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
