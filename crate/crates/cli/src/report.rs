//! The run report: one JSON object per invocation, deterministic given the
//! parameters and the seed.

use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Duration;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

/// One named check with its machine-readable evidence. Failures always
/// carry a witness inside the evidence.
#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub evidence: serde_json::Value,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: u64,
    pub rng: &'static str,
    pub checks: Vec<CheckReport>,
    /// Wall time is reported in the text rendering only; serializing it
    /// would break byte-for-byte determinism of the JSON report.
    #[serde(skip)]
    pub wall: Duration,
}

impl RunReport {
    pub fn new(command: &str, seed: u64) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters: BTreeMap::new(),
            seed,
            rng: sylowlab::rng::RNG_NAME,
            checks: Vec::new(),
            wall: Duration::ZERO,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        status: CheckStatus,
        evidence: serde_json::Value,
    ) {
        self.checks.push(CheckReport {
            name: name.into(),
            status,
            evidence,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>, evidence: serde_json::Value) {
        self.push(name, CheckStatus::Pass, evidence);
    }

    pub fn fail(&mut self, name: impl Into<String>, evidence: serde_json::Value) {
        self.push(name, CheckStatus::Fail, evidence);
    }

    pub fn error(&mut self, name: impl Into<String>, evidence: serde_json::Value) {
        self.push(name, CheckStatus::Error, evidence);
    }

    /// Exit-code contract: 0 when everything passed, 1 on any check
    /// failure, 2 on errors (usage problems are handled before a report
    /// exists and also exit 2).
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == CheckStatus::Error) {
            2
        } else if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} (seed {}, rng {})\n",
            self.command, self.seed, self.rng
        ));
        for (key, value) in &self.parameters {
            out.push_str(&format!("  {key} = {value}\n"));
        }
        for check in &self.checks {
            let tag = match check.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Error => "ERROR",
            };
            out.push_str(&format!("[{tag}] {}\n", check.name));
            if check.status != CheckStatus::Pass {
                out.push_str(&format!(
                    "       {}\n",
                    serde_json::to_string(&check.evidence).expect("evidence serializes")
                ));
            }
        }
        let passed = self
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Pass)
            .count();
        out.push_str(&format!(
            "{passed}/{} checks passed in {} ms\n",
            self.checks.len(),
            self.wall.as_millis()
        ));
        out
    }
}
