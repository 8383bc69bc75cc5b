use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DiscoveryFail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscoveryFail => "discovery-fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub seed: u64,
    pub message: String,
    pub inputs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub statement: String,
    pub status: Status,
    pub trials: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line for terminals: `status  name  (trials)` plus any note.
    pub fn line(&self) -> String {
        let mut s = format!("{:<14} {} ({} trials)", self.status, self.name, self.trials);
        if let Some(c) = &self.counterexample {
            s.push_str(&format!(" -- trial {}: {}", c.trial, c.message));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" -- {n}"));
        }
        if let Some(w) = &self.warning {
            s.push_str(&format!(" -- warning: {w}"));
        }
        s
    }
}
