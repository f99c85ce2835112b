//! Suite reports and their two renderings.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    /// `cNN.<detail>`; the prefix names the acceptance criterion.
    pub id: String,
    /// Short topic label of the identity being checked.
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: &str, ok: bool, witness: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check { id: id.into(), anchor: anchor.to_string(), status, witness }
    }

    pub fn skip(id: impl Into<String>, anchor: &str, witness: Value) -> Self {
        Check { id: id.into(), anchor: anchor.to_string(), status: Status::Skip, witness }
    }

    /// The acceptance criterion encoded in the id prefix.
    pub fn criterion(&self) -> Option<u32> {
        self.id.strip_prefix('c')?.split('.').next()?.parse().ok()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub criterion: u32,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Milliseconds; left out of the stable rendering.
    pub wall_clock_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    /// JSON with wall-clock zeroed: identical bytes for identical (version, seed, config).
    pub fn stable_json(&self) -> String {
        let mut r = self.clone();
        r.wall_clock_ms = 0;
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn text(&self, verbose: bool) -> String {
        let mut s = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{verdict} criterion {:>2} {:<22} {} pass, {} fail, {} skip, {} ms (seed {})",
            self.criterion,
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
            self.wall_clock_ms,
            self.seed
        );
        for c in &self.checks {
            if verbose || c.status != Status::Pass {
                let tag = match c.status {
                    Status::Pass => "ok",
                    Status::Fail => "FAILED",
                    Status::Skip => "skipped",
                };
                let _ = writeln!(s, "    {tag:<7} {} [{}] {}", c.id, c.anchor, c.witness);
            }
        }
        s
    }
}
