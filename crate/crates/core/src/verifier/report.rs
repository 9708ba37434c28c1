use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::partitions::Partition;
use crate::symring::{first_difference, LinOp};

/// One registered identity with its parameters and degree window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCase {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub window: usize,
}

impl IdentityCase {
    pub fn new(id: &str, window: usize) -> Self {
        IdentityCase { id: id.to_string(), params: BTreeMap::new(), window }
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first input on which the two sides disagreed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub case: IdentityCase,
    pub status: Status,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The JSON form; `elapsed` is left out so reports compare byte for byte.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let params: Vec<String> = self.case.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "{:<18} {} checked={} window={} {}",
            self.case.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.case.window,
            params.join(" ")
        );
        if let Some(cx) = &self.counterexample {
            line.push_str(&format!("\n    at {}: lhs={} rhs={}", cx.input, cx.lhs, cx.rhs));
        }
        line
    }
}

/// Accumulates check results; keeps only the first failure.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    pub fn record(&mut self, ok: bool, input: impl FnOnce() -> String, lhs: impl FnOnce() -> Value, rhs: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { input: input(), lhs: lhs(), rhs: rhs() });
        }
    }

    pub fn check_eq<T: PartialEq>(&mut self, input: impl FnOnce() -> String, lhs: &T, rhs: &T, show: impl Fn(&T) -> Value) {
        self.record(lhs == rhs, input, || show(lhs), || show(rhs));
    }

    /// Compares two operators on every Schur function of degree ≤ `window`.
    pub fn check_ops(&mut self, context: &str, lhs: &LinOp, rhs: &LinOp, window: usize) {
        let count = Partition::all_up_to(window).len() as u64;
        match first_difference(lhs, rhs, window) {
            None => self.checked += count,
            Some((lam, l, r)) => {
                self.checked += 1;
                if self.counterexample.is_none() {
                    let sep = if context.is_empty() { "" } else { ": " };
                    self.counterexample =
                        Some(Counterexample { input: format!("{context}{sep}s[{lam}]"), lhs: l.to_json(), rhs: r.to_json() });
                }
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    /// Merges in order, so the reported counterexample does not depend on scheduling.
    pub fn merge_all(parts: impl IntoIterator<Item = Tally>) -> Tally {
        let mut out = Tally::new();
        for t in parts {
            out.merge(t);
        }
        out
    }

    pub fn finish(self, case: IdentityCase, started: Instant) -> Report {
        Report {
            case,
            status: if self.counterexample.is_none() { Status::Pass } else { Status::Fail },
            checked: self.checked,
            counterexample: self.counterexample,
            elapsed: started.elapsed(),
        }
    }
}
