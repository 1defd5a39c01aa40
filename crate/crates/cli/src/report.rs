//! Machine readable reports shared by every command.

use qkit_core::{FiniteSemigroup, Verdict};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::time::Instant;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    #[default]
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub check: String,
    pub anchor: String,
    pub verdict: Status,
    /// Element label tuples; non-empty whenever `verdict` is `fails`.
    pub witnesses: Vec<Vec<String>>,
    /// Clause that failed, when the check has several.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    pub timing_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool_version: &'static str,
    pub input_digest: String,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl Report {
    pub fn new(input_digest: String) -> Self {
        Report { schema: SCHEMA, tool_version: env!("CARGO_PKG_VERSION"), input_digest, checks: Vec::new(), data: None }
    }

    pub fn any_failure(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Status::Fails)
    }

    pub fn push(&mut self, entry: CheckEntry) {
        debug_assert!(entry.verdict != Status::Fails || !entry.witnesses.is_empty(), "{} fails without a witness", entry.check);
        self.checks.push(entry);
    }

    /// Times `f` and records its outcome.
    pub fn timed(&mut self, check: impl Into<String>, anchor: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let o = f();
        self.push(CheckEntry {
            check: check.into(),
            anchor: anchor.into(),
            verdict: o.status,
            witnesses: o.witnesses,
            clause: o.clause,
            timing_ms: elapsed_ms(start),
            detail: o.detail,
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn digest(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn labels(q: &FiniteSemigroup, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&e| q.label(e)).collect()
}

#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub status: Status,
    pub witnesses: Vec<Vec<String>>,
    pub clause: Option<String>,
    pub detail: Option<serde_json::Value>,
}

impl Outcome {
    pub fn holds() -> Self {
        Outcome::default()
    }

    pub fn not_applicable(why: &str) -> Self {
        Outcome { status: Status::NotApplicable, clause: Some(why.into()), ..Outcome::default() }
    }

    pub fn fails(q: &FiniteSemigroup, clause: Option<String>, elements: &[usize]) -> Self {
        Outcome { status: Status::Fails, witnesses: vec![labels(q, elements)], clause, detail: None }
    }

    /// Holds when `witness` is `None`, fails with it otherwise.
    pub fn check(q: &FiniteSemigroup, witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Outcome::holds(),
            Some(w) => Outcome::fails(q, None, &w),
        }
    }

    pub fn with_detail(mut self, detail: serde_json::Value) -> Self {
        self.detail = Some(detail);
        self
    }

    /// Converts a core verdict, mapping witness indices through `members`
    /// (identity when `None`) to labels of `q`.
    pub fn from_verdict(v: &Verdict, q: &FiniteSemigroup, members: Option<&[usize]>) -> Self {
        match v {
            Verdict::Holds => Outcome::holds(),
            Verdict::NotApplicable(why) => Outcome::not_applicable(why),
            Verdict::Fails(c) => {
                let mapped: Vec<usize> = c.elements.iter().map(|&i| members.map_or(i, |m| m[i])).collect();
                Outcome::fails(q, Some(c.clause.to_string()), &mapped)
            }
        }
    }
}
