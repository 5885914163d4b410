use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GroupError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "B")]
    B,
    #[serde(rename = "T2.4")]
    Transfer,
    #[serde(rename = "L4.1")]
    CentralCommutator,
    #[serde(rename = "T4.2")]
    NilpotentSection,
    #[serde(rename = "ETA_PGROUP")]
    EtaPGroup,
    #[serde(rename = "EX2.2")]
    Example22,
    #[serde(rename = "EX3.2")]
    Example32,
    #[serde(rename = "REMARK4")]
    Remark4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::A,
        TheoremId::B,
        TheoremId::Transfer,
        TheoremId::CentralCommutator,
        TheoremId::NilpotentSection,
        TheoremId::EtaPGroup,
        TheoremId::Example22,
        TheoremId::Example32,
        TheoremId::Remark4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::Transfer => "T2.4",
            TheoremId::CentralCommutator => "L4.1",
            TheoremId::NilpotentSection => "T4.2",
            TheoremId::EtaPGroup => "ETA_PGROUP",
            TheoremId::Example22 => "EX2.2",
            TheoremId::Example32 => "EX3.2",
            TheoremId::Remark4 => "REMARK4",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::InvalidArgument(format!("unknown theorem id `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// One failed check, with enough ids to recompute it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub group_spec: String,
    /// Which check failed, e.g. `section_abelian` or `transfer_bound`.
    pub check: String,
    /// Representative ids keyed by role (`A`, `B`, `D`; `m` for series levels).
    pub class_rep_ids: BTreeMap<String, Vec<usize>>,
    /// `None` when the quantity is undefined (e.g. a non-solvable section).
    pub observed: Option<i64>,
    pub bound: i64,
    pub witness_ids: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub group_spec: String,
    pub verdict: Verdict,
    pub cases_checked: u64,
    pub violations: Vec<CounterexampleRecord>,
    pub extremal: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(theorem_id: TheoremId, group_spec: impl Into<String>) -> Self {
        VerificationReport {
            theorem_id,
            group_spec: group_spec.into(),
            verdict: Verdict::Pass,
            cases_checked: 0,
            violations: Vec::new(),
            extremal: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn skipped(theorem_id: TheoremId, group_spec: impl Into<String>, why: impl Into<String>) -> Self {
        let mut r = VerificationReport::new(theorem_id, group_spec);
        r.verdict = Verdict::Skipped;
        r.notes.push(why.into());
        r
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a check outcome; `ok == false` adds a violation.
    pub(crate) fn check(&mut self, ok: bool, record: impl FnOnce() -> CounterexampleRecord) {
        self.cases_checked += 1;
        if !ok {
            self.violations.push(record());
        }
    }

    pub(crate) fn record_max(&mut self, key: &str, value: f64) {
        let e = self.extremal.entry(key.to_string()).or_insert(value);
        if value > *e {
            *e = value;
        }
    }

    pub(crate) fn record_min(&mut self, key: &str, value: f64) {
        let e = self.extremal.entry(key.to_string()).or_insert(value);
        if value < *e {
            *e = value;
        }
    }

    pub(crate) fn set(&mut self, key: &str, value: f64) {
        self.extremal.insert(key.to_string(), value);
    }

    /// Sets the verdict from the violation list. Call once all checks ran.
    pub(crate) fn finish(mut self) -> Self {
        if self.verdict != Verdict::Skipped || !self.violations.is_empty() {
            self.verdict = if self.violations.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
        }
        self
    }

    pub(crate) fn record(
        &self,
        check: &str,
        reps: &[(&str, Vec<usize>)],
        observed: Option<i64>,
        bound: i64,
        witness_ids: Vec<usize>,
    ) -> CounterexampleRecord {
        CounterexampleRecord {
            group_spec: self.group_spec.clone(),
            check: check.to_string(),
            class_rep_ids: reps.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            observed,
            bound,
            witness_ids,
        }
    }
}
