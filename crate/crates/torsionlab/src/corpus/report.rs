//! Structured verdicts for corpus checks and their JSON form.
//!
//! A check aggregates sub-assertions. Exact passes and expected bounded
//! refutations (recorded with their bounds) both count toward "pass";
//! any failed assertion makes the check "fail"; an exhausted bound that was
//! not expected surfaces as "unknown" and its own exit code. The canonical
//! JSON form zeroes the runtime field so that reports are byte-identical
//! across runs with the same seed and bounds.

use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubStatus {
    /// Exact verification succeeded.
    ExactPass,
    /// A negative statement refuted only up to a bound, recorded as such
    /// (this is the expected shape for non-nilpotency / non-torsion data).
    BoundedRecorded,
    Fail,
    /// A bound was exhausted where a definite answer was expected.
    BoundExhausted,
}

impl SubStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SubStatus::ExactPass => "pass",
            SubStatus::BoundedRecorded => "recorded",
            SubStatus::Fail => "fail",
            SubStatus::BoundExhausted => "bound-exhausted",
        }
    }
}

/// One sub-assertion of a check, with its witness or reason.
#[derive(Debug, Clone)]
pub struct SubCheck {
    pub claim: String,
    pub status: SubStatus,
    pub detail: String,
}

pub fn sub_exact(claim: impl Into<String>, ok: bool, detail: impl Into<String>) -> SubCheck {
    SubCheck {
        claim: claim.into(),
        status: if ok { SubStatus::ExactPass } else { SubStatus::Fail },
        detail: detail.into(),
    }
}

pub fn sub_recorded(claim: impl Into<String>, detail: impl Into<String>) -> SubCheck {
    SubCheck { claim: claim.into(), status: SubStatus::BoundedRecorded, detail: detail.into() }
}

pub fn sub_exhausted(claim: impl Into<String>, detail: impl Into<String>) -> SubCheck {
    SubCheck { claim: claim.into(), status: SubStatus::BoundExhausted, detail: detail.into() }
}

#[derive(Debug, Clone)]
pub struct VerdictReport {
    pub check_id: String,
    /// Key into the shipped reference index describing the construction.
    pub paper_ref: String,
    pub bounds: Value,
    pub witnesses: Vec<SubCheck>,
    pub runtime_ms: u64,
}

impl VerdictReport {
    pub fn status(&self) -> Status {
        if self.witnesses.iter().any(|w| w.status == SubStatus::Fail) {
            return Status::Fail;
        }
        if self.witnesses.iter().any(|w| w.status == SubStatus::BoundExhausted) {
            return Status::Unknown;
        }
        Status::Pass
    }

    pub fn to_json(&self, canonical: bool) -> Value {
        json!({
            "check_id": self.check_id,
            "status": self.status().as_str(),
            "paper_ref": self.paper_ref,
            "bounds": self.bounds,
            "witnesses": self.witnesses.iter().map(|w| json!({
                "claim": w.claim,
                "status": w.status.as_str(),
                "detail": w.detail,
            })).collect::<Vec<_>>(),
            "runtime_ms": if canonical { 0 } else { self.runtime_ms },
        })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub checks: Vec<VerdictReport>,
}

impl SuiteReport {
    pub fn to_json(&self, canonical: bool) -> Value {
        json!({
            "version": 1,
            "checks": self.checks.iter().map(|c| c.to_json(canonical)).collect::<Vec<_>>(),
        })
    }

    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status() == Status::Fail) {
            return Status::Fail;
        }
        if self.checks.iter().any(|c| c.status() == Status::Unknown) {
            return Status::Unknown;
        }
        Status::Pass
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Unknown => 2,
        }
    }
}
