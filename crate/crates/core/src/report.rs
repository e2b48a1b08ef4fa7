//! Machine-readable verification reports.
//!
//! Field order is fixed, so serializing the same report twice gives the same
//! bytes. Timings are recorded only on request.

use std::collections::BTreeMap;

use serde::Serialize;

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Self { id: id.into(), status: Status::Pass, detail: String::new() }
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { id: id.into(), status: Status::Fail, detail: detail.into() }
    }

    pub fn skipped(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { id: id.into(), status: Status::Skipped, detail: reason.into() }
    }

    pub fn from_result(id: impl Into<String>, r: std::result::Result<(), String>) -> Self {
        match r {
            Ok(()) => Self::pass(id),
            Err(e) => Self::fail(id, e),
        }
    }

    /// Pass iff `computed == expected`.
    pub fn equal<T: PartialEq + std::fmt::Display>(id: impl Into<String>, computed: T, expected: T) -> Self {
        if computed == expected {
            Self::pass(id)
        } else {
            Self::fail(id, format!("computed {computed}, expected {expected}"))
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Joins failing check ids into one message, or `Ok` if none failed.
pub fn first_failures(checks: &[Check]) -> std::result::Result<(), String> {
    let failed: Vec<String> =
        checks.iter().filter(|c| c.is_failure()).map(|c| format!("{} ({})", c.id, c.detail)).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(failed.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingSummary {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub commutative: bool,
}

/// Dimensions computed along the pipeline; `None` where a stage did not run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub ring: usize,
    pub commutator: usize,
    pub ideal_2: usize,
    pub ideal_3: usize,
    pub quotient_2: usize,
    pub quotient_3: usize,
    pub hc1: usize,
    pub sl: Option<usize>,
    pub uce: Option<usize>,
    pub offending_span: Option<usize>,
    pub st: Option<usize>,
    pub st_hat: Option<usize>,
}

/// Closed-form values the computation is compared against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predictions {
    pub h2_sl: usize,
    pub h2_st: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub h2_sl: Option<usize>,
    pub h2_st: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub ring: RingSummary,
    pub n: usize,
    pub radical: u64,
    pub dims: Dimensions,
    pub predictions: Predictions,
    pub computed: Computed,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_stage: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_collected() {
        let checks = vec![Check::pass("a"), Check::fail("b", "x"), Check::skipped("c", "n/a"), Check::equal("d", 1, 2)];
        assert_eq!(first_failures(&checks), Err("b (x); d (computed 1, expected 2)".into()));
        assert!(first_failures(&checks[..1]).is_ok());
    }

    #[test]
    fn status_serializes_lowercase() {
        assert_eq!(serde_json::to_string(&Status::Skipped).unwrap(), "\"skipped\"");
        assert_eq!(serde_json::to_string(&Verdict::Pass).unwrap(), "\"PASS\"");
        let c = serde_json::to_value(Check::pass("x")).unwrap();
        assert!(c.get("detail").is_none());
    }
}
