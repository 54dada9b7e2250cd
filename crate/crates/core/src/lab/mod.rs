//! Executable checks for the zero properties of the exceptional families.
//!
//! Each check evaluates one property over a parameter grid and returns a
//! [`CheckResult`]; [`suites`] groups them the way the CLI `verify` command
//! runs them. Checks marked exploratory test conjectured behaviour: a
//! failure there is a finding, not a bug.

mod checks;
mod limits;
mod sturm_liouville;
pub mod suites;
mod table;

pub use checks::*;
pub use limits::{
    check_thm3_jacobi_to_laguerre, check_thm3_laguerre_to_hermite, jacobi_to_laguerre_study,
    laguerre_to_hermite_study, LimitKind, LimitRow, LimitStudy, DEFAULT_LIMIT_CAP,
};
pub use sturm_liouville::{
    descartes_sign_changes, dlambda_dalpha, lambda_n4, p_n4, SturmLiouvilleData,
};
pub use table::{ExceptionalZeroTable, TableRow};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Relative slack for strict inequalities between refined zeros.
pub const ORDER_SLACK: f64 = 1e-10;

pub(crate) fn slack(v: f64) -> f64 {
    ORDER_SLACK * (1.0 + v.abs())
}

/// Outcome of one check at one grid point.
///
/// For inequality checks `worst_residual` is the largest signed violation
/// (negative: every inequality held, with at least that margin); for
/// identity and limit checks it is the largest error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: Map<String, Value>,
    pub passed: bool,
    pub exploratory: bool,
    /// `null` in JSON when no finite residual exists (e.g. too few points).
    #[serde(with = "finite_or_null")]
    pub worst_residual: f64,
    pub detail: String,
}

impl CheckResult {
    pub(crate) fn new(name: &str, params: Map<String, Value>) -> Self {
        CheckResult {
            name: name.to_string(),
            params,
            passed: true,
            exploratory: false,
            worst_residual: f64::NEG_INFINITY,
            detail: String::new(),
        }
    }

    pub(crate) fn exploratory(mut self) -> Self {
        self.exploratory = true;
        self
    }

    /// A failed result for a grid point where the zero engine itself failed.
    pub(crate) fn engine_failure(name: &str, params: Map<String, Value>, err: &crate::Error) -> Self {
        CheckResult {
            name: name.to_string(),
            params,
            passed: false,
            exploratory: false,
            worst_residual: f64::INFINITY,
            detail: format!("zero engine failed: {err}"),
        }
    }

    /// Failing checks that are not exploratory gate the exit status.
    pub fn gates(&self) -> bool {
        !self.passed && !self.exploratory
    }

    /// Exploratory checks that did not hold.
    pub fn is_finding(&self) -> bool {
        !self.passed && self.exploratory
    }
}

/// Records one inequality `lhs < rhs` (or `≤` with slack) into a result.
pub(crate) struct Tracker<'a> {
    result: &'a mut CheckResult,
    first_failure: Option<String>,
}

impl<'a> Tracker<'a> {
    pub(crate) fn new(result: &'a mut CheckResult) -> Self {
        Tracker {
            result,
            first_failure: None,
        }
    }

    /// Asserts lhs < rhs up to the ordering slack.
    pub(crate) fn less(&mut self, lhs: f64, rhs: f64, what: impl FnOnce() -> String) {
        let violation = lhs - rhs;
        self.result.worst_residual = self.result.worst_residual.max(violation);
        if violation >= slack(rhs) || violation.is_nan() {
            self.fail(what);
        }
    }

    /// Asserts |value| ≤ bound.
    pub(crate) fn within(&mut self, value: f64, bound: f64, what: impl FnOnce() -> String) {
        self.result.worst_residual = self.result.worst_residual.max(value);
        if !(value <= bound) {
            self.fail(what);
        }
    }

    pub(crate) fn fail(&mut self, what: impl FnOnce() -> String) {
        self.result.passed = false;
        if self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    pub(crate) fn finish(self, ok_detail: impl FnOnce() -> String) {
        if self.result.worst_residual == f64::NEG_INFINITY {
            // nothing to assert: vacuous pass
            self.result.worst_residual = 0.0;
        }
        self.result.detail = match self.first_failure {
            Some(f) => format!("violated: {f}"),
            None => ok_detail(),
        };
    }
}

/// Results of one verification suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

impl Report {
    /// Exploratory failures get their detail tagged `FINDING:`.
    pub fn new(suite: &str, mut checks: Vec<CheckResult>) -> Self {
        for c in checks.iter_mut().filter(|c| c.is_finding()) {
            if !c.detail.starts_with(FINDING_TAG) {
                c.detail = format!("{FINDING_TAG} {}", c.detail);
            }
        }
        let all_passed = !checks.iter().any(CheckResult::gates);
        Report {
            suite: suite.to_string(),
            checks,
            all_passed,
        }
    }

    pub fn findings(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.is_finding())
    }
}

pub const FINDING_TAG: &str = "FINDING:";

mod finite_or_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

/// Builds a params object from (key, value) pairs.
#[macro_export]
#[doc(hidden)]
macro_rules! params {
    ($($k:literal => $v:expr),* $(,)?) => {{
        let mut m = serde_json::Map::new();
        $( m.insert($k.to_string(), serde_json::json!($v)); )*
        m
    }};
}
