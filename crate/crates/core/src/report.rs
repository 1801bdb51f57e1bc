//! Outcome records for identity checks.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::numerics::hpreal::HPReal;
use crate::numerics::numeric::TailEstimate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub suite: String,
    pub id: String,
    pub lhs: String,
    pub rhs: String,
    /// Combined error bound of a numeric comparison; absent for exact ones.
    pub error_bound: Option<String>,
    pub tolerance: Option<String>,
    pub status: Status,
    pub detail: Option<String>,
    pub elapsed_ms: f64,
}

impl IdentityReport {
    /// Exact comparison of rationals or symbolic expressions; never inconclusive.
    pub fn exact<T: PartialEq + fmt::Display>(suite: &str, id: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        Self {
            suite: suite.to_string(),
            id: id.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            error_bound: None,
            tolerance: None,
            status: if lhs == rhs { Status::Pass } else { Status::Fail },
            detail: None,
            elapsed_ms: 0.0,
        }
    }

    /// Numeric comparison: inconclusive when the error bound alone exceeds
    /// the tolerance, otherwise pass iff `|lhs - rhs| <= tol`.
    pub fn numeric(
        suite: &str,
        id: impl Into<String>,
        lhs: &HPReal,
        rhs: &HPReal,
        error_bound: &HPReal,
        tol: &HPReal,
    ) -> Self {
        let diff = (lhs - rhs).abs();
        let status = if error_bound > tol {
            Status::Inconclusive
        } else if &diff <= tol {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            suite: suite.to_string(),
            id: id.into(),
            lhs: lhs.to_sci(25),
            rhs: rhs.to_sci(25),
            error_bound: Some(error_bound.to_sci(3)),
            tolerance: Some(tol.to_sci(2)),
            status,
            detail: Some(format!("|lhs-rhs| = {}", diff.to_sci(3))),
            elapsed_ms: 0.0,
        }
    }

    /// Numeric estimate against a reference value: inconclusive when the
    /// estimate's own bound exceeds `tol`, otherwise pass iff the reference
    /// lies within that bound.
    pub fn within_bound(
        suite: &str,
        id: impl Into<String>,
        est: &TailEstimate,
        reference: &HPReal,
        tol: &HPReal,
    ) -> Self {
        let diff = (&est.value - reference).abs();
        let status = if &est.error_bound > tol {
            Status::Inconclusive
        } else if diff <= est.error_bound {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            suite: suite.to_string(),
            id: id.into(),
            lhs: est.value.to_sci(25),
            rhs: reference.to_sci(25),
            error_bound: Some(est.error_bound.to_sci(3)),
            tolerance: Some(tol.to_sci(2)),
            status,
            detail: Some(format!("|lhs-rhs| = {}", diff.to_sci(3))),
            elapsed_ms: 0.0,
        }
    }

    pub fn failed(suite: &str, id: impl Into<String>, why: impl Into<String>) -> Self {
        Self {
            suite: suite.to_string(),
            id: id.into(),
            lhs: String::new(),
            rhs: String::new(),
            error_bound: None,
            tolerance: None,
            status: Status::Fail,
            detail: Some(why.into()),
            elapsed_ms: 0.0,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = elapsed.as_secs_f64() * 1e3;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Exit code contract: 0 all pass, 1 any failure, 2 only inconclusive left.
pub fn exit_code(reports: &[IdentityReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::Inconclusive) {
        2
    } else {
        0
    }
}
