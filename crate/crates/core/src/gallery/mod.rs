//! Machine-checked reproductions of the worked projection examples, as
//! structured reports with one claim per asserted value.

mod runners;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::scalar::Real;

pub use runners::{
    run_2d_angle_example, run_mixed_3d_example, run_nonsmooth_example,
    run_oppenheim_nonuniqueness, run_r4_counterexample,
};

/// Outcome of a single asserted value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Reserved for the one recorded discrepancy between the source text
    /// and direct evaluation; never counted as a failure.
    Flagged,
}

/// One asserted value: `pass ⇔ |expected − computed| ≤ tolerance`.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub description: String,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub status: ClaimStatus,
}

impl Claim {
    pub fn numeric<T: Real>(id: &str, description: &str, expected: f64, computed: T, tolerance: f64) -> Self {
        let computed = computed.as_f64();
        let status = if (expected - computed).abs() <= tolerance {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        };
        Self {
            id: id.into(),
            description: description.into(),
            expected,
            computed,
            tolerance,
            status,
        }
    }

    /// A yes/no assertion encoded as 1/0 with zero tolerance.
    pub fn boolean(id: &str, description: &str, holds: bool) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            expected: 1.0,
            computed: if holds { 1.0 } else { 0.0 },
            tolerance: 0.0,
            status: if holds { ClaimStatus::Pass } else { ClaimStatus::Fail },
        }
    }

    /// The recorded-discrepancy claim: both values are reported, the status
    /// stays `Flagged` whatever they are.
    pub fn flagged<T: Real>(id: &str, description: &str, expected: T, computed: T, tolerance: f64) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            expected: expected.as_f64(),
            computed: computed.as_f64(),
            tolerance,
            status: ClaimStatus::Flagged,
        }
    }
}

/// A named matrix attached to a report, row-major.
#[derive(Debug, Clone, Serialize)]
pub struct Artifact {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Artifact {
    pub fn matrix<T: Real>(name: &str, m: &DMatrix<T>) -> Self {
        let mut data = Vec::with_capacity(m.nrows() * m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                data.push(m[(i, j)].as_f64());
            }
        }
        Self {
            name: name.into(),
            rows: m.nrows(),
            cols: m.ncols(),
            data,
        }
    }
}

/// A reproduced example: its claims and the matrices it was built from.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub example_id: String,
    pub claims: Vec<Claim>,
    pub artifacts: Vec<Artifact>,
}

impl ExampleReport {
    /// True when no claim failed (flagged claims do not count).
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&Claim> {
        self.claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Fail)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Identifiers of all gallery examples, in report order.
pub const EXAMPLE_IDS: [&str; 5] = ["angles2d", "r4", "mixed3d", "oppenheim", "nonsmooth"];

/// Runs one example by identifier.
pub fn run_example<T: Real>(id: &str) -> Option<ExampleReport> {
    match id {
        "angles2d" => Some(run_2d_angle_example::<T>()),
        "r4" => Some(run_r4_counterexample::<T>()),
        "mixed3d" => Some(run_mixed_3d_example::<T>()),
        "oppenheim" => Some(run_oppenheim_nonuniqueness::<T>()),
        "nonsmooth" => Some(run_nonsmooth_example::<T>()),
        _ => None,
    }
}

/// Runs the whole gallery in report order.
pub fn run_all<T: Real>() -> Vec<ExampleReport> {
    EXAMPLE_IDS
        .iter()
        .map(|id| run_example::<T>(id).expect("known identifier"))
        .collect()
}
