//! Verdict record for one algebraic property.

use serde::{Deserialize, Serialize};

use crate::linalg::ComplexVector;

/// Which property a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyKind {
    Accretive,
    PositivelyAccretive,
    Hyponormal,
    AccretiveSquare,
    Semiangle,
    LogConvexityCriterion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyStatus {
    Holds,
    Violated,
    /// The extremal value sits inside the tolerance band of a strict
    /// inequality, so neither verdict can be certified.
    Inconclusive,
}

/// Outcome of one property check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: PropertyKind,
    pub status: PropertyStatus,
    /// The decisive infimum/minimum (`m(A)`, `m(A^2)`,
    /// `lambda_min([A^H, A])`, or the best criterion value found).
    pub extremal_value: f64,
    /// Vector achieving the extremal value, present whenever the verdict is
    /// `Violated` (re-evaluating the defining quantity there confirms it).
    pub witness: Option<ComplexVector>,
    /// Threshold the verdict was decided against.
    pub tolerance: f64,
    /// How the extremum was obtained.
    pub method: String,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.status == PropertyStatus::Holds
    }

    pub fn violated(&self) -> bool {
        self.status == PropertyStatus::Violated
    }
}
