//! Accretivity grades, hyponormality, accretive squares, and the
//! quarter-plane sector test.

use crate::linalg::{hermitian_eigen, operator_norm, ComplexMatrix};
use crate::props::{cartesian_parts, PropertyKind, PropertyReport, PropertyStatus};
use crate::tolerance::Tolerances;
use crate::Result;

/// Both accretivity grades in one pass over the Hermitian part.
#[derive(Debug, Clone)]
pub struct AccretivityReports {
    /// `m(A) >= 0`: the numerical range sits in the closed right half-plane.
    pub accretive: PropertyReport,
    /// `m(A) > 0`: for matrices the numerical range is compact, so the open
    /// half-plane inclusion collapses to strict positivity of `m(A)`.
    pub positively_accretive: PropertyReport,
}

/// Check `m(A) >= 0` (accretive) and `m(A) > 0` (positively accretive).
///
/// The witness on violation is the eigenvector attaining `m(A)`, so that
/// `Re<Ax, x> = m(A)` certifies the verdict. The open-half-plane grade is
/// reported `Inconclusive` when `m(A)` falls inside the tolerance band,
/// where neither strict sign can be certified.
pub fn check_accretivity(a: &ComplexMatrix, tol: &Tolerances) -> Result<AccretivityReports> {
    let x = a.hermitian_part();
    let es = hermitian_eigen(&x, tol.rel)?;
    let m = es.min_value();
    let witness = es.vector(0);
    let scale = x.frobenius_norm();
    let thresh = tol.threshold(scale);
    let method = format!("lambda_min of the Hermitian part (Jacobi, scale {scale:.3e})");

    let accretive = PropertyReport {
        property: PropertyKind::Accretive,
        status: if m >= -thresh {
            PropertyStatus::Holds
        } else {
            PropertyStatus::Violated
        },
        extremal_value: m,
        witness: (m < -thresh).then(|| witness.clone()),
        tolerance: thresh,
        method: method.clone(),
    };
    let positively_accretive = PropertyReport {
        property: PropertyKind::PositivelyAccretive,
        status: if m > thresh {
            PropertyStatus::Holds
        } else if m < -thresh {
            PropertyStatus::Violated
        } else {
            PropertyStatus::Inconclusive
        },
        extremal_value: m,
        witness: (m < -thresh).then_some(witness),
        tolerance: thresh,
        method,
    };
    Ok(AccretivityReports {
        accretive,
        positively_accretive,
    })
}

/// Hyponormality: `lambda_min([A^H, A]) >= 0` (the commutator is positive
/// semidefinite). Violations carry the minimizing eigenvector, where
/// `<[A^H, A] x, x> < 0` means `|A^H x| > |A x|`.
pub fn check_hyponormal(a: &ComplexMatrix, tol: &Tolerances) -> Result<PropertyReport> {
    let comm = a.adjoint_commutator();
    let es = hermitian_eigen(&comm, tol.rel)?;
    let lambda_min = es.min_value();
    let norm_a = operator_norm(a, tol.rel)?;
    let thresh = tol.threshold(norm_a * norm_a);
    let violated = lambda_min < -thresh;
    Ok(PropertyReport {
        property: PropertyKind::Hyponormal,
        status: if violated {
            PropertyStatus::Violated
        } else {
            PropertyStatus::Holds
        },
        extremal_value: lambda_min,
        witness: violated.then(|| es.vector(0)),
        tolerance: thresh,
        method: "lambda_min of [A^H, A] (Jacobi)".to_string(),
    })
}

/// Accretive square: `m(A^2) >= 0`.
pub fn check_accretive_square(a: &ComplexMatrix, tol: &Tolerances) -> Result<PropertyReport> {
    let a2 = a.mul(a);
    let es = hermitian_eigen(&a2.hermitian_part(), tol.rel)?;
    let m2 = es.min_value();
    let norm_a = operator_norm(a, tol.rel)?;
    let thresh = tol.threshold(norm_a * norm_a);
    let violated = m2 < -thresh;
    Ok(PropertyReport {
        property: PropertyKind::AccretiveSquare,
        status: if violated {
            PropertyStatus::Violated
        } else {
            PropertyStatus::Holds
        },
        extremal_value: m2,
        witness: violated.then(|| es.vector(0)),
        tolerance: thresh,
        method: "lambda_min of the Hermitian part of A^2 (Jacobi)".to_string(),
    })
}

/// Sector test `|arg z| <= pi/4` for all `z` in the numerical range,
/// equivalently `-X <= Y <= X` for the Cartesian parts: both `X - Y` and
/// `X + Y` must be positive semidefinite.
pub fn check_semiangle(a: &ComplexMatrix, tol: &Tolerances) -> Result<PropertyReport> {
    let parts = cartesian_parts(a);
    let minus = hermitian_eigen(&parts.x.sub(&parts.y), tol.rel)?;
    let plus = hermitian_eigen(&parts.x.add(&parts.y), tol.rel)?;
    let (extremal, witness_side) = if minus.min_value() <= plus.min_value() {
        (minus.min_value(), &minus)
    } else {
        (plus.min_value(), &plus)
    };
    let scale = a.frobenius_norm();
    let thresh = tol.threshold(scale);
    let violated = extremal < -thresh;
    Ok(PropertyReport {
        property: PropertyKind::Semiangle,
        status: if violated {
            PropertyStatus::Violated
        } else {
            PropertyStatus::Holds
        },
        extremal_value: extremal,
        witness: violated.then(|| witness_side.vector(0)),
        tolerance: thresh,
        method: "min(lambda_min(X - Y), lambda_min(X + Y))".to_string(),
    })
}
