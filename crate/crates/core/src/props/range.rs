//! Numerical range `nu(A) = { <Ax, x> : |x| = 1 }` and its lower bound
//! `m(A) = inf Re nu(A)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{hermitian_eigen, ComplexMatrix};
use crate::tolerance::Tolerances;
use crate::Result;

/// Sampled boundary of the numerical range.
///
/// For each angle `theta` the extreme eigenpair of the Hermitian part of
/// `e^{i theta} A` gives the support value `max Re(e^{i theta} <Ax, x>)` and
/// the boundary point `<Ax_theta, x_theta>`. On boundary flats (degenerate
/// extreme eigenvalues) the eigensolver's first extreme eigenvector is used,
/// which yields some supporting point of the flat.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RangeBoundary {
    pub angles: Vec<f64>,
    pub support_values: Vec<f64>,
    pub boundary_points: Vec<Complex64>,
    /// `m(A) = inf Re nu(A)`.
    pub m: f64,
}

/// `m(A)`: the smallest eigenvalue of the Hermitian part of `A`, which for
/// matrices equals `inf Re nu(A)`.
pub fn lower_bound_m(a: &ComplexMatrix, tol: &Tolerances) -> Result<f64> {
    let x = a.hermitian_part();
    Ok(hermitian_eigen(&x, tol.rel)?.min_value())
}

/// Support value and boundary point in direction `theta`.
fn support_point(a: &ComplexMatrix, theta: f64, tol: &Tolerances) -> Result<(f64, Complex64)> {
    let rotated = a.scale(Complex64::from_polar(1.0, theta));
    let es = hermitian_eigen(&rotated.hermitian_part(), tol.rel)?;
    let x = es.vector(es.dim() - 1);
    let z = a.mul_vec(&x).inner(&x);
    Ok((es.max_value(), z))
}

/// Sample the boundary of `nu(A)` on a uniform angle grid over `[0, 2pi)`.
///
/// `m` is taken from the `theta = pi` support direction (evaluated exactly,
/// whether or not `pi` falls on the grid) and cross-checked against
/// [`lower_bound_m`]; a disagreement is an internal failure of the
/// eigensolver and is reported as such.
pub fn numerical_range_boundary(
    a: &ComplexMatrix,
    n_angles: usize,
    tol: &Tolerances,
) -> Result<RangeBoundary> {
    if n_angles < 4 {
        return Err(Error::domain("numerical range sweep needs n_angles >= 4"));
    }
    let mut angles = Vec::with_capacity(n_angles);
    let mut support_values = Vec::with_capacity(n_angles);
    let mut boundary_points = Vec::with_capacity(n_angles);
    for k in 0..n_angles {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n_angles as f64;
        let (support, z) = support_point(a, theta, tol)?;
        angles.push(theta);
        support_values.push(support);
        boundary_points.push(z);
    }

    // max Re(e^{i pi} <Ax,x>) = -inf Re <Ax,x>.
    let (support_pi, _) = support_point(a, std::f64::consts::PI, tol)?;
    let m = -support_pi;
    let m_direct = lower_bound_m(a, tol)?;
    let scale = a.frobenius_norm().max(1.0);
    if (m - m_direct).abs() > 1e-8 * scale {
        return Err(Error::numerical(format!(
            "numerical range lower bound mismatch: sweep gave {m}, Hermitian part gave {m_direct}"
        )));
    }
    Ok(RangeBoundary {
        angles,
        support_values,
        boundary_points,
        m,
    })
}

impl RangeBoundary {
    /// Worst violation of the supporting half-plane inequalities: every
    /// boundary point must satisfy `Re(e^{i theta} z) <= support(theta)`.
    /// Nonpositive (up to tolerance) for a correctly sampled convex set.
    pub fn convexity_defect(&self) -> f64 {
        let mut worst = f64::NEG_INFINITY;
        for (&theta, &support) in self.angles.iter().zip(&self.support_values) {
            let dir = Complex64::from_polar(1.0, theta);
            for &z in &self.boundary_points {
                worst = worst.max((dir * z).re - support);
            }
        }
        worst
    }
}
