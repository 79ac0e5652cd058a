//! The sector counter-example: a positively accretive operator whose
//! numerical range sits inside the quarter-plane sector but whose square is
//! never accretive, and which violates the log-convexity criterion for every
//! admissible parameter choice.
//!
//! Construction: `X` has orthonormal eigenvectors `v1, v2` with eigenvalues
//! `0 < lambda1 < lambda2` and equals the identity on the complement;
//! `U` swaps `v1` and `v2` and vanishes on the complement;
//! `Y = delta X + lambda1 U`; `A = X + iY`. Here `v1, v2` are the first two
//! standard basis vectors (any unitary conjugation gives the same verdicts).

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::ComplexMatrix;
use crate::Result;

/// Parameters of the sector counter-example.
///
/// Admissible range: `lambda2 > lambda1 > 0`, `dim >= 2` and
/// `0 < delta <= 1 - sqrt(lambda1 / lambda2)` (the sector condition
/// `-X <= Y <= X` holds exactly on this range).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShowexParams {
    pub lambda1: f64,
    pub lambda2: f64,
    pub delta: f64,
    pub dim: usize,
}

impl ShowexParams {
    pub fn new(lambda1: f64, lambda2: f64, delta: f64, dim: usize) -> Result<Self> {
        if lambda1 <= 0.0 || lambda1.is_nan() || lambda2 <= lambda1 || lambda2.is_nan() {
            return Err(Error::domain("sector example needs 0 < lambda1 < lambda2"));
        }
        let delta_max = 1.0 - (lambda1 / lambda2).sqrt();
        if delta <= 0.0 || delta.is_nan() || delta > delta_max {
            return Err(Error::domain(format!(
                "sector example needs 0 < delta <= {delta_max} for these eigenvalues"
            )));
        }
        if dim < 2 {
            return Err(Error::domain("sector example needs dim >= 2"));
        }
        Ok(ShowexParams {
            lambda1,
            lambda2,
            delta,
            dim,
        })
    }
}

/// Assemble `A = X + i (delta X + lambda1 U)` at any dimension.
pub fn showex_general(p: &ShowexParams) -> ComplexMatrix {
    let n = p.dim;
    let mut x = ComplexMatrix::zeros(n);
    x[(0, 0)] = Complex64::new(p.lambda1, 0.0);
    x[(1, 1)] = Complex64::new(p.lambda2, 0.0);
    for k in 2..n {
        x[(k, k)] = Complex64::new(1.0, 0.0);
    }
    let mut u = ComplexMatrix::zeros(n);
    u[(0, 1)] = Complex64::new(1.0, 0.0);
    u[(1, 0)] = Complex64::new(1.0, 0.0);

    let y = x.scale_re(p.delta).add(&u.scale_re(p.lambda1));
    x.add(&y.scale(Complex64::new(0.0, 1.0)))
}

/// The 2x2 family `A = diag(lambda, 4 lambda) + i lambda [[delta, 1], [1, 4 delta]]`
/// for `lambda > 0`, `0 < delta <= 1/2`.
pub fn showex_matrix2(lambda: f64, delta: f64) -> Result<ComplexMatrix> {
    let p = ShowexParams::new(lambda, 4.0 * lambda, delta, 2)?;
    Ok(showex_general(&p))
}
