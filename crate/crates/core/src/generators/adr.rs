//! Finite-difference discretization of the advection-diffusion operator
//! `Au = -u'' + u'` on `(alpha, beta)` with `u(alpha) = 0` (Dirichlet) and
//! `u'(beta) = 0` (Neumann).
//!
//! Second-order central differences on the uniform grid
//! `x_k = alpha + k Delta`, `Delta = (beta - alpha)/(n + 1)`, unknowns at
//! `x_1 .. x_{n+1}`. The Dirichlet value eliminates the `x_0` column. The
//! Neumann condition enters through a second-order ghost point
//! (`u_{n+2} = u_n`, used by both the `-u''` stencil and the centered `u'`),
//! and the boundary equation is the half-cell balance: the node at `beta`
//! controls only half a cell, so its row carries weight 1/2. The half weight
//! is what transfers the ellipticity of the underlying form to the matrix:
//! with it, `lambda_min` of the Hermitian part converges to the Robin
//! constant `k^2` (`tan k = -2k`, `k ~ 1.8366`) instead of dipping negative
//! under refinement. The resulting `(n+1) x (n+1)` matrix is real and
//! nonsymmetric.

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::ComplexMatrix;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdrParams {
    pub alpha: f64,
    pub beta: f64,
    /// Interior grid size; the matrix has `n + 1` unknowns.
    pub n: usize,
}

impl AdrParams {
    pub fn new(alpha: f64, beta: f64, n: usize) -> Result<Self> {
        if beta <= alpha || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::domain("advection-diffusion needs beta > alpha"));
        }
        if n < 2 {
            return Err(Error::domain("advection-diffusion needs n >= 2"));
        }
        Ok(AdrParams { alpha, beta, n })
    }

    pub fn delta(&self) -> f64 {
        (self.beta - self.alpha) / (self.n + 1) as f64
    }

    /// Grid nodes carrying unknowns, `x_1 .. x_{n+1}`.
    pub fn nodes(&self) -> Vec<f64> {
        (1..=self.n + 1)
            .map(|k| self.alpha + k as f64 * self.delta())
            .collect()
    }
}

pub fn advection_diffusion(p: &AdrParams) -> ComplexMatrix {
    let n = p.n;
    let delta = p.delta();
    let diff = 1.0 / (delta * delta);
    let adv = 1.0 / (2.0 * delta);
    let size = n + 1;
    let mut a = ComplexMatrix::zeros(size);

    // Row index i holds the equation at x_{i+1}.
    for i in 0..size {
        if i + 1 < size {
            // Interior stencil: (-u_{k-1} + 2 u_k - u_{k+1})/Delta^2
            //                 + (u_{k+1} - u_{k-1})/(2 Delta).
            if i > 0 {
                a[(i, i - 1)] = Complex64::new(-diff - adv, 0.0);
            }
            // k = 1: the u_0 term is eliminated by the Dirichlet condition.
            a[(i, i)] = Complex64::new(2.0 * diff, 0.0);
            a[(i, i + 1)] = Complex64::new(-diff + adv, 0.0);
        } else {
            // k = n + 1 (x = beta): the ghost point u_{n+2} = u_n kills the
            // advection term and doubles the lower diffusion coupling;
            // half-cell weight 1/2 on the whole row.
            a[(i, i - 1)] = Complex64::new(-diff, 0.0);
            a[(i, i)] = Complex64::new(diff, 0.0);
        }
    }
    a
}
