//! Operator-norm envelope `E(t) = |e^{-tA}|`.
//!
//! `E` bounds the height of every trajectory but is often misleading about
//! individual ones: its short-time slope is `E'(0) = -m(A)` (numerical
//! range), while the long-time rate is set by the spectral abscissa.

use crate::dynamics::{richardson_one_sided, TimeGrid};
use crate::linalg::{general_eigenvalues, matrix_exp, operator_norm, ComplexMatrix};
use crate::tolerance::Tolerances;
use crate::Result;

#[derive(Debug, Clone)]
pub struct NormSeries {
    pub grid: TimeGrid,
    /// `E(t) = |e^{-tA}|` on the grid.
    pub e: Vec<f64>,
    /// One-sided Richardson estimate of `E'(0)`; should match `-m(A)`.
    pub e_prime_zero_estimate: f64,
    /// `inf Re sigma(A)`, governing the long-time rate.
    pub spectral_abscissa: f64,
}

pub fn operator_norm_series(
    a: &ComplexMatrix,
    grid: &TimeGrid,
    tol: &Tolerances,
) -> Result<NormSeries> {
    let e_at = |t: f64| -> Result<f64> { operator_norm(&matrix_exp(&a.scale_re(-t))?, tol.rel) };
    let mut e = Vec::with_capacity(grid.len());
    for &t in grid.points() {
        e.push(e_at(t)?);
    }
    let e_prime_zero_estimate = richardson_one_sided(1.0, e_at, 1e-3)?;
    let spectral_abscissa = general_eigenvalues(a, tol.rel)?
        .iter()
        .map(|z| z.re)
        .fold(f64::INFINITY, f64::min);
    Ok(NormSeries {
        grid: grid.clone(),
        e,
        e_prime_zero_estimate,
        spectral_abscissa,
    })
}

impl NormSeries {
    /// `(1/t) log E(t)` at the last grid point.
    ///
    /// The long-time statement is dimensionally consistent only in this
    /// normalized form; the limit is `-spectral_abscissa`.
    pub fn long_time_rate(&self) -> f64 {
        let t = self.grid.t_max();
        self.e.last().expect("grid is non-empty").ln() / t
    }
}
