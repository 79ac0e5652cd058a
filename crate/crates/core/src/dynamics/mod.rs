//! Trajectory dynamics: `u(t) = e^{-tA} u0`, the height function
//! `h(t) = |u(t)|` with analytically computed derivatives, convexity
//! verdicts, and the operator-norm envelope `E(t) = |e^{-tA}|`.

mod convexity;
mod evolve;
mod grid;
mod norms;

pub use convexity::{
    check_differential_logconvexity, check_discrete_logconvexity, check_monotonicity,
    differential_logconvexity_margin, discrete_logconvexity_margin, slope_monotonicity,
    strict_decrease, ConvexityKind, ConvexityVerdict, TripleOptions, VerdictStatus, ViolationSite,
};
pub use evolve::{evolve, h_prime_at_zero, height_series, HeightSeries};
pub use grid::TimeGrid;
pub use norms::{operator_norm_series, NormSeries};

/// Richardson extrapolation of a one-sided derivative at 0 from the three
/// step sizes `delta`, `delta/2`, `delta/4`: two elimination rounds leave an
/// `O(delta^3)` error.
pub(crate) fn richardson_one_sided(
    f0: f64,
    mut eval: impl FnMut(f64) -> crate::Result<f64>,
    delta: f64,
) -> crate::Result<f64> {
    let d1 = (eval(delta)? - f0) / delta;
    let d2 = (eval(delta / 2.0)? - f0) / (delta / 2.0);
    let d4 = (eval(delta / 4.0)? - f0) / (delta / 4.0);
    let r1a = 2.0 * d2 - d1;
    let r1b = 2.0 * d4 - d2;
    Ok((4.0 * r1b - r1a) / 3.0)
}
