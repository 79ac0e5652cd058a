//! Concrete operators and random families for experiments and tests.

mod adr;
mod fixtures;
mod random;
mod showex;

pub use adr::{advection_diffusion, AdrParams};
pub use fixtures::{scalar_fixtures, ScalarFixture};
pub use random::{normal_accretive_factors, random_family, NormalFactors, RandomKind};
pub use showex::{showex_general, showex_matrix2, ShowexParams};

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;

/// `diag(-1, 3)`: the stock example where the norm envelope `E(t)` grows at
/// `t = 0` (`E'(0) = 1`) while individual trajectories can decay steeply
/// (`h'(0) = -3` for `u0 = e2`).
pub fn contrast_matrix() -> ComplexMatrix {
    ComplexMatrix::diagonal(&[Complex64::new(-1.0, 0.0), Complex64::new(3.0, 0.0)])
}
