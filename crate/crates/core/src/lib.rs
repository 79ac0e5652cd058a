//! Numerical laboratory for the decay of `e^{-tA} u0` under a complex
//! square matrix `A`.
//!
//! The crate is organized around four layers:
//!
//! * [`linalg`] — self-contained dense complex linear algebra: Hermitian
//!   eigendecomposition (cyclic Jacobi), general eigenvalues (Hessenberg +
//!   shifted QR), the matrix exponential (scaling and squaring with a Padé
//!   approximant) and the operator norm.
//! * [`props`] — algebraic operator properties: Cartesian decomposition,
//!   numerical range and its lower bound, accretivity grades, hyponormality,
//!   accretive squares, the quarter-plane sector test, and the log-convexity
//!   criterion `2(Re<Ax,x>)^2 <= Re<A^2 x,x> + |Ax|^2` with a multistart
//!   sphere optimizer and an independent brute-force oracle.
//! * [`dynamics`] — trajectory evolution, the height function
//!   `h(t) = |e^{-tA} u0|` with analytically computed `h'`, `h''`, and
//!   verdicts for log-convexity (differential and discrete), strict decrease,
//!   slope monotonicity, short-time derivative laws, and the operator-norm
//!   envelope `E(t) = |e^{-tA}|`.
//! * [`generators`] — concrete matrices and random families used throughout:
//!   the Showalter sector counter-example, a discretized advection-diffusion
//!   operator, the `diag(-1, 3)` contrast matrix, and scalar convexity
//!   fixtures.
//!
//! All operations are pure functions over immutable values and are safe to
//! call from multiple threads. Every randomized routine takes an explicit
//! seed and is deterministic.

pub mod dynamics;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod props;
pub mod tolerance;

pub use error::Error;
pub use linalg::{ComplexMatrix, ComplexVector};
pub use tolerance::Tolerances;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
