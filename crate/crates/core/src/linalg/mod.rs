//! Self-contained dense complex linear algebra.
//!
//! Everything is column-oblivious row-major `Vec<Complex64>` storage; the
//! supported envelope is dense matrices up to `n ≈ 256`. No external solver
//! is used: the Hermitian eigendecomposition is a cyclic Jacobi sweep, general
//! eigenvalues come from Hessenberg reduction plus shifted QR iteration, and
//! the matrix exponential is scaling-and-squaring with a [13/13] Padé
//! approximant.

mod expm;
mod general;
mod hermitian;
mod matrix;
mod norm;
mod vector;

pub use expm::matrix_exp;
pub use general::general_eigenvalues;
pub use hermitian::{hermitian_eigen, EigenSystem, MAX_JACOBI_SWEEPS};
pub use matrix::ComplexMatrix;
pub use norm::operator_norm;
pub use vector::ComplexVector;
