//! Cartesian decomposition `A = X + iY` with Hermitian `X`, `Y`.

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;

/// The unique Hermitian pair with `A = X + iY`:
/// `X = (A + A^H)/2`, `Y = (A - A^H)/(2i)`.
#[derive(Debug, Clone)]
pub struct CartesianPair {
    pub x: ComplexMatrix,
    pub y: ComplexMatrix,
}

impl CartesianPair {
    /// `X + iY`, which reproduces `A` up to rounding.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.x.add(&self.y.scale(Complex64::new(0.0, 1.0)))
    }
}

pub fn cartesian_parts(a: &ComplexMatrix) -> CartesianPair {
    let x = a.hermitian_part();
    // Y = (A - A^H) / (2i) = -i (A - X) done entrywise for symmetry hygiene.
    let n = a.dim();
    let y = ComplexMatrix::from_fn(n, |i, j| {
        (a[(i, j)] - a[(j, i)].conj()) / Complex64::new(0.0, 2.0)
    });
    CartesianPair { x, y }
}
