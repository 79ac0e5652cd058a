//! Spectral (operator) norm.

use crate::linalg::{hermitian_eigen, ComplexMatrix};
use crate::Result;

/// Largest singular value of `M`, i.e. `sqrt(lambda_max(M^H M))`, to the
/// requested relative tolerance of the eigensolver.
pub fn operator_norm(m: &ComplexMatrix, tol: f64) -> Result<f64> {
    let gram = m.adjoint().mul(m);
    let es = hermitian_eigen(&gram, tol)?;
    // Tiny negative rounding on a PSD spectrum clamps to zero.
    Ok(es.max_value().max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_norm() {
        let m = ComplexMatrix::diagonal(&[c(-1.0, 0.0), c(3.0, 0.0)]);
        assert!((operator_norm(&m, 1e-12).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rank_one_norm() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(2.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!((operator_norm(&m, 1e-12).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_exponential_oracle() {
        // |exp(-diag(1,2))| = e^{-1}
        let m = ComplexMatrix::diagonal(&[c(-1.0, 0.0), c(-2.0, 0.0)]);
        let e = crate::linalg::matrix_exp(&m).unwrap();
        let got = operator_norm(&e, 1e-12).unwrap();
        assert!((got - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn trace_gram_equals_singular_value_sum() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(0.0, -1.0), c(0.5, 0.0)],
            vec![c(3.0, 0.0), c(-1.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, 0.9), c(2.0, -2.0), c(1.0, 1.0)],
        ])
        .unwrap();
        let gram = m.adjoint().mul(&m);
        let es = hermitian_eigen(&gram, 1e-12).unwrap();
        let sum: f64 = es.values.iter().sum();
        let tr = gram.trace().re;
        assert!((sum - tr).abs() <= 1e-10 * tr.abs());
    }
}
