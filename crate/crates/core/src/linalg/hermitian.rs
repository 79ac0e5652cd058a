//! Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! Each sweep visits all `(p, q)` pairs and annihilates `H[p][q]` with a
//! complex plane rotation; convergence is quadratic once the off-diagonal
//! mass is small. Unconditionally convergent for Hermitian input, which is
//! why it backs every `m(A)`-style lower bound in the crate.

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::{ComplexMatrix, ComplexVector};
use crate::Result;

/// Sweep cap; a sweep is one full cyclic pass over the strict upper triangle.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Eigenvalues (ascending) and a unitary matrix of eigenvectors (columns,
/// paired with `values`).
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> ComplexVector {
        let n = self.dim();
        ComplexVector::new((0..n).map(|i| self.vectors[(i, k)]).collect())
            .expect("eigenvector entries are finite")
    }

    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    pub fn max_value(&self) -> f64 {
        self.values[self.dim() - 1]
    }

    /// Reconstruction `V diag(values) V^H`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::diagonal(
            &self
                .values
                .iter()
                .map(|&v| Complex64::new(v, 0.0))
                .collect::<Vec<_>>(),
        );
        self.vectors.mul(&d).mul(&self.vectors.adjoint())
    }
}

/// Frobenius mass of the strict off-diagonal part.
fn off_diagonal_norm(h: &ComplexMatrix) -> f64 {
    let n = h.dim();
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += h[(p, q)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Eigendecomposition of a Hermitian matrix.
///
/// The input is symmetrized internally, so slightly non-Hermitian data (from
/// accumulated rounding) is accepted. Convergence is declared when the
/// off-diagonal Frobenius mass drops below `tol * |H|_F` (floored near
/// machine precision); exceeding [`MAX_JACOBI_SWEEPS`] yields a
/// non-convergence error carrying the residual.
pub fn hermitian_eigen(h: &ComplexMatrix, tol: f64) -> Result<EigenSystem> {
    if !h.all_finite() {
        return Err(Error::numerical("eigensolver input is not finite"));
    }
    let n = h.dim();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale == 0.0 {
        return Ok(EigenSystem {
            values: vec![0.0; n],
            vectors: v,
        });
    }
    // Below ~n*eps the rotations are pure noise; don't chase them.
    let target = (tol.max(0.0) * scale).max(f64::EPSILON * scale * n as f64);

    for _sweep in 0..MAX_JACOBI_SWEEPS {
        if off_diagonal_norm(&a) <= target {
            return Ok(finish(a, v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let residual = off_diagonal_norm(&a);
    if residual <= target {
        return Ok(finish(a, v));
    }
    Err(Error::NonConvergence {
        what: "Jacobi eigensolver",
        residual,
        iterations: MAX_JACOBI_SWEEPS,
    })
}

/// One Jacobi rotation annihilating `a[p][q]`.
///
/// With `b = a[p][q] = |b| e^{i phi}`, the unitary acting on the `(p, q)`
/// plane is `U = [[c, -conj(s)], [s, c]]` with `c = cos(theta)` real and
/// `s = sin(theta) e^{-i phi}`, where `tan(theta)` is the stable root of
/// `t^2 - 2 tau t - 1 = 0`, `tau = (a_qq - a_pp) / (2 |b|)`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let babs = b.norm();
    if babs == 0.0 {
        return;
    }
    let phase = b / babs;
    let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * babs);
    // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0.
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let sigma = t * c;
    // s = sigma * e^{-i phi}; conj(s) = sigma * phase along the row update.
    let s = sigma * phase.conj();
    let s_conj = sigma * phase;

    let n = a.dim();
    // Rows p, q: A <- U^H A with U^H = [[c, conj(s)], [-s, c]].
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj * c + aqj * s_conj;
        a[(q, j)] = aqj * c - apj * s;
    }
    // Columns p, q: A <- A U with U = [[c, -conj(s)], [s, c]].
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * c + aiq * s;
        a[(i, q)] = aiq * c - aip * s_conj;
    }
    // Accumulate the eigenvector basis the same way.
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c + viq * s;
        v[(i, q)] = viq * c - vip * s_conj;
    }
    // The rotated diagonal is real by construction; pin it.
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
}

/// Sort eigenvalues ascending and permute eigenvector columns to match.
fn finish(a: ComplexMatrix, v: ComplexMatrix) -> EigenSystem {
    let n = a.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    EigenSystem { values, vectors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix() {
        let h = ComplexMatrix::diagonal(&[c(3.0, 0.0), c(-1.0, 0.0)]);
        let es = hermitian_eigen(&h, 1e-12).unwrap();
        assert_abs_diff_eq!(es.values[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(es.values[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn real_symmetric_swap() {
        let h = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let es = hermitian_eigen(&h, 1e-12).unwrap();
        assert_abs_diff_eq!(es.values[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(es.values[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn complex_hermitian_2x2_characteristic_oracle() {
        // [[2, i], [-i, 2]]: lambda^2 - 4 lambda + (4 - 1) = 0 => 1, 3.
        let h = ComplexMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(2.0, 0.0)],
        ])
        .unwrap();
        let es = hermitian_eigen(&h, 1e-12).unwrap();
        assert_abs_diff_eq!(es.values[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(es.values[1], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn residual_and_orthonormality() {
        // Fixed non-trivial Hermitian 4x4.
        let mut h = ComplexMatrix::zeros(4);
        let vals = [
            (0, 0, 2.0, 0.0),
            (1, 1, -1.0, 0.0),
            (2, 2, 0.5, 0.0),
            (3, 3, 4.0, 0.0),
            (0, 1, 1.0, 0.7),
            (0, 2, -0.3, 0.1),
            (0, 3, 0.0, -2.0),
            (1, 2, 0.9, 0.9),
            (1, 3, -1.1, 0.2),
            (2, 3, 0.4, -0.6),
        ];
        for &(i, j, re, im) in &vals {
            h[(i, j)] = c(re, im);
            if i != j {
                h[(j, i)] = c(re, -im);
            }
        }
        let es = hermitian_eigen(&h, 1e-12).unwrap();
        let scale = h.frobenius_norm();
        // H v_k = lambda_k v_k
        for k in 0..4 {
            let vk = es.vector(k);
            let resid = h.mul_vec(&vk).sub(&vk.scale(c(es.values[k], 0.0)));
            assert!(resid.norm() <= 1e-12 * scale, "residual {}", resid.norm());
        }
        // V^H V = I
        let vhv = es.vectors.adjoint().mul(&es.vectors);
        let err = vhv.sub(&ComplexMatrix::identity(4)).frobenius_norm();
        assert!(err <= 1e-13, "orthonormality defect {err}");
        // Reconstruction
        let rec_err = es.reconstruct().sub(&h).frobenius_norm();
        assert!(rec_err <= 1e-12 * scale, "reconstruction defect {rec_err}");
    }

    #[test]
    fn values_sorted_ascending() {
        let h = ComplexMatrix::diagonal(&[c(5.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)]);
        let es = hermitian_eigen(&h, 1e-12).unwrap();
        assert!(es.values.windows(2).all(|w| w[0] <= w[1]));
    }
}
