//! Matrix exponential by scaling and squaring with a fixed [13/13] Padé
//! approximant (coefficients and the theta threshold follow Higham's 2005
//! treatment). Chosen over eigendecomposition because the operators of
//! interest are generally non-normal.

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::ComplexMatrix;
use crate::Result;

/// 1-norm above which a [13/13] approximant needs scaling.
const THETA_13: f64 = 5.371920351148152;

/// Squaring cap; `2^60` scalings mean the input norm was astronomically
/// large and the result would be meaningless.
const MAX_SQUARINGS: i32 = 60;

const PADE_13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// `exp(M)` for a square complex matrix.
///
/// Relative accuracy is near machine precision for `|M| <= 100` at the
/// supported sizes; extreme norms or non-finite intermediates produce a
/// numerical-failure error naming the norm.
pub fn matrix_exp(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !m.all_finite() {
        return Err(Error::numerical("matrix exponential of non-finite input"));
    }
    let norm = m.norm_one();
    let s = if norm > THETA_13 {
        ((norm / THETA_13).log2().ceil() as i32).max(0)
    } else {
        0
    };
    if s > MAX_SQUARINGS {
        return Err(Error::numerical(format!(
            "matrix exponential overflow guard: 1-norm {norm:e} requires {s} squarings"
        )));
    }

    let a = m.scale_re(0.5f64.powi(s));
    let mut r = pade_13(&a)?;
    for _ in 0..s {
        r = r.mul(&r);
    }
    if !r.all_finite() {
        return Err(Error::numerical(format!(
            "matrix exponential overflowed (input 1-norm {norm:e})"
        )));
    }
    Ok(r)
}

/// [13/13] Padé approximant of `exp(A)` for `|A| <~ theta_13`.
fn pade_13(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.dim();
    let id = ComplexMatrix::identity(n);
    let a2 = a.mul(a);
    let a4 = a2.mul(&a2);
    let a6 = a4.mul(&a2);
    let b = &PADE_13;

    // U = A [ A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I ]
    let u_inner = a6
        .mul(&poly3(&a6, &a4, &a2, b[13], b[11], b[9]))
        .add(&poly3(&a6, &a4, &a2, b[7], b[5], b[3]))
        .add(&id.scale_re(b[1]));
    let u = a.mul(&u_inner);
    // V = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let v = a6
        .mul(&poly3(&a6, &a4, &a2, b[12], b[10], b[8]))
        .add(&poly3(&a6, &a4, &a2, b[6], b[4], b[2]))
        .add(&id.scale_re(b[0]));

    // exp(A) ~ (V - U)^{-1} (V + U)
    let denom = v.sub(&u);
    let numer = v.add(&u);
    lu_solve_matrix(&denom, &numer)
}

fn poly3(
    a6: &ComplexMatrix,
    a4: &ComplexMatrix,
    a2: &ComplexMatrix,
    c6: f64,
    c4: f64,
    c2: f64,
) -> ComplexMatrix {
    a6.scale_re(c6).add(&a4.scale_re(c4)).add(&a2.scale_re(c2))
}

/// Solve `A X = B` by LU with partial pivoting.
fn lu_solve_matrix(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.dim();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();

    for k in 0..n {
        let (pivot_row, pivot_mag) = (k..n)
            .map(|i| (i, lu[(i, k)].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty pivot range");
        if pivot_mag == 0.0 {
            return Err(Error::numerical(
                "singular Padé denominator in matrix exponential",
            ));
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(pivot_row, j)];
                lu[(pivot_row, j)] = tmp;
            }
            perm.swap(k, pivot_row);
        }
        let inv_pivot = Complex64::new(1.0, 0.0) / lu[(k, k)];
        for i in k + 1..n {
            let factor = lu[(i, k)] * inv_pivot;
            lu[(i, k)] = factor;
            for j in k + 1..n {
                let sub = factor * lu[(k, j)];
                lu[(i, j)] -= sub;
            }
        }
    }

    // Forward/back substitution, one right-hand-side column at a time.
    let mut x = ComplexMatrix::zeros(n);
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n {
        for i in 0..n {
            col[i] = b[(perm[i], j)];
        }
        for i in 1..n {
            let mut acc = col[i];
            for k in 0..i {
                acc -= lu[(i, k)] * col[k];
            }
            col[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = col[i];
            for k in i + 1..n {
                acc -= lu[(i, k)] * col[k];
            }
            col[i] = acc / lu[(i, i)];
        }
        for i in 0..n {
            x[(i, j)] = col[i];
        }
    }
    Ok(x)
}
