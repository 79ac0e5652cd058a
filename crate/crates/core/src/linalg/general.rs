//! General complex eigenvalues: Hessenberg reduction followed by explicit
//! single-shift QR iteration with Wilkinson shifts.
//!
//! Only eigenvalues are produced; the sole consumer is the spectral-abscissa
//! diagnostic, so the supported envelope is `n <= 256`.

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::ComplexMatrix;
use crate::Result;

const MAX_ITERS_PER_EIGENVALUE: usize = 60;

/// Eigenvalues of a general square complex matrix, with multiplicity, in
/// unspecified order.
pub fn general_eigenvalues(a: &ComplexMatrix, tol: f64) -> Result<Vec<Complex64>> {
    let n = a.dim();
    if n == 1 {
        return Ok(vec![a[(0, 0)]]);
    }
    let mut h = hessenberg(a);
    let deflate_tol = tol.abs().max(f64::EPSILON);

    let mut values = Vec::with_capacity(n);
    // Active block is rows/columns lo..=hi; eigenvalues peel off the bottom.
    let mut hi = n - 1;
    let mut iters_since_deflation = 0usize;
    let mut total_budget = MAX_ITERS_PER_EIGENVALUE * n;

    loop {
        // Scan for negligible subdiagonals inside the active block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let local = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if sub <= deflate_tol * local.max(h.frobenius_norm() * f64::EPSILON) {
                h[(lo, lo - 1)] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }

        if lo == hi {
            // 1x1 block converged.
            values.push(h[(hi, hi)]);
            if hi == 0 {
                break;
            }
            hi -= 1;
            iters_since_deflation = 0;
            continue;
        }
        if lo + 1 == hi {
            // 2x2 block: closed form.
            let (l1, l2) = eig2(h[(lo, lo)], h[(lo, hi)], h[(hi, lo)], h[(hi, hi)]);
            values.push(l1);
            values.push(l2);
            if lo == 0 {
                break;
            }
            hi = lo - 1;
            iters_since_deflation = 0;
            continue;
        }

        if total_budget == 0 {
            return Err(Error::NonConvergence {
                what: "QR eigenvalue iteration",
                residual: h[(hi, hi - 1)].norm(),
                iterations: MAX_ITERS_PER_EIGENVALUE * n,
            });
        }
        total_budget -= 1;
        iters_since_deflation += 1;

        let shift = if iters_since_deflation.is_multiple_of(12) {
            // Exceptional shift to break rare limit cycles.
            let mag = h[(hi, hi - 1)].norm() + h[(hi - 1, hi - 2)].norm();
            h[(hi, hi)] + Complex64::new(0.75 * mag, 0.0)
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_step(&mut h, lo, hi, shift);
    }

    Ok(values)
}

/// Reduce to upper Hessenberg form with Householder reflections.
fn hessenberg(a: &ComplexMatrix) -> ComplexMatrix {
    let n = a.dim();
    let mut h = a.clone();
    for k in 0..n.saturating_sub(2) {
        // Reflect column k below the subdiagonal onto a multiple of e_1.
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let xnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let x0 = v[0];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * xnorm;
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }

        // H <- (I - 2 v v^H) H on rows k+1.., columns k..
        for j in k..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for (off, vi) in v.iter().enumerate() {
                dot += vi.conj() * h[(k + 1 + off, j)];
            }
            let dot2 = dot * 2.0;
            for (off, vi) in v.iter().enumerate() {
                let val = h[(k + 1 + off, j)] - vi * dot2;
                h[(k + 1 + off, j)] = val;
            }
        }
        // H <- H (I - 2 v v^H) on columns k+1..
        for i in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for (off, vi) in v.iter().enumerate() {
                dot += h[(i, k + 1 + off)] * *vi;
            }
            let dot2 = dot * 2.0;
            for (off, vi) in v.iter().enumerate() {
                let val = h[(i, k + 1 + off)] - dot2 * vi.conj();
                h[(i, k + 1 + off)] = val;
            }
        }
        // The left reflection mapped the column tail to alpha*e1; entries
        // below the subdiagonal are rounding residue, pin them to zero.
        for i in k + 2..n {
            h[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }
    h
}

/// Eigenvalue of the trailing 2x2 closest to the corner entry.
fn wilkinson_shift(h: &ComplexMatrix, hi: usize) -> Complex64 {
    let (l1, l2) = eig2(
        h[(hi - 1, hi - 1)],
        h[(hi - 1, hi)],
        h[(hi, hi - 1)],
        h[(hi, hi)],
    );
    let corner = h[(hi, hi)];
    if (l1 - corner).norm() <= (l2 - corner).norm() {
        l1
    } else {
        l2
    }
}

/// Eigenvalues of `[[a, b], [c, d]]` by the quadratic formula.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let half_tr = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (half_tr * half_tr - det).sqrt();
    (half_tr + disc, half_tr - disc)
}

/// One explicit shifted QR step `H - mu I = QR`, `H <- RQ + mu I` on the
/// active block, implemented with complex Givens rotations along the
/// Hessenberg subdiagonal.
fn qr_step(h: &mut ComplexMatrix, lo: usize, hi: usize, shift: Complex64) {
    let n = h.dim();
    for i in lo..=hi {
        h[(i, i)] -= shift;
    }
    // Forward pass: annihilate subdiagonals, recording rotations.
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        for j in k..n.min(hi + 1) {
            let top = h[(k, j)];
            let bot = h[(k + 1, j)];
            h[(k, j)] = top * c + bot * s;
            h[(k + 1, j)] = -top * s.conj() + bot * c;
        }
        rotations.push((c, s));
    }
    // Backward pass: H <- H Q (apply the conjugated rotations to columns).
    for (k, (c, s)) in rotations.into_iter().enumerate() {
        let k = lo + k;
        for i in lo..=(k + 1).min(hi) {
            let left = h[(i, k)];
            let right = h[(i, k + 1)];
            h[(i, k)] = left * c + right * s.conj();
            h[(i, k + 1)] = -left * s + right * c;
        }
    }
    for i in lo..=hi {
        h[(i, i)] += shift;
    }
}

/// Givens pair `(c real, s)` with `G = [[c, s], [-conj(s), c]]` mapping
/// `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    let an = a.norm();
    let denom = (an * an + bn * bn).sqrt();
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let c = an / denom;
    let s = (a / an) * b.conj() / denom;
    (c, s)
}
