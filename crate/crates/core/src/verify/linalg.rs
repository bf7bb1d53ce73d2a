//! Minimal dense complex linear algebra: Hermitian eigendecomposition by
//! cyclic Jacobi rotations and the spectral norm derived from it.
//!
//! Jacobi is slower than Householder tridiagonalization but unconditionally
//! stable, fully deterministic, and accurate to a small multiple of machine
//! epsilon times the matrix norm, which is what the oracle needs. At the
//! 256x256 cap the cost is irrelevant.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian
/// matrix.
pub fn hermitian_eigen(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let (values, vectors) = jacobi(a, true);
    (values, vectors.expect("vectors requested"))
}

/// Eigenvalues only (ascending); skips accumulating the rotations.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Vec<f64> {
    jacobi(a, false).0
}

fn jacobi(a: &CMatrix, want_vectors: bool) -> (Vec<f64>, Option<CMatrix>) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "matrix must be square");
    let mut m = a.clone();
    let mut vectors = want_vectors.then(|| CMatrix::identity(n, n));

    let scale = m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let tol = 1e-14 * scale;
    for _sweep in 0..60 {
        let mut off_sq = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq += m[(p, q)].norm_sqr();
            }
        }
        if off_sq.sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let abs_apq = apq.norm();
                if abs_apq < tol * 1e-2 {
                    continue;
                }
                let phase = apq / abs_apq;
                let tau = (m[(q, q)].re - m[(p, p)].re) / (2.0 * abs_apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sp = (t * c) * phase;

                // A <- A G with G = [[c, sp], [-conj(sp), c]] on (p, q).
                for i in 0..n {
                    let aip = m[(i, p)];
                    let aiq = m[(i, q)];
                    m[(i, p)] = c * aip - sp.conj() * aiq;
                    m[(i, q)] = sp * aip + c * aiq;
                }
                // A <- G^dag A.
                for j in 0..n {
                    let apj = m[(p, j)];
                    let aqj = m[(q, j)];
                    m[(p, j)] = c * apj - sp * aqj;
                    m[(q, j)] = sp.conj() * apj + c * aqj;
                }
                if let Some(v) = vectors.as_mut() {
                    for i in 0..n {
                        let vip = v[(i, p)];
                        let viq = v[(i, q)];
                        v[(i, p)] = c * vip - sp.conj() * viq;
                        v[(i, q)] = sp * vip + c * viq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = vectors.map(|v| {
        let mut sorted = CMatrix::zeros(n, n);
        for (dst, &src) in order.iter().enumerate() {
            sorted.column_mut(dst).copy_from(&v.column(src));
        }
        sorted
    });
    (values, vectors)
}

/// Largest singular value, via the eigenvalues of `M^dag M`.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    let gram = m.adjoint() * m;
    let values = hermitian_eigenvalues(&gram);
    values.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;
    use approx::assert_relative_eq;

    fn random_hermitian(n: usize, seed: u64) -> CMatrix {
        let mut rng = SeededRng::new(seed);
        let raw = CMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.standard_normal(), rng.standard_normal())
        });
        (&raw + raw.adjoint()) * Complex64::new(0.5, 0.0)
    }

    #[test]
    fn reconstructs_random_hermitian_matrices() {
        for (n, seed) in [(2, 1), (5, 2), (16, 3), (33, 4)] {
            let a = random_hermitian(n, seed);
            let (values, vectors) = hermitian_eigen(&a);
            let lambda = CMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    Complex64::new(values[i], 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            let rebuilt = &vectors * lambda * vectors.adjoint();
            assert!(spectral_norm(&(&a - rebuilt)) < 1e-12 * (1.0 + spectral_norm(&a)));
            // Orthonormal eigenvectors.
            let gram = vectors.adjoint() * &vectors;
            let eye = CMatrix::identity(n, n);
            assert!(spectral_norm(&(gram - eye)) < 1e-12);
            // Ascending.
            for w in values.windows(2) {
                assert!(w[0] <= w[1] + 1e-14);
            }
        }
    }

    #[test]
    fn known_eigenvalues() {
        // Pauli Z.
        let z = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ],
        );
        assert_eq!(hermitian_eigenvalues(&z), vec![-1.0, 1.0]);
        // Pauli Y: complex off-diagonals.
        let y = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let values = hermitian_eigenvalues(&y);
        assert_relative_eq!(values[0], -1.0, max_relative = 1e-14);
        assert_relative_eq!(values[1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn trace_and_norm_consistency() {
        let a = random_hermitian(12, 9);
        let values = hermitian_eigenvalues(&a);
        let trace: f64 = (0..12).map(|i| a[(i, i)].re).sum();
        assert_relative_eq!(values.iter().sum::<f64>(), trace, max_relative = 1e-10);
        let max_abs = values.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        assert_relative_eq!(spectral_norm(&a), max_abs, max_relative = 1e-10);
    }

    #[test]
    fn spectral_norm_basics() {
        let zero = CMatrix::zeros(4, 4);
        assert_eq!(spectral_norm(&zero), 0.0);
        let eye = CMatrix::identity(7, 7);
        assert_relative_eq!(spectral_norm(&eye), 1.0, max_relative = 1e-13);
        let scaled = eye * Complex64::new(0.0, -3.0);
        assert_relative_eq!(spectral_norm(&scaled), 3.0, max_relative = 1e-13);
    }
}
