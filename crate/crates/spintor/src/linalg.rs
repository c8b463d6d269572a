//! Thin helpers over nalgebra for the small dense complex matrices used here.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;
pub type RMat = DMatrix<f64>;

pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn im(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

pub fn identity(dim: usize) -> CMat {
    CMat::identity(dim, dim)
}

/// Complexify a real matrix.
pub fn complexify(a: &RMat) -> CMat {
    a.map(re)
}

/// Spectral (operator 2-) norm, computed from the largest eigenvalue of A†A.
pub fn spec_norm(a: &CMat) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    let gram = a.adjoint() * a;
    let eigs = gram.symmetric_eigenvalues();
    eigs.iter().fold(0.0f64, |m, &v| m.max(v.max(0.0))).sqrt()
}

/// Eigen-decomposition of a Hermitian matrix, pairs sorted by descending eigenvalue.
///
/// The input is symmetrized to strip floating-point asymmetry; callers are
/// expected to pass matrices that are Hermitian up to roundoff.
pub fn hermitian_eigen(a: &CMat) -> (Vec<f64>, Vec<CVec>) {
    let h = (a + a.adjoint()).scale(0.5);
    let se = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..se.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| se.eigenvalues[j].partial_cmp(&se.eigenvalues[i]).unwrap());
    let values = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let vectors = order
        .iter()
        .map(|&i| CVec::from(se.eigenvectors.column(i).clone_owned()))
        .collect();
    (values, vectors)
}

/// Orthonormal basis for the kernel of a positive semi-definite Hermitian matrix:
/// eigenvectors whose eigenvalue is at most `tol` in absolute value.
pub fn kernel_basis(gram: &CMat, tol: f64) -> Vec<CVec> {
    let (values, vectors) = hermitian_eigen(gram);
    values
        .iter()
        .zip(vectors)
        .filter(|(v, _)| v.abs() <= tol)
        .map(|(_, w)| w)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_norm_of_diagonal_is_max_abs_entry() {
        let mut a = CMat::zeros(3, 3);
        a[(0, 0)] = re(2.0);
        a[(1, 1)] = re(-5.0);
        a[(2, 2)] = im(1.0);
        assert!((spec_norm(&a) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eigen_sorts_descending_and_reconstructs() {
        let a = CMat::from_row_slice(
            2,
            2,
            &[re(1.0), Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), re(1.0)],
        );
        let (values, vectors) = hermitian_eigen(&a);
        assert!(values[0] >= values[1]);
        assert!((values[0] - 2.0).abs() < 1e-12);
        assert!(values[1].abs() < 1e-12);
        for (v, w) in values.iter().zip(&vectors) {
            let r = &a * w - w.scale(*v);
            assert!(r.norm() < 1e-12);
        }
    }

    #[test]
    fn kernel_basis_finds_null_directions() {
        // Rank-1 PSD matrix on C^3: kernel is 2-dimensional.
        let v = CVec::from_vec(vec![re(1.0), im(1.0), re(0.0)]);
        let gram = &v * v.adjoint();
        let kernel = kernel_basis(&gram, 1e-12);
        assert_eq!(kernel.len(), 2);
        for w in &kernel {
            assert!((&gram * w).norm() < 1e-10);
            assert!((w.norm() - 1.0).abs() < 1e-10);
        }
    }
}
