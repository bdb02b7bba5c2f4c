//! Dense linear-algebra kernels for small matrices.

mod matrix;
mod schur;
mod symmetric;

pub use matrix::{dot, norm, Matrix};
pub use schur::{general_eigenvalues, hessenberg, ComplexScalar};
pub use symmetric::{sym_eig, EigenDecomposition, DEFAULT_EIG_TOL, SYMMETRY_TOL};

use crate::error::{Error, Result};

/// Largest eigenvalue modulus of a square matrix.
pub fn spectral_radius(m: &Matrix) -> Result<f64> {
    if m.rows() == 1 && m.cols() == 1 {
        return Ok(m[(0, 0)].abs());
    }
    Ok(general_eigenvalues(m)?
        .iter()
        .map(ComplexScalar::modulus)
        .fold(0.0, f64::max))
}

/// Spectral norm `√λ_max(MᵀM)` of a rectangular matrix.
pub fn operator_norm(m: &Matrix) -> Result<f64> {
    // the smaller of MᵀM and MMᵀ has the same nonzero spectrum
    let gram = if m.cols() <= m.rows() { m.gram() } else { m.outer_gram() };
    let eig = sym_eig(&gram, DEFAULT_EIG_TOL)?;
    Ok(eig.max_value().max(0.0).sqrt())
}

/// Orthonormal basis (as columns) of the numerical null space of a
/// symmetric positive semidefinite matrix: eigenvectors whose eigenvalue is
/// below `tol · λ_max`. The result may have zero columns.
pub fn null_space_basis(m: &Matrix, tol: f64) -> Result<Matrix> {
    let eig = sym_eig(m, DEFAULT_EIG_TOL)?;
    let lmax = eig.max_value();
    let keep: Vec<usize> = (0..eig.len())
        .filter(|&j| lmax <= 0.0 || eig.values[j] < tol * lmax)
        .collect();
    Ok(eig.vectors.select_columns(&keep))
}

/// Numerical rank of a symmetric PSD matrix: eigenvalues at or above
/// `tol · λ_max`.
pub fn psd_rank(m: &Matrix, tol: f64) -> Result<usize> {
    let eig = sym_eig(m, DEFAULT_EIG_TOL)?;
    let lmax = eig.max_value();
    if lmax <= 0.0 {
        return Ok(0);
    }
    Ok(eig.values.iter().filter(|&&l| l >= tol * lmax).count())
}

/// Outcome of comparing a weighted power mean with the power of the
/// weighted arithmetic mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerMeanRelation {
    /// `Σwa^m / Σw ≥ (Σwa / Σw)^m`
    GreaterEq,
    /// `Σwa^m / Σw ≤ (Σwa / Σw)^m`
    LessEq,
    /// All `a` equal, so both sides coincide.
    Equal,
}

/// Relation between `Σ wᵢaᵢᵐ / Σ wᵢ` and `(Σ wᵢaᵢ / Σ wᵢ)ᵐ`.
///
/// The left side dominates when `m ∉ (0, 1)` and is dominated when
/// `m ∈ (0, 1)`; the two agree exactly when every `aᵢ` is the same. The
/// numerical comparison decides the verdict; when the two sides agree to
/// rounding (for instance `m = 1`) the theoretical direction is returned.
pub fn power_mean_check(a: &[f64], w: &[f64], m: f64) -> Result<PowerMeanRelation> {
    if a.is_empty() || a.len() != w.len() {
        return Err(Error::Domain(format!(
            "power mean needs equal nonzero lengths, got {} and {}",
            a.len(),
            w.len()
        )));
    }
    if a.iter().chain(w).any(|&x| !(x > 0.0) || !x.is_finite()) {
        return Err(Error::Domain("power mean inputs must be positive and finite".into()));
    }
    if !m.is_finite() {
        return Err(Error::Domain(format!("exponent must be finite, got {m}")));
    }
    let a0 = a[0];
    if a.iter().all(|&x| (x - a0).abs() <= 1e-12 * a0.abs().max(x.abs())) {
        return Ok(PowerMeanRelation::Equal);
    }

    let wsum: f64 = w.iter().sum();
    let lhs = a.iter().zip(w).map(|(x, wi)| wi * x.powf(m)).sum::<f64>() / wsum;
    let rhs = (a.iter().zip(w).map(|(x, wi)| wi * x).sum::<f64>() / wsum).powf(m);
    let slack = 1e-12 * lhs.abs().max(rhs.abs());
    // within rounding, fall back to the direction the theory predicts
    let concave = m > 0.0 && m < 1.0;
    Ok(if lhs - rhs > slack || (rhs - lhs <= slack && !concave) {
        PowerMeanRelation::GreaterEq
    } else {
        PowerMeanRelation::LessEq
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Matrix {
        Matrix::from_rows(&[[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]]).unwrap()
    }

    #[test]
    fn spectral_radius_examples() {
        assert_eq!(spectral_radius(&Matrix::zeros(3, 3)).unwrap(), 0.0);
        assert_eq!(spectral_radius(&Matrix::from_vec(1, 1, vec![-0.4]).unwrap()).unwrap(), 0.4);
        let m = Matrix::from_rows(&[[2.0 / 3.0, 1.0 / 3.0], [1.0 / 3.0, 2.0 / 3.0]]).unwrap();
        assert!((spectral_radius(&m).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn operator_norm_examples() {
        assert!((operator_norm(&Matrix::identity(4)).unwrap() - 1.0).abs() < 1e-15);
        assert!((operator_norm(&Matrix::diagonal(&[3.0, 1.0])).unwrap() - 3.0).abs() < 1e-15);
        let f = [1.0, -2.0, 2.0];
        let g = [0.5, 0.5];
        let outer = Matrix::from_fn(2, 3, |i, j| g[i] * f[j]);
        let want = norm(&f) * norm(&g);
        assert!((operator_norm(&outer).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn null_space_examples() {
        let ns = null_space_basis(&path3(), 1e-10).unwrap();
        assert_eq!(ns.cols(), 1);
        for i in 0..3 {
            assert!((ns[(i, 0)] - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
        assert_eq!(null_space_basis(&Matrix::identity(3), 1e-10).unwrap().cols(), 0);

        let k4 = Matrix::from_fn(4, 4, |i, j| if i == j { 3.0 } else { -1.0 });
        let ns = null_space_basis(&k4, 1e-10).unwrap();
        assert_eq!(ns.cols(), 1);
        for i in 0..4 {
            assert!((ns[(i, 0)] - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn null_space_of_zero_is_everything() {
        assert_eq!(null_space_basis(&Matrix::zeros(3, 3), 1e-10).unwrap().cols(), 3);
    }

    #[test]
    fn power_mean_examples() {
        use PowerMeanRelation::*;
        assert_eq!(power_mean_check(&[2.0, 2.0, 2.0], &[1.0, 5.0, 0.3], 3.0).unwrap(), Equal);
        // 8.5 vs 6.25
        assert_eq!(power_mean_check(&[1.0, 4.0], &[1.0, 1.0], 2.0).unwrap(), GreaterEq);
        // 1.5 vs sqrt(2.5)
        assert_eq!(power_mean_check(&[1.0, 4.0], &[1.0, 1.0], 0.5).unwrap(), LessEq);
        assert_eq!(power_mean_check(&[1.0, 4.0], &[1.0, 1.0], 1.0).unwrap(), GreaterEq);
    }

    #[test]
    fn power_mean_rejects_nonpositive() {
        assert!(power_mean_check(&[1.0, 0.0], &[1.0, 1.0], 2.0).is_err());
        assert!(power_mean_check(&[1.0, 2.0], &[1.0, -1.0], 2.0).is_err());
        assert!(power_mean_check(&[1.0], &[1.0, 1.0], 2.0).is_err());
    }

    #[test]
    fn rank_of_laplacian() {
        assert_eq!(psd_rank(&path3(), 1e-10).unwrap(), 2);
        assert_eq!(psd_rank(&Matrix::zeros(2, 2), 1e-10).unwrap(), 0);
    }
}
