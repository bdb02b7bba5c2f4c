//! Cyclic Jacobi eigensolver for real symmetric matrices.

use super::Matrix;
use crate::error::{Error, Result};

/// Relative asymmetry `‖M − Mᵀ‖_F / ‖M‖_F` tolerated by [`sym_eig`].
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Default stopping tolerance: off-diagonal Frobenius norm relative to `‖M‖_F`.
pub const DEFAULT_EIG_TOL: f64 = 1e-14;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues sorted in descending order together with orthonormal
/// eigenvectors (column `j` of `vectors` belongs to `values[j]`).
///
/// Each eigenvector is normalised so that its largest-magnitude component is
/// positive, which makes the decomposition reproducible bit for bit.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl EigenDecomposition {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn vector(&self, j: usize) -> Vec<f64> {
        self.vectors.column(j)
    }

    pub fn max_value(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn min_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// `V · diag(f(λ)) · Vᵀ`.
    pub fn apply_function(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let n = self.values.len();
        let mapped: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v: f64 = (0..n)
                    .map(|k| self.vectors[(i, k)] * mapped[k] * self.vectors[(j, k)])
                    .sum();
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
        }
        out
    }

    /// Rebuilds `V · diag(λ) · Vᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        self.apply_function(|l| l)
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps over every off-diagonal pair until the off-diagonal Frobenius norm
/// drops below `tol · ‖M‖_F`. Already-diagonal input (including 1×1) is
/// returned without iterating.
pub fn sym_eig(m: &Matrix, tol: f64) -> Result<EigenDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "sym_eig needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("eigen tolerance must be positive, got {tol}")));
    }
    let asymmetry = m.relative_asymmetry();
    if asymmetry > SYMMETRY_TOL {
        return Err(Error::NonSymmetric { asymmetry });
    }

    let n = m.rows();
    let mut a = Matrix::from_fn(n, n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let mut v = Matrix::identity(n);

    if !a.is_diagonal() {
        let scale = a.frobenius_norm();
        let mut sweeps = 0;
        while off_diagonal_norm(&a) > tol * scale {
            if sweeps == MAX_SWEEPS {
                return Err(Error::NoConvergence {
                    algorithm: "Jacobi eigensolver",
                    iterations: sweeps,
                });
            }
            sweeps += 1;
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }

    Ok(sorted(a.diag(), v))
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)] * a[(i, j)];
            }
        }
    }
    acc.sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation and accumulates it into `v`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let app = a[(p, p)];
    let aqq = a[(q, q)];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.is_finite() {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    } else {
        // |theta| overflowed: the rotation is the identity to working precision
        1.0 / (2.0 * theta)
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);
    let n = a.rows();

    a[(p, p)] = app - t * apq;
    a[(q, q)] = aqq + t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        let new_rp = arp - s * (arq + tau * arp);
        let new_rq = arq + s * (arp - tau * arq);
        a[(r, p)] = new_rp;
        a[(p, r)] = new_rp;
        a[(r, q)] = new_rq;
        a[(q, r)] = new_rq;
    }
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp - s * (vrq + tau * vrp);
        v[(r, q)] = vrq + s * (vrp - tau * vrq);
    }
}

fn sorted(values: Vec<f64>, v: Matrix) -> EigenDecomposition {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));

    let mut vectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut pivot = 0;
        for r in 1..n {
            if v[(r, src)].abs() > v[(pivot, src)].abs() {
                pivot = r;
            }
        }
        let sign = if v[(pivot, src)] < 0.0 { -1.0 } else { 1.0 };
        for r in 0..n {
            vectors[(r, dst)] = sign * v[(r, src)];
        }
    }
    EigenDecomposition {
        values: order.iter().map(|&i| values[i]).collect(),
        vectors,
    }
}
