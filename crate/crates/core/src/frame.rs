//! Finite frames in ℝⁿ, their operators and dual frames.
//!
//! A frame of `N` vectors in ℝⁿ is held as its `n × N` synthesis matrix
//! whose column `i` is `fᵢ`. The analysis operator is the transpose.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, ZERO_EIGEN_TOL};
use crate::linalg::{dot, norm, sym_eig, Matrix, DEFAULT_EIG_TOL};

/// Default relative tolerance for the spanning test in [`Frame::new`].
pub const DEFAULT_FRAME_TOL: f64 = 1e-10;

/// Default Frobenius tolerance for `‖Θ_G*Θ_F − I‖`.
pub const DEFAULT_DUAL_TOL: f64 = 1e-8;

/// Default tolerance for unitary-equivalence checks.
pub const DEFAULT_UNITARY_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct Frame {
    synthesis: Matrix,
    lower_bound: f64,
    upper_bound: f64,
}

impl Frame {
    /// Wraps an `n × N` synthesis matrix after checking that its columns
    /// span ℝⁿ, caching the optimal frame bounds.
    pub fn new(synthesis: Matrix, tol: f64) -> Result<Self> {
        let (n, count) = synthesis.shape();
        if n == 0 || count < n {
            return Err(Error::DimensionMismatch(format!(
                "a frame for R^{n} needs at least {n} vectors, got {count}"
            )));
        }
        let eig = sym_eig(&synthesis.outer_gram(), DEFAULT_EIG_TOL)?;
        let (lower, upper) = (eig.min_value(), eig.max_value());
        if !(upper > 0.0) || lower <= tol * upper {
            return Err(Error::NotAFrame { lower, upper });
        }
        Ok(Frame {
            synthesis,
            lower_bound: lower,
            upper_bound: upper,
        })
    }

    /// Builds a frame from a list of vectors `f₁, …, f_N`.
    pub fn from_vectors<V: AsRef<[f64]>>(vectors: &[V], tol: f64) -> Result<Self> {
        Frame::new(Matrix::from_columns(vectors)?, tol)
    }

    /// The frame generated by a graph: with `𝓛 = M diag(λ₁…λ_n, 0…0) Mᵀ`,
    /// the synthesis matrix is `diag(√λ₁…√λ_n) M₁ᵀ` where `M₁` holds the
    /// eigenvectors of the nonzero eigenvalues. Its Gramian is `𝓛`.
    pub fn from_graph(graph: &Graph) -> Result<Self> {
        if graph.edge_count() == 0 {
            return Err(Error::RankZero);
        }
        let spectrum = graph.spectrum()?;
        let rank = spectrum.rank();
        let eig = &spectrum.eigen;
        let synthesis = Matrix::from_fn(rank, graph.vertex_count(), |k, i| {
            eig.values[k].sqrt() * eig.vectors[(i, k)]
        });
        Frame::new(synthesis, ZERO_EIGEN_TOL)
    }

    pub fn dim(&self) -> usize {
        self.synthesis.rows()
    }

    pub fn count(&self) -> usize {
        self.synthesis.cols()
    }

    pub fn synthesis(&self) -> &Matrix {
        &self.synthesis
    }

    pub fn analysis(&self) -> Matrix {
        self.synthesis.transpose()
    }

    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.synthesis.column(i)
    }

    pub fn vectors(&self) -> Vec<Vec<f64>> {
        (0..self.count()).map(|i| self.vector(i)).collect()
    }

    pub fn norms(&self) -> Vec<f64> {
        (0..self.count()).map(|i| norm(&self.vector(i))).collect()
    }

    /// Optimal frame bounds `(A, B)`: extreme eigenvalues of `S_F`.
    pub fn bounds(&self) -> (f64, f64) {
        (self.lower_bound, self.upper_bound)
    }

    /// `S_F = Θ_F*Θ_F`, an `n × n` positive definite matrix.
    pub fn frame_operator(&self) -> Matrix {
        self.synthesis.outer_gram()
    }

    /// `𝒢 = Θ_FΘ_F*`, the `N × N` matrix of inner products `⟨f_j, f_i⟩`.
    pub fn gramian(&self) -> Matrix {
        self.synthesis.gram()
    }

    /// `Θ_F x = (⟨x, fᵢ⟩)ᵢ`.
    pub fn analyze(&self, x: &[f64]) -> Vec<f64> {
        self.synthesis.transpose().mul_vec(x)
    }

    /// `Θ_F* c = Σ cᵢ fᵢ`.
    pub fn synthesize(&self, coefficients: &[f64]) -> Vec<f64> {
        self.synthesis.mul_vec(coefficients)
    }

    /// Bound `A` when the frame is tight, i.e. `(B − A) / B ≤ tol`.
    pub fn is_tight(&self, tol: f64) -> Option<f64> {
        let (a, b) = self.bounds();
        ((b - a) / b <= tol).then_some(b)
    }

    /// `S_F^{-1}`.
    pub fn inverse_frame_operator(&self) -> Result<Matrix> {
        Ok(sym_eig(&self.frame_operator(), DEFAULT_EIG_TOL)?.apply_function(|l| 1.0 / l))
    }

    /// The canonical dual `{S_F^{-1} fᵢ}` paired with this frame.
    pub fn canonical_dual(&self) -> Result<DualPair> {
        let dual = self.inverse_frame_operator()?.matmul(&self.synthesis);
        let g = Frame::new(dual, DEFAULT_FRAME_TOL)?;
        DualPair::verify(self.clone(), g, DEFAULT_DUAL_TOL)
    }

    /// `S_F^{-1/2} F`, a Parseval frame.
    pub fn parseval_normalize(&self) -> Result<Frame> {
        let root = sym_eig(&self.frame_operator(), DEFAULT_EIG_TOL)?.apply_function(|l| 1.0 / l.sqrt());
        Frame::new(root.matmul(&self.synthesis), DEFAULT_FRAME_TOL)
    }

    /// Image of the frame under a linear map `U` (typically orthogonal).
    pub fn transform(&self, u: &Matrix) -> Result<Frame> {
        if u.cols() != self.dim() || u.rows() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "transform must be {0}x{0}, got {1}x{2}",
                self.dim(),
                u.rows(),
                u.cols()
            )));
        }
        Frame::new(u.matmul(&self.synthesis), DEFAULT_FRAME_TOL)
    }

    /// Orthogonal `U` with `U fᵢ = f2ᵢ` for all `i`, recovered as
    /// `F₂ F₁ᵀ S_{F₁}^{-1}` once the two Gramians agree.
    pub fn find_unitary_intertwiner(&self, other: &Frame, tol: f64) -> Result<Matrix> {
        if self.dim() != other.dim() || self.count() != other.count() {
            return Err(Error::NotEquivalent(format!(
                "shapes differ: {}x{} vs {}x{}",
                self.dim(),
                self.count(),
                other.dim(),
                other.count()
            )));
        }
        let gram_gap = (&self.gramian() - &other.gramian()).frobenius_norm();
        if gram_gap > tol {
            return Err(Error::NotEquivalent(format!(
                "Gramians differ by {gram_gap:.3e} in Frobenius norm"
            )));
        }
        let u = other
            .synthesis
            .matmul(&self.synthesis.transpose())
            .matmul(&self.inverse_frame_operator()?);
        let orth_gap = (&u.gram() - &Matrix::identity(self.dim())).frobenius_norm();
        if orth_gap > tol {
            return Err(Error::NotEquivalent(format!("UᵀU deviates from I by {orth_gap:.3e}")));
        }
        let map_gap = (&u.matmul(&self.synthesis) - &other.synthesis).frobenius_norm();
        if map_gap > tol {
            return Err(Error::NotEquivalent(format!("U F₁ deviates from F₂ by {map_gap:.3e}")));
        }
        Ok(u)
    }

    /// Parses frame CSV: one row per vector, `n` comma-separated numbers,
    /// `#` comment lines and blank lines ignored.
    pub fn from_csv(text: &str, tol: f64) -> Result<Frame> {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let row = trimmed
                .split(',')
                .map(|field| {
                    let field = field.trim();
                    field
                        .parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| Error::Parse {
                            line,
                            message: format!("invalid number {field:?}"),
                        })
                })
                .collect::<Result<Vec<f64>>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected {} columns, found {}", first.len(), row.len()),
                    });
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "no frame vectors".into(),
            });
        }
        Frame::from_vectors(&rows, tol)
    }

    /// Frame CSV with shortest round-trip decimal rendering.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.count() {
            let row: Vec<String> = self.vector(i).iter().map(|x| format!("{x:?}")).collect();
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        out
    }
}

/// A frame `F` together with a verified dual `G` (`Θ_G*Θ_F = I`).
#[derive(Debug, Clone)]
pub struct DualPair {
    f: Frame,
    g: Frame,
    cross_gramian: Matrix,
}

impl DualPair {
    /// Accepts `(f, g)` when `‖Θ_G*Θ_F − I‖_F ≤ tol` and caches the
    /// cross-Gramian `αᵢⱼ = ⟨gᵢ, fⱼ⟩`.
    pub fn verify(f: Frame, g: Frame, tol: f64) -> Result<Self> {
        if f.dim() != g.dim() || f.count() != g.count() {
            return Err(Error::DimensionMismatch(format!(
                "frame is {}x{} but dual candidate is {}x{}",
                f.dim(),
                f.count(),
                g.dim(),
                g.count()
            )));
        }
        let residual = reconstruction_residual(&f, &g);
        if !(residual <= tol) {
            return Err(Error::NotADual { residual });
        }
        let cross_gramian = g.synthesis.transpose().matmul(&f.synthesis);
        Ok(DualPair { f, g, cross_gramian })
    }

    pub fn frame(&self) -> &Frame {
        &self.f
    }

    pub fn dual(&self) -> &Frame {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    pub fn count(&self) -> usize {
        self.f.count()
    }

    /// `N × N` matrix with entry `(i, j) = ⟨gᵢ, fⱼ⟩`.
    pub fn cross_gramian(&self) -> &Matrix {
        &self.cross_gramian
    }

    pub fn alpha(&self, i: usize, j: usize) -> f64 {
        self.cross_gramian[(i, j)]
    }

    /// `Σᵢ ⟨x, fᵢ⟩ gᵢ`.
    pub fn reconstruct(&self, x: &[f64]) -> Vec<f64> {
        self.g.synthesize(&self.f.analyze(x))
    }

    /// `(UF, UG)`.
    pub fn transform(&self, u: &Matrix) -> Result<DualPair> {
        DualPair::verify(self.f.transform(u)?, self.g.transform(u)?, DEFAULT_DUAL_TOL)
    }

    /// Products `‖fᵢ‖ ‖gᵢ‖`.
    pub fn norm_products(&self) -> Vec<f64> {
        (0..self.count())
            .map(|i| norm(&self.f.vector(i)) * norm(&self.g.vector(i)))
            .collect()
    }

    /// `Σᵢ ⟨fᵢ, gᵢ⟩`, which equals `n` for every dual pair.
    pub fn diagonal_sum(&self) -> f64 {
        (0..self.count())
            .map(|i| dot(&self.f.vector(i), &self.g.vector(i)))
            .sum()
    }
}

/// `‖Θ_G*Θ_F − I‖_F`.
pub fn reconstruction_residual(f: &Frame, g: &Frame) -> f64 {
    let product = g.synthesis.matmul(&f.synthesis.transpose());
    (&product - &Matrix::identity(f.dim())).frobenius_norm()
}
