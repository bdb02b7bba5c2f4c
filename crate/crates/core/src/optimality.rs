//! Optimality classes of dual pairs under erasures, the dual family of a
//! corank-one frame, and a sampling search over that family.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::erasure::{
    bounds, opnorm_measure, spectral_measure, two_erasure_is_complex, Combinations, ErasureReport,
    MeasureParams,
};
use crate::error::{Error, Result};
use crate::frame::{DualPair, Frame, DEFAULT_DUAL_TOL, DEFAULT_FRAME_TOL};
use crate::linalg::{norm, null_space_basis, sym_eig, Matrix, DEFAULT_EIG_TOL};
use crate::report::{sig15, sig15_opt, sig15_vec};

/// Default tolerance for uniformity tests.
pub const DEFAULT_UNIFORM_TOL: f64 = 1e-8;

/// Default tolerance for "measure equals optimal value" decisions.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

/// Relative eigenvalue threshold for null spaces and independence tests.
pub const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct UniformityVerdict {
    /// Every `⟨fᵢ, gᵢ⟩` equals `n/N`.
    pub one_uniform: bool,
    /// One-uniform, and every `αᵢⱼαⱼᵢ` (`i ≠ j`) equals the same constant.
    pub two_uniform: bool,
    /// Mean of the diagonal `αᵢᵢ` (always `n/N` for a dual pair).
    pub diagonal_value: f64,
    /// Mean off-diagonal product, when `N ≥ 2`.
    pub offdiag_product: Option<f64>,
}

/// The constant `(nN − n²) / (N²(N − 1))` that the off-diagonal products
/// of a 2-uniform pair must take. It follows from the cross-Gramian being
/// idempotent with trace `n`.
pub fn two_uniform_constant(count: usize, dim: usize) -> f64 {
    let (big, n) = (count as f64, dim as f64);
    (n * big - n * n) / (big * big * (big - 1.0))
}

pub fn uniformity(pair: &DualPair, tol: f64) -> UniformityVerdict {
    let (count, dim) = (pair.count(), pair.dim());
    let target = dim as f64 / count as f64;
    let diag: Vec<f64> = (0..count).map(|i| pair.alpha(i, i)).collect();
    let one_uniform = diag.iter().all(|d| (d - target).abs() <= tol);
    let diagonal_value = diag.iter().sum::<f64>() / count as f64;

    if count < 2 {
        return UniformityVerdict {
            one_uniform,
            two_uniform: one_uniform,
            diagonal_value,
            offdiag_product: None,
        };
    }
    let products: Vec<f64> = (0..count)
        .flat_map(|i| (0..count).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| pair.alpha(i, j) * pair.alpha(j, i))
        .collect();
    let mean = products.iter().sum::<f64>() / products.len() as f64;
    let constant = products.iter().all(|x| (x - mean).abs() <= tol);
    let forced = two_uniform_constant(count, dim);
    UniformityVerdict {
        one_uniform,
        two_uniform: one_uniform && constant && (mean - forced).abs() <= tol,
        diagonal_value,
        offdiag_product: Some(mean),
    }
}

/// Optimality-class membership of a dual pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OptimalityFlags {
    pub one_uniform: bool,
    pub two_uniform: bool,
    /// `E₁ᵖ = n/N`: optimal for single erasures under the spectral radius.
    pub e1_optimal: bool,
    /// `O₁ᵖ = n/N`: optimal for single erasures under the operator norm.
    pub o1_optimal: bool,
    /// `E₁ᵖ`-optimal and `E₂ᵖ` equals the lower bound for the two-erasure
    /// optimum, which is then the optimum itself.
    pub e2_attains_bound: bool,
    /// Some two-erasure error operator has a complex eigenvalue pair, so its
    /// radius is a modulus rather than a real root.
    pub complex_eigenpair: bool,
}

/// Computes `E₁ᵖ`, `E₂ᵖ`, `O₁ᵖ`, the bounds and the class flags.
pub fn analyze(pair: &DualPair, params: MeasureParams, tol: f64) -> Result<ErasureReport> {
    let (count, dim) = (pair.count(), pair.dim());
    let b = bounds(count, dim)?;
    let e1 = spectral_measure(pair, 1, params)?;
    let e2 = spectral_measure(pair, 2, params)?;
    let o1 = opnorm_measure(pair, params);
    let verdict = uniformity(pair, tol);
    let e1_optimal = (e1 - b.delta1).abs() <= tol;
    let flags = OptimalityFlags {
        one_uniform: verdict.one_uniform,
        two_uniform: verdict.two_uniform,
        e1_optimal,
        o1_optimal: (o1 - b.delta1).abs() <= tol,
        e2_attains_bound: e1_optimal && (e2 - b.delta2_lower).abs() <= tol,
        complex_eigenpair: Combinations::new(count, 2).any(|ij| two_erasure_is_complex(pair, ij[0], ij[1])),
    };
    Ok(ErasureReport {
        count,
        dim,
        p: params.p(),
        e1,
        e2,
        o1,
        delta1: b.delta1,
        delta2_lower: b.delta2_lower,
        flags,
    })
}

/// Class flags only; see [`analyze`].
pub fn classify(pair: &DualPair, params: MeasureParams, tol: f64) -> Result<OptimalityFlags> {
    Ok(analyze(pair, params, tol)?.flags)
}

/// All duals of a frame of `N` vectors in `ℝ^{N−1}`: `gᵢ = S_F^{-1}fᵢ + cᵢh`
/// for `h ∈ ℝ^{N−1}`, where `Σ cᵢfᵢ = 0` spans the linear relations among
/// the frame vectors.
#[derive(Debug, Clone)]
pub struct DualFamily {
    frame: Frame,
    base: Frame,
    kernel_coeffs: Vec<f64>,
    pivot: usize,
}

impl DualFamily {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// The canonical dual (`h = 0`).
    pub fn base(&self) -> &Frame {
        &self.base
    }

    /// Relation coefficients, scaled so that `c[pivot] = 1`.
    pub fn kernel_coeffs(&self) -> &[f64] {
        &self.kernel_coeffs
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn parameter_dim(&self) -> usize {
        self.frame.dim()
    }

    fn dual_synthesis(&self, h: &[f64]) -> Matrix {
        let c = &self.kernel_coeffs;
        let base = self.base.synthesis();
        Matrix::from_fn(base.rows(), base.cols(), |r, i| base[(r, i)] + c[i] * h[r])
    }

    /// The dual pair for parameter `h`.
    pub fn dual_from_parameter(&self, h: &[f64]) -> Result<DualPair> {
        if h.len() != self.parameter_dim() {
            return Err(Error::DimensionMismatch(format!(
                "parameter has length {}, family needs {}",
                h.len(),
                self.parameter_dim()
            )));
        }
        let g = Frame::new(self.dual_synthesis(h), DEFAULT_FRAME_TOL)?;
        DualPair::verify(self.frame.clone(), g, DEFAULT_DUAL_TOL)
    }

    /// Least-squares `h` with `gᵢ ≈ baseᵢ + cᵢh`, and the Frobenius residual
    /// of that fit.
    pub fn parameter_of(&self, dual: &Frame) -> Result<(Vec<f64>, f64)> {
        if dual.dim() != self.frame.dim() || dual.count() != self.frame.count() {
            return Err(Error::DimensionMismatch("dual shape differs from the family's frame".into()));
        }
        let c = &self.kernel_coeffs;
        let c2: f64 = c.iter().map(|x| x * x).sum();
        let diff = dual.synthesis() - self.base.synthesis();
        let h: Vec<f64> = (0..diff.rows())
            .map(|r| (0..diff.cols()).map(|i| c[i] * diff[(r, i)]).sum::<f64>() / c2)
            .collect();
        let residual = (dual.synthesis() - &self.dual_synthesis(&h)).frobenius_norm();
        Ok((h, residual))
    }
}

/// Parametrises the duals of a frame whose Gramian has a one-dimensional
/// null space (for graph frames: any connected graph).
pub fn dual_family(frame: &Frame, tol: f64) -> Result<DualFamily> {
    let kernel = corank1_kernel(frame, tol)?;
    let base = frame.canonical_dual()?.dual().clone();
    let pivot = kernel.1;
    Ok(DualFamily {
        frame: frame.clone(),
        base,
        kernel_coeffs: kernel.0,
        pivot,
    })
}

fn corank1_kernel(frame: &Frame, tol: f64) -> Result<(Vec<f64>, usize)> {
    let nullity = frame.count() - frame.dim();
    if nullity != 1 {
        return Err(Error::NotCorank1 { nullity });
    }
    let basis = null_space_basis(&frame.gramian(), tol)?;
    if basis.cols() != 1 {
        return Err(Error::NotCorank1 { nullity: basis.cols() });
    }
    let c = basis.column(0);
    let scale = c.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let pivot = c
        .iter()
        .position(|x| x.abs() > 1e-8 * scale)
        .expect("unit null vector has a nonzero entry");
    let c: Vec<f64> = c.iter().map(|x| x / c[pivot]).collect();

    let relation = frame.synthesize(&c);
    let size: f64 = c.iter().zip(frame.norms()).map(|(ci, ni)| ci.abs() * ni).sum();
    debug_assert!(norm(&relation) <= 1e-8 * size.max(1.0), "Σ cᵢfᵢ = {relation:?}");
    Ok((c, pivot))
}

/// Checks that every `N − 1` of the `N` vectors are linearly independent.
pub fn check_independence(frame: &Frame) -> Result<()> {
    let (dim, count) = (frame.dim(), frame.count());
    for skip in 0..count {
        let keep: Vec<usize> = (0..count).filter(|&i| i != skip).collect();
        if keep.len() < dim {
            return Err(Error::NotIndependent { subset: keep });
        }
        let sub = frame.synthesis().select_columns(&keep);
        let eig = sym_eig(&sub.outer_gram(), DEFAULT_EIG_TOL)?;
        if !(eig.min_value() > RANK_TOL * eig.max_value()) {
            return Err(Error::NotIndependent { subset: keep });
        }
    }
    Ok(())
}

/// `E₁ᵖ` of a corank-one frame and its canonical dual from the relation
/// coefficients alone: `((1/N) Σ (1 − cᵢ²/Σⱼcⱼ²)ᵖ)^{1/p}`.
pub fn closed_form_e1_canonical(frame: &Frame, params: MeasureParams) -> Result<f64> {
    let (c, _) = corank1_kernel(frame, RANK_TOL)?;
    check_independence(frame)?;
    let total: f64 = c.iter().map(|x| x * x).sum();
    Ok(params.average(c.iter().map(|ci| 1.0 - ci * ci / total)))
}

/// Grid and sampling settings for [`search_optimal_dual`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    /// Half-width of the grid cube and radius of the sampling ball.
    pub radius: f64,
    /// Grid points per axis; must be odd so that `h = 0` lies on the grid.
    pub steps_per_axis: usize,
    pub random_samples: usize,
    pub seed: u64,
    /// Full grids are evaluated only up to this parameter dimension;
    /// beyond it the search is random sampling only.
    pub max_grid_dim: usize,
    pub record_trace: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            radius: 1.0,
            steps_per_axis: 11,
            random_samples: 1000,
            seed: 0,
            max_grid_dim: 4,
            record_trace: false,
        }
    }
}

/// Points closer to the origin than this are treated as `h = 0`.
const ZERO_PARAMETER: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    #[serde(rename = "N")]
    pub count: usize,
    #[serde(rename = "n")]
    pub dim: usize,
    #[serde(serialize_with = "sig15")]
    pub p: f64,
    pub seed: u64,
    #[serde(serialize_with = "sig15")]
    pub radius: f64,
    pub steps_per_axis: usize,
    pub grid_points: usize,
    pub random_samples: usize,
    #[serde(serialize_with = "sig15_vec")]
    pub best_h: Vec<f64>,
    #[serde(serialize_with = "sig15")]
    pub best_value: f64,
    #[serde(serialize_with = "sig15")]
    pub zero_value: f64,
    /// Smallest `E₁ᵖ(h) − E₁ᵖ(0)` over sampled `‖h‖ > 1e-6`.
    #[serde(serialize_with = "sig15_opt")]
    pub min_gap: Option<f64>,
    /// The minimum sits at `h = 0` and every sampled `h ≠ 0` scores strictly
    /// worse. Evidence at sampling resolution, not a proof.
    pub attained_at_zero: bool,
    #[serde(skip)]
    pub trace: Vec<(Vec<f64>, f64)>,
}

impl SearchResult {
    /// Trace CSV with columns `h_1..h_n,value`.
    pub fn trace_csv(&self) -> String {
        let mut out: Vec<String> = (1..=self.dim).map(|i| format!("h_{i}")).collect();
        out.push("value".into());
        let mut text = out.join(",");
        text.push('\n');
        for (h, v) in &self.trace {
            let mut row: Vec<String> = h.iter().map(|x| format!("{x:?}")).collect();
            row.push(format!("{v:?}"));
            text.push_str(&row.join(","));
            text.push('\n');
        }
        text
    }
}

/// Minimises `E₁ᵖ` over the dual family of `frame` by evaluating a full
/// grid on `[−radius, radius]^d` (when `d ≤ max_grid_dim`) plus
/// `random_samples` seeded points uniform in the ball of the same radius.
/// Among equal values the smallest `‖h‖` wins.
pub fn search_optimal_dual(frame: &Frame, params: MeasureParams, config: &SearchConfig) -> Result<SearchResult> {
    if !(config.radius > 0.0) || !config.radius.is_finite() {
        return Err(Error::InvalidGrid(format!("radius must be positive, got {}", config.radius)));
    }
    if config.steps_per_axis.is_multiple_of(2) {
        return Err(Error::InvalidGrid(format!(
            "steps per axis must be odd so that h = 0 is a grid point, got {}",
            config.steps_per_axis
        )));
    }
    let family = dual_family(frame, RANK_TOL)?;
    let dim = family.parameter_dim();
    let evaluate = |h: &[f64]| -> Result<f64> { spectral_measure(&family.dual_from_parameter(h)?, 1, params) };

    let zero = vec![0.0; dim];
    let zero_value = evaluate(&zero)?;
    let mut state = SearchState {
        best_h: zero.clone(),
        best_value: zero_value,
        best_norm: 0.0,
        zero_value,
        min_gap: None,
        trace: Vec::new(),
        record: config.record_trace,
    };
    if config.record_trace {
        state.trace.push((zero, zero_value));
    }

    let mut grid_points = 0;
    if dim <= config.max_grid_dim {
        let half = (config.steps_per_axis / 2) as i64;
        let mut idx = vec![-half; dim];
        loop {
            if idx.iter().any(|&t| t != 0) {
                let h: Vec<f64> = idx.iter().map(|&t| config.radius * t as f64 / half as f64).collect();
                let value = evaluate(&h)?;
                state.offer(h, value);
            }
            grid_points += 1;
            // odometer increment
            let mut axis = 0;
            while axis < dim && idx[axis] == half {
                idx[axis] = -half;
                axis += 1;
            }
            if axis == dim {
                break;
            }
            idx[axis] += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_samples {
        let h = sample_ball(&mut rng, dim, config.radius);
        let value = evaluate(&h)?;
        state.offer(h, value);
    }

    let attained_at_zero =
        (state.best_value - zero_value).abs() <= 1e-9 && state.min_gap.is_none_or(|g| g > 0.0);
    Ok(SearchResult {
        count: frame.count(),
        dim,
        p: params.p(),
        seed: config.seed,
        radius: config.radius,
        steps_per_axis: config.steps_per_axis,
        grid_points,
        random_samples: config.random_samples,
        best_h: state.best_h,
        best_value: state.best_value,
        zero_value,
        min_gap: state.min_gap,
        attained_at_zero,
        trace: state.trace,
    })
}

struct SearchState {
    best_h: Vec<f64>,
    best_value: f64,
    best_norm: f64,
    zero_value: f64,
    min_gap: Option<f64>,
    trace: Vec<(Vec<f64>, f64)>,
    record: bool,
}

impl SearchState {
    fn offer(&mut self, h: Vec<f64>, value: f64) {
        let h_norm = norm(&h);
        if h_norm > ZERO_PARAMETER {
            let gap = value - self.zero_value;
            self.min_gap = Some(self.min_gap.map_or(gap, |g| g.min(gap)));
        }
        let better = value < self.best_value || (value == self.best_value && h_norm < self.best_norm);
        if better {
            self.best_value = value;
            self.best_norm = h_norm;
            self.best_h = h.clone();
        }
        if self.record {
            self.trace.push((h, value));
        }
    }
}

/// Uniform sample from the closed ball of radius `r` in `ℝ^d`.
fn sample_ball(rng: &mut ChaCha8Rng, d: usize, r: f64) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let len = norm(&v);
        if len > 0.0 {
            let u: f64 = rng.random();
            let scale = r * u.powf(1.0 / d as f64) / len;
            return v.into_iter().map(|x| x * scale).collect();
        }
    }
}
