//! Error operators for erased coefficients and the averaged measures built
//! from their spectral radii and operator norms.
//!
//! Erasing the coefficients indexed by `Λ` leaves the error operator
//! `E_Λ = Θ_G* D Θ_F = Σ_{i∈Λ} ⟨·, fᵢ⟩ gᵢ`. Its nonzero spectrum coincides
//! with that of the principal submatrix `[αᵢⱼ]_{i,j∈Λ}` of the cross-Gramian,
//! which is what the spectral-radius path evaluates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::DualPair;
use crate::linalg::{operator_norm, spectral_radius, Matrix};
use crate::optimality::OptimalityFlags;
use crate::report::sig15;

/// Upper limit on the number of erasure patterns enumerated by
/// [`spectral_measure`].
pub const MAX_PATTERNS: u128 = 1_000_000;

/// Sorted set of distinct erased indices (0-based), non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasureSet {
    indices: Vec<usize>,
}

impl ErasureSet {
    pub fn new(indices: impl IntoIterator<Item = usize>, count: usize) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        if indices.is_empty() {
            return Err(Error::Domain("erasure set must be non-empty".into()));
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("repeated index in erasure set {indices:?}")));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= count) {
            return Err(Error::Domain(format!("erased index {bad} outside 0..{count}")));
        }
        Ok(ErasureSet { indices })
    }

    pub fn single(i: usize, count: usize) -> Result<Self> {
        ErasureSet::new([i], count)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The averaging exponent `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureParams {
    p: f64,
}

impl MeasureParams {
    /// Requires `p > 1`.
    pub fn new(p: f64) -> Result<Self> {
        if !(p > 1.0) || !p.is_finite() {
            return Err(Error::Domain(format!("exponent p must be finite and > 1, got {p}")));
        }
        Ok(MeasureParams { p })
    }

    /// Also admits `p = 1`. The optimality statements are only established
    /// for `p > 1`; this is for exploration.
    pub fn allowing_p1(p: f64) -> Result<Self> {
        if p == 1.0 {
            Ok(MeasureParams { p })
        } else {
            MeasureParams::new(p)
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// `((1/m) Σ xᵖ)^{1/p}` over `m` nonnegative terms.
    pub fn average(&self, terms: impl IntoIterator<Item = f64>) -> f64 {
        let (mut sum, mut m) = (0.0, 0usize);
        for x in terms {
            sum += x.powf(self.p);
            m += 1;
        }
        (sum / m as f64).powf(1.0 / self.p)
    }
}

impl Default for MeasureParams {
    fn default() -> Self {
        MeasureParams { p: 2.0 }
    }
}

/// The `k × k` matrix `[αᵢⱼ]_{i,j∈Λ}`.
pub fn error_submatrix(pair: &DualPair, erased: &ErasureSet) -> Matrix {
    pair.cross_gramian().principal_submatrix(erased.indices())
}

/// `ρ(Θ_G* D Θ_F)` for the erasure pattern `Λ`.
pub fn erasure_spectral_radius(pair: &DualPair, erased: &ErasureSet) -> Result<f64> {
    match erased.indices() {
        &[i] => Ok(pair.alpha(i, i).abs()),
        _ => spectral_radius(&error_submatrix(pair, erased)),
    }
}

/// Spectral radius of `[[a_ii, a_ij], [a_ji, a_jj]]` from the quadratic
/// formula. A negative discriminant gives a conjugate pair whose modulus is
/// returned.
pub fn two_erasure_closed_form(a_ii: f64, a_jj: f64, a_ij: f64, a_ji: f64) -> f64 {
    let d = (a_ii - a_jj).powi(2) + 4.0 * a_ij * a_ji;
    let mean = 0.5 * (a_ii + a_jj);
    if d >= 0.0 {
        let r = 0.5 * d.sqrt();
        (mean + r).abs().max((mean - r).abs())
    } else {
        (mean * mean + 0.25 * d.abs()).sqrt()
    }
}

/// `true` when the 2-erasure error operator on `{i, j}` has a complex
/// conjugate eigenvalue pair.
pub fn two_erasure_is_complex(pair: &DualPair, i: usize, j: usize) -> bool {
    let (a_ii, a_jj) = (pair.alpha(i, i), pair.alpha(j, j));
    (a_ii - a_jj).powi(2) + 4.0 * pair.alpha(i, j) * pair.alpha(j, i) < 0.0
}

/// `‖Σ_{i∈Λ} gᵢ fᵢᵀ‖`.
pub fn erasure_operator_norm(pair: &DualPair, erased: &ErasureSet) -> Result<f64> {
    let f = pair.frame().synthesis();
    let g = pair.dual().synthesis();
    let n = pair.dim();
    let e = Matrix::from_fn(n, n, |r, c| {
        erased.indices().iter().map(|&i| g[(r, i)] * f[(c, i)]).sum()
    });
    operator_norm(&e)
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Lexicographic iterator over the `k`-subsets of `0..n`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost position that can still advance
        if let Some(pos) = (0..k).rev().find(|&i| next[i] < self.n - k + i) {
            next[pos] += 1;
            for i in pos + 1..k {
                next[i] = next[i - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// `E_kᵖ(F, G)`: the p-average of `ρ(E_Λ)` over all `C(N, k)` patterns of
/// size `k`, enumerated lexicographically.
pub fn spectral_measure(pair: &DualPair, k: usize, params: MeasureParams) -> Result<f64> {
    let n = pair.count();
    if k == 0 || k > n {
        return Err(Error::Domain(format!("erasure count k must lie in 1..={n}, got {k}")));
    }
    let patterns = binomial(n, k);
    if patterns > MAX_PATTERNS {
        return Err(Error::CombinatorialLimit {
            count: patterns,
            cap: MAX_PATTERNS,
        });
    }
    let radii = Combinations::new(n, k)
        .map(|subset| erasure_spectral_radius(pair, &ErasureSet { indices: subset }))
        .collect::<Result<Vec<f64>>>()?;
    Ok(params.average(radii))
}

/// Closed form of `E₂ᵖ` valid for 1-uniform pairs: the average of
/// `|n/N + √(αᵢⱼαⱼᵢ)|ᵖ` over `i < j`, with the square root of a negative
/// product taken as imaginary (so the term is `√((n/N)² + |αᵢⱼαⱼᵢ|)`).
pub fn uniform_two_erasure_measure(pair: &DualPair, params: MeasureParams) -> Result<f64> {
    let count = pair.count();
    if count < 2 {
        return Err(Error::Domain("two erasures need at least two frame vectors".into()));
    }
    let base = pair.dim() as f64 / count as f64;
    let terms = Combinations::new(count, 2).map(|ij| {
        let prod = pair.alpha(ij[0], ij[1]) * pair.alpha(ij[1], ij[0]);
        if prod >= 0.0 {
            (base + prod.sqrt()).abs()
        } else {
            (base * base - prod).sqrt()
        }
    });
    Ok(params.average(terms))
}

/// `O₁ᵖ(F, G) = ((1/N) Σ ‖fᵢ‖ᵖ‖gᵢ‖ᵖ)^{1/p}`.
pub fn opnorm_measure(pair: &DualPair, params: MeasureParams) -> f64 {
    params.average(pair.norm_products())
}

/// Optimal single-erasure value `n/N` and the lower bound for the optimal
/// two-erasure value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub delta1: f64,
    pub delta2_lower: f64,
}

/// `δ₁ = n/N` and `δ₂ ≥ n/N + √((nN − n²)/(N²(N − 1)))`.
pub fn bounds(count: usize, dim: usize) -> Result<Bounds> {
    if dim == 0 || dim > count || count < 2 {
        return Err(Error::Domain(format!(
            "bounds need 1 <= n <= N and N >= 2, got N = {count}, n = {dim}"
        )));
    }
    let (big, n) = (count as f64, dim as f64);
    let delta1 = n / big;
    let delta2_lower = delta1 + ((n * big - n * n) / (big * big * (big - 1.0))).sqrt();
    Ok(Bounds { delta1, delta2_lower })
}

/// `r (a + √(c/r))ᵖ`: the value of `Σᵢ |a + √αᵢ|ᵖ` at the balanced split
/// `αᵢ = c/r` of the budget `Σ αᵢ = c`.
///
/// This is not the minimum over the constraint set. `(a + √α)ᵖ` is concave
/// near `α = 0`, so putting the whole budget in one coordinate can score
/// lower (`a = 2/3, c = 1/3, r = 3, p = 2`: 2.436 against 3).
pub fn lemma35_min(a: f64, c: f64, r: usize, p: f64) -> Result<f64> {
    if !(a > 0.0) || !(c >= 0.0) || r == 0 || !(p > 1.0) || !(a + c + p).is_finite() {
        return Err(Error::Domain(format!(
            "need a > 0, c >= 0, r >= 1, p > 1; got a = {a}, c = {c}, r = {r}, p = {p}"
        )));
    }
    let r_f = r as f64;
    Ok(r_f * (a + (c / r_f).sqrt()).powf(p))
}

/// Measures and optimality flags for one dual pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErasureReport {
    #[serde(rename = "N")]
    pub count: usize,
    #[serde(rename = "n")]
    pub dim: usize,
    #[serde(serialize_with = "sig15")]
    pub p: f64,
    #[serde(serialize_with = "sig15")]
    pub e1: f64,
    #[serde(serialize_with = "sig15")]
    pub e2: f64,
    #[serde(serialize_with = "sig15")]
    pub o1: f64,
    #[serde(serialize_with = "sig15")]
    pub delta1: f64,
    #[serde(serialize_with = "sig15")]
    pub delta2_lower: f64,
    pub flags: OptimalityFlags,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{Frame, DEFAULT_FRAME_TOL};
    use crate::linalg::Matrix;

    const S: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn example_pair() -> DualPair {
        Frame::from_vectors(&[[S, S], [0.0, 2f64.sqrt()], [-S, S]], DEFAULT_FRAME_TOL)
            .unwrap()
            .canonical_dual()
            .unwrap()
    }

    fn basis_pair(n: usize) -> DualPair {
        Frame::new(Matrix::identity(n), DEFAULT_FRAME_TOL)
            .unwrap()
            .canonical_dual()
            .unwrap()
    }

    #[test]
    fn erasure_set_validation() {
        assert!(ErasureSet::new([], 3).is_err());
        assert!(ErasureSet::new([1, 1], 3).is_err());
        assert!(ErasureSet::new([3], 3).is_err());
        assert_eq!(ErasureSet::new([2, 0], 3).unwrap().indices(), &[0, 2]);
    }

    #[test]
    fn params_validation() {
        assert!(MeasureParams::new(1.0).is_err());
        assert!(MeasureParams::new(0.5).is_err());
        assert!(MeasureParams::new(f64::NAN).is_err());
        assert_eq!(MeasureParams::allowing_p1(1.0).unwrap().p(), 1.0);
        assert!(MeasureParams::allowing_p1(0.9).is_err());
        assert_eq!(MeasureParams::default().p(), 2.0);
    }

    #[test]
    fn submatrices() {
        let pair = example_pair();
        let s = error_submatrix(&pair, &ErasureSet::single(1, 3).unwrap());
        assert_eq!(s.shape(), (1, 1));
        assert!((s[(0, 0)] - 2.0 / 3.0).abs() < 1e-14);

        let s = error_submatrix(&pair, &ErasureSet::new([0, 1], 3).unwrap());
        let want = Matrix::from_rows(&[[2.0 / 3.0, 1.0 / 3.0], [1.0 / 3.0, 2.0 / 3.0]]).unwrap();
        assert!((&s - &want).frobenius_norm() < 1e-14);

        let all = error_submatrix(&pair, &ErasureSet::new(0..3, 3).unwrap());
        assert_eq!(&all, pair.cross_gramian());
    }

    #[test]
    fn example_spectral_radii() {
        let pair = example_pair();
        let r = erasure_spectral_radius(&pair, &ErasureSet::single(1, 3).unwrap()).unwrap();
        assert!((r - 2.0 / 3.0).abs() < 1e-14);
        let r = erasure_spectral_radius(&pair, &ErasureSet::new([0, 2], 3).unwrap()).unwrap();
        assert!((r - 1.0).abs() < 1e-14);
        let basis = basis_pair(3);
        for set in [vec![0], vec![0, 2], vec![0, 1, 2]] {
            let r = erasure_spectral_radius(&basis, &ErasureSet::new(set, 3).unwrap()).unwrap();
            assert!((r - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert!((two_erasure_closed_form(2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0) - 1.0).abs() < 1e-15);
        assert_eq!(two_erasure_closed_form(-0.7, -0.7, 0.0, 0.0), 0.7);
        assert!((two_erasure_closed_form(0.0, 0.0, 1.0, -1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn example_operator_norms() {
        let pair = example_pair();
        let want = [5f64.sqrt() / 3.0, 2.0 / 3.0, 5f64.sqrt() / 3.0];
        for (i, w) in want.iter().enumerate() {
            let v = erasure_operator_norm(&pair, &ErasureSet::single(i, 3).unwrap()).unwrap();
            assert!((v - w).abs() < 1e-13, "{i}: {v} vs {w}");
            assert!((pair.norm_products()[i] - w).abs() < 1e-14);
        }
    }

    #[test]
    fn example_measures() {
        let pair = example_pair();
        for p in [1.5, 2.0, 3.0, 7.0] {
            let params = MeasureParams::new(p).unwrap();
            assert!((spectral_measure(&pair, 1, params).unwrap() - 2.0 / 3.0).abs() < 1e-14);
            assert!((spectral_measure(&pair, 2, params).unwrap() - 1.0).abs() < 1e-13);
            assert!((uniform_two_erasure_measure(&pair, params).unwrap() - 1.0).abs() < 1e-13);
        }
        let basis = basis_pair(4);
        assert!((spectral_measure(&basis, 1, MeasureParams::default()).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn opnorm_measure_values() {
        let pair = example_pair();
        let p1 = MeasureParams::allowing_p1(1.0).unwrap();
        let want = (2.0 * 5f64.sqrt() + 2.0) / 9.0;
        assert!((opnorm_measure(&pair, p1) - want).abs() < 1e-14);
        assert!((opnorm_measure(&basis_pair(3), MeasureParams::default()) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn measure_domain_errors() {
        let pair = example_pair();
        assert!(spectral_measure(&pair, 0, MeasureParams::default()).is_err());
        assert!(spectral_measure(&pair, 4, MeasureParams::default()).is_err());
    }

    #[test]
    fn bounds_examples() {
        let b = bounds(3, 2).unwrap();
        assert!((b.delta1 - 2.0 / 3.0).abs() < 1e-15);
        assert!((b.delta2_lower - 1.0).abs() < 1e-15);
        assert_eq!(bounds(5, 5).unwrap().delta1, 1.0);
        assert_eq!(bounds(5, 5).unwrap().delta2_lower, 1.0);
        let b = bounds(4, 2).unwrap();
        assert_eq!(b.delta1, 0.5);
        assert!((b.delta2_lower - (0.5 + (4.0f64 / 48.0).sqrt())).abs() < 1e-15);
        assert!((b.delta2_lower - 0.788675134594813).abs() < 1e-12);
        assert!(bounds(3, 4).is_err());
        assert!(bounds(1, 1).is_err());
        assert!(bounds(3, 0).is_err());
    }

    #[test]
    fn lemma35_examples() {
        assert!((lemma35_min(2.0 / 3.0, 1.0 / 3.0, 3, 2.0).unwrap() - 3.0).abs() < 1e-14);
        assert!((lemma35_min(0.4, 0.0, 5, 3.0).unwrap() - 5.0 * 0.4f64.powi(3)).abs() < 1e-15);
        assert!(lemma35_min(0.0, 1.0, 2, 2.0).is_err());
        assert!(lemma35_min(1.0, -1.0, 2, 2.0).is_err());
        assert!(lemma35_min(1.0, 1.0, 0, 2.0).is_err());
        assert!(lemma35_min(1.0, 1.0, 2, 1.0).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        for n in 0..9 {
            for k in 0..=n {
                assert_eq!(Combinations::new(n, k).count() as u128, binomial(n, k));
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(40, 20), 137846528820);
        assert_eq!(binomial(3, 5), 0);
    }
}
