//! Erasure measures for a random frame: the canonical dual against
//! perturbed duals, single and double erasures, and the lower bounds.
//!
//! Run with `cargo run --example erasure_measures`.

use graph_frames::erasure::{
    bounds, erasure_operator_norm, erasure_spectral_radius, opnorm_measure, spectral_measure, ErasureSet,
    MeasureParams,
};
use graph_frames::frame::{DualPair, Frame, DEFAULT_DUAL_TOL, DEFAULT_FRAME_TOL};
use graph_frames::linalg::{null_space_basis, Matrix};
use graph_frames::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (dim, count) = (3, 6);
    let synthesis = Matrix::from_fn(dim, count, |_, _| rng.random_range(-1.0..1.0));
    let frame = Frame::new(synthesis, DEFAULT_FRAME_TOL)?;
    let canonical = frame.canonical_dual()?;

    // Every dual is S^-1 F plus something that kills the analysis map: a
    // combination of null vectors of the Gramian.
    let null = null_space_basis(&frame.gramian(), 1e-10)?;
    let projector = null.matmul(&null.transpose());
    let b = bounds(count, dim)?;
    println!("N = {count}, n = {dim}: n/N = {:.6}, two-erasure bound = {:.6}\n", b.delta1, b.delta2_lower);
    println!("{:>6} {:>10} {:>10} {:>10}", "shift", "E1", "E2", "O1");
    for scale in [0.0, 0.1, 0.3, 1.0] {
        let w = Matrix::from_fn(dim, count, |_, _| scale * rng.random_range(-1.0..1.0));
        let g = Frame::new(canonical.dual().synthesis() + &w.matmul(&projector), DEFAULT_FRAME_TOL)?;
        let pair = DualPair::verify(frame.clone(), g, DEFAULT_DUAL_TOL)?;
        let params = MeasureParams::new(2.0)?;
        println!(
            "{scale:>6.2} {:>10.6} {:>10.6} {:>10.6}",
            spectral_measure(&pair, 1, params)?,
            spectral_measure(&pair, 2, params)?,
            opnorm_measure(&pair, params)
        );
    }

    println!("\nsingle patterns for the canonical pair:");
    for i in 0..count {
        let set = ErasureSet::single(i, count)?;
        println!(
            "  erase {}: spectral radius {:.6}, operator norm {:.6}",
            i + 1,
            erasure_spectral_radius(&canonical, &set)?,
            erasure_operator_norm(&canonical, &set)?
        );
    }
    Ok(())
}
