//! Searches the dual family of a connected-graph frame and confirms the
//! canonical dual is where the single-erasure measure bottoms out.
//!
//! Run with `cargo run --example dual_search`.

use graph_frames::erasure::MeasureParams;
use graph_frames::frame::Frame;
use graph_frames::optimality::{closed_form_e1_canonical, dual_family, search_optimal_dual, SearchConfig, RANK_TOL};
use graph_frames::{Graph, Result};

fn main() -> Result<()> {
    let params = MeasureParams::new(2.0)?;
    for (name, g) in [("P3", Graph::path(3)?), ("C5", Graph::cycle(5)?), ("K4", Graph::complete(4)?)] {
        let frame = Frame::from_graph(&g)?;
        let family = dual_family(&frame, RANK_TOL)?;
        println!("{name}: duals are g_i = S^-1 f_i + c_i h with c = {:?}", family.kernel_coeffs());

        // One member of the family, far from the canonical dual.
        let h = vec![0.5; family.parameter_dim()];
        let pair = family.dual_from_parameter(&h)?;
        println!("  h = {h:?} gives diagonal {:?}", (0..pair.count()).map(|i| pair.alpha(i, i)).collect::<Vec<_>>());

        let result = search_optimal_dual(&frame, params, &SearchConfig { seed: 1, ..SearchConfig::default() })?;
        println!(
            "  searched {} grid + {} random points: best {:.9} at |h| = {:.3e}, smallest gap {:.3e}, minimum at zero: {}",
            result.grid_points,
            result.random_samples,
            result.best_value,
            result.best_h.iter().map(|x| x * x).sum::<f64>().sqrt(),
            result.min_gap.unwrap_or(f64::NAN),
            result.attained_at_zero
        );
        println!("  closed form at h = 0: {:.9}\n", closed_form_e1_canonical(&frame, params)?);
    }
    Ok(())
}
