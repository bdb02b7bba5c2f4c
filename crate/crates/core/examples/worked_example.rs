//! The three-vector frame in the plane built from the path on three
//! vertices: canonical dual, cross-Gramian, and the optimality verdicts.
//!
//! Run with `cargo run --example worked_example`.

use graph_frames::erasure::MeasureParams;
use graph_frames::frame::{Frame, DEFAULT_FRAME_TOL};
use graph_frames::optimality::{analyze, uniformity, DEFAULT_CLASSIFY_TOL, DEFAULT_UNIFORM_TOL};
use graph_frames::{Graph, Result};

fn main() -> Result<()> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let r2 = 2f64.sqrt();

    // Two sign choices for the middle vector. Only the second has the path
    // Laplacian as its Gramian; the first gives the signless Laplacian D + A.
    for (label, middle) in [("f2 = (0, +sqrt 2)", r2), ("f2 = (0, -sqrt 2)", -r2)] {
        let frame = Frame::from_vectors(&[[s, s], [0.0, middle], [-s, s]], DEFAULT_FRAME_TOL)?;
        println!("== {label}");
        println!("Gramian:\n{:?}", frame.gramian());
        let l = Graph::path(3)?.laplacian();
        println!("max |Gramian - L| = {:.3e}", (&frame.gramian() - &l).max_abs());

        let pair = frame.canonical_dual()?;
        for (i, g) in pair.dual().vectors().iter().enumerate() {
            println!("S^-1 f{} = ({:+.6}, {:+.6})", i + 1, g[0], g[1]);
        }
        println!("cross-Gramian:\n{:?}", pair.cross_gramian());
        println!("norm products ||f_i|| ||g_i||: {:?}", pair.norm_products());

        let verdict = uniformity(&pair, DEFAULT_UNIFORM_TOL);
        println!(
            "1-uniform: {}, 2-uniform: {}, off-diagonal product: {:?}",
            verdict.one_uniform, verdict.two_uniform, verdict.offdiag_product
        );
        let report = analyze(&pair, MeasureParams::new(2.0)?, DEFAULT_CLASSIFY_TOL)?;
        println!(
            "E1 = {:.12}, E2 = {:.12}, O1 = {:.12}  (n/N = {:.12}, two-erasure bound = {:.12})",
            report.e1, report.e2, report.o1, report.delta1, report.delta2_lower
        );
        println!(
            "optimal for one erasure: {}, two-erasure bound attained: {}, operator-norm optimal: {}\n",
            report.flags.e1_optimal, report.flags.e2_attains_bound, report.flags.o1_optimal
        );
    }
    Ok(())
}
