//! The complete graph K_N gives a tight frame whose canonical pair is
//! 2-uniform and meets the two-erasure bound exactly.
//!
//! Run with `cargo run --example complete_graphs`.

use graph_frames::erasure::MeasureParams;
use graph_frames::frame::Frame;
use graph_frames::optimality::{analyze, uniformity, DEFAULT_CLASSIFY_TOL, DEFAULT_UNIFORM_TOL};
use graph_frames::report::to_json;
use graph_frames::{Graph, Result};

fn main() -> Result<()> {
    for count in 3..=8 {
        let frame = Frame::from_graph(&Graph::complete(count)?)?;
        let pair = frame.canonical_dual()?;
        let verdict = uniformity(&pair, DEFAULT_UNIFORM_TOL);
        let report = analyze(&pair, MeasureParams::new(3.0)?, DEFAULT_CLASSIFY_TOL)?;
        println!(
            "K{count}: tight bound {:?}, 2-uniform {}, E2 = {:.12}, bound = {:.12}",
            frame.is_tight(1e-9),
            verdict.two_uniform,
            report.e2,
            report.delta2_lower
        );
    }
    let pair = Frame::from_graph(&Graph::complete(4)?)?.canonical_dual()?;
    println!("\nfull report for K4:\n{}", to_json(&analyze(&pair, MeasureParams::default(), DEFAULT_CLASSIFY_TOL)?));
    Ok(())
}
