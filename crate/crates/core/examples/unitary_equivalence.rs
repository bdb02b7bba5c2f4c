//! Rotating a frame does not change its Gramian, its erasure measures or its
//! flags, and the rotation can be recovered from the two frames.
//!
//! Run with `cargo run --example unitary_equivalence`.

use graph_frames::erasure::MeasureParams;
use graph_frames::frame::{Frame, DEFAULT_UNITARY_TOL};
use graph_frames::linalg::Matrix;
use graph_frames::optimality::{analyze, DEFAULT_CLASSIFY_TOL};
use graph_frames::{Graph, Result};

fn rotation(theta: f64) -> Matrix {
    let (s, c) = theta.sin_cos();
    // rotation in the (x, y) plane of R^3
    Matrix::from_rows(&[[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]).unwrap()
}

fn main() -> Result<()> {
    let frame = Frame::from_graph(&Graph::path(4)?)?;
    let u = rotation(0.7);
    let rotated = frame.transform(&u)?;
    println!("|Gramian difference| = {:.2e}", (&frame.gramian() - &rotated.gramian()).max_abs());

    let found = frame.find_unitary_intertwiner(&rotated, DEFAULT_UNITARY_TOL)?;
    println!("recovered rotation error = {:.2e}", (&found - &u).max_abs());

    let params = MeasureParams::default();
    let before = analyze(&frame.canonical_dual()?, params, DEFAULT_CLASSIFY_TOL)?;
    let after = analyze(&rotated.canonical_dual()?, params, DEFAULT_CLASSIFY_TOL)?;
    println!("E1 {:.12} vs {:.12}", before.e1, after.e1);
    println!("E2 {:.12} vs {:.12}", before.e2, after.e2);
    println!("flags identical: {}", before.flags == after.flags);

    // Two non-isomorphic graphs on four vertices give inequivalent frames.
    let star = Frame::from_graph(&Graph::star(4)?)?;
    match frame.find_unitary_intertwiner(&star, DEFAULT_UNITARY_TOL) {
        Ok(_) => println!("unexpected: P4 and S4 frames are equivalent"),
        Err(err) => println!("P4 vs S4: {err}"),
    }
    Ok(())
}
