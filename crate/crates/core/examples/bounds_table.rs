//! Optimal single-erasure values and the two-erasure lower bound for small
//! frame shapes.
//!
//! Run with `cargo run --example bounds_table`.

use graph_frames::erasure::bounds;
use graph_frames::optimality::two_uniform_constant;
use graph_frames::Result;

fn main() -> Result<()> {
    println!("{:>3} {:>3} {:>10} {:>12} {:>14}", "N", "n", "n/N", "E2 bound", "2-uniform c");
    for count in 2..=8 {
        for dim in 1..count {
            let b = bounds(count, dim)?;
            println!(
                "{count:>3} {dim:>3} {:>10.6} {:>12.6} {:>14.8}",
                b.delta1,
                b.delta2_lower,
                two_uniform_constant(count, dim)
            );
        }
    }
    Ok(())
}
