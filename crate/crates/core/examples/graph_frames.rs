//! Laplacian frames for a handful of graphs: spectrum, frame bounds,
//! tightness and vector norms.
//!
//! Run with `cargo run --example graph_frames`.

use graph_frames::frame::Frame;
use graph_frames::{Graph, Result};

fn main() -> Result<()> {
    let graphs = [
        ("path P5", Graph::path(5)?),
        ("cycle C6", Graph::cycle(6)?),
        ("star S5", Graph::star(5)?),
        ("complete K5", Graph::complete(5)?),
        ("bipartite K2,3", Graph::complete_bipartite(2, 3)?),
        ("P3 + K2", Graph::path(3)?.disjoint_union(&Graph::complete(2)?)),
    ];
    println!("{:<16} {:>2} {:>2} {:>5} {:>9} {:>9} {:>6}  spectrum", "graph", "N", "n", "comp", "A", "B", "tight");
    for (name, g) in graphs {
        let spec = g.spectrum()?;
        let frame = Frame::from_graph(&g)?;
        let (a, b) = frame.bounds();
        let values: Vec<String> = spec.values().iter().map(|v| format!("{v:.4}")).collect();
        println!(
            "{name:<16} {:>2} {:>2} {:>5} {a:>9.5} {b:>9.5} {:>6}  [{}]",
            frame.count(),
            frame.dim(),
            spec.components,
            frame.is_tight(1e-9).is_some(),
            values.join(", ")
        );
        let gram_err = (&frame.gramian() - &g.laplacian()).max_abs();
        let norms: Vec<String> = frame.norms().iter().map(|x| format!("{:.4}", x * x)).collect();
        println!("{:<16} |Gramian - L| = {gram_err:.1e}, squared norms = degrees: [{}]", "", norms.join(", "));
    }

    // Graphs are read from plain edge lists with 1-based vertices.
    let g = Graph::parse_edge_list("# a triangle with a pendant vertex\n4\n1 2\n2 3\n1 3\n3 4\n")?;
    let spec = g.spectrum()?;
    println!("\nparsed graph: degrees {:?}, algebraic connectivity {:.6}", g.degrees(), spec.algebraic_connectivity);
    println!("canonical form:\n{}", g.to_edge_list());
    Ok(())
}
