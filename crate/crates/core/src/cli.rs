//! Command implementations behind the `graph-frames` binary.
//!
//! Each command takes file contents as text and returns the text to write,
//! so the whole front end can be exercised without touching the filesystem.

use serde::Serialize;

use crate::erasure::{bounds, MeasureParams};
use crate::error::Result;
use crate::frame::{DualPair, Frame, DEFAULT_DUAL_TOL, DEFAULT_FRAME_TOL};
use crate::graph::Graph;
use crate::optimality::{
    analyze, search_optimal_dual, uniformity, OptimalityFlags, SearchConfig, DEFAULT_CLASSIFY_TOL,
    DEFAULT_UNIFORM_TOL,
};
use crate::report::{sig15, sig15_opt, sig15_vec, to_json};

/// Tolerances surfaced on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative spanning threshold when reading a frame.
    pub frame: f64,
    /// Frobenius threshold for `‖Θ_G*Θ_F − I‖`.
    pub dual: f64,
    /// Threshold for "measure equals optimum" decisions.
    pub classify: f64,
    /// Threshold for uniformity checks.
    pub uniform: f64,
    /// Relative threshold for tightness.
    pub tight: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            frame: DEFAULT_FRAME_TOL,
            dual: DEFAULT_DUAL_TOL,
            classify: DEFAULT_CLASSIFY_TOL,
            uniform: DEFAULT_UNIFORM_TOL,
            tight: 1e-9,
        }
    }
}

/// Where the dual frame comes from.
#[derive(Debug, Clone, Copy)]
pub enum DualSource<'a> {
    Canonical,
    Csv(&'a str),
}

#[derive(Debug, Clone, Serialize)]
pub struct BuildSummary {
    #[serde(rename = "N")]
    pub count: usize,
    #[serde(rename = "n")]
    pub dim: usize,
    pub edges: usize,
    pub components: usize,
    #[serde(serialize_with = "sig15_vec")]
    pub spectrum: Vec<f64>,
    #[serde(serialize_with = "sig15")]
    pub algebraic_connectivity: f64,
    pub degree_max: usize,
    pub degree_min: usize,
    pub regular: bool,
    pub tight: bool,
    #[serde(rename = "A", serialize_with = "sig15_opt")]
    pub tight_bound: Option<f64>,
    #[serde(serialize_with = "sig15_vec")]
    pub frame_bounds: Vec<f64>,
    #[serde(serialize_with = "sig15")]
    pub gramian_residual: f64,
}

#[derive(Debug, Clone)]
pub struct BuildOutput {
    pub frame_csv: String,
    pub summary: BuildSummary,
    pub summary_json: String,
}

/// Builds the Laplacian frame of an edge-list graph.
pub fn cmd_build(graph_text: &str, tol: &Tolerances) -> Result<BuildOutput> {
    let graph = Graph::parse_edge_list(graph_text)?;
    let frame = Frame::from_graph(&graph)?;
    let spectrum = graph.spectrum()?;
    let (degree_max, degree_min) = graph.degree_extremes();
    let tight_bound = frame.is_tight(tol.tight);
    let (lower, upper) = frame.bounds();
    let summary = BuildSummary {
        count: frame.count(),
        dim: frame.dim(),
        edges: graph.edge_count(),
        components: spectrum.components,
        spectrum: spectrum.values().to_vec(),
        algebraic_connectivity: spectrum.algebraic_connectivity,
        degree_max,
        degree_min,
        regular: degree_max == degree_min,
        tight: tight_bound.is_some(),
        tight_bound,
        frame_bounds: vec![lower, upper],
        gramian_residual: (&frame.gramian() - &spectrum.laplacian).frobenius_norm(),
    };
    Ok(BuildOutput {
        frame_csv: frame.to_csv(),
        summary_json: to_json(&summary),
        summary,
    })
}

fn load_pair(frame_text: &str, dual: DualSource<'_>, tol: &Tolerances) -> Result<DualPair> {
    let frame = Frame::from_csv(frame_text, tol.frame)?;
    match dual {
        DualSource::Canonical => frame.canonical_dual(),
        DualSource::Csv(text) => {
            let g = Frame::from_csv(text, tol.frame)?;
            DualPair::verify(frame, g, tol.dual)
        }
    }
}

/// Erasure report JSON for a frame and a dual.
pub fn cmd_analyze(frame_text: &str, dual: DualSource<'_>, params: MeasureParams, tol: &Tolerances) -> Result<String> {
    let pair = load_pair(frame_text, dual, tol)?;
    Ok(to_json(&analyze(&pair, params, tol.classify)?))
}

#[derive(Debug, Clone, Serialize)]
struct CheckReport {
    #[serde(rename = "N")]
    count: usize,
    #[serde(rename = "n")]
    dim: usize,
    #[serde(serialize_with = "sig15")]
    p: f64,
    #[serde(serialize_with = "sig15")]
    diagonal_value: f64,
    #[serde(serialize_with = "sig15_opt")]
    offdiag_product: Option<f64>,
    #[serde(serialize_with = "sig15_vec")]
    diagonal: Vec<f64>,
    #[serde(serialize_with = "sig15_vec")]
    norm_products: Vec<f64>,
    flags: OptimalityFlags,
}

/// Uniformity diagnostics and class flags.
pub fn cmd_check(frame_text: &str, dual: DualSource<'_>, params: MeasureParams, tol: &Tolerances) -> Result<String> {
    let pair = load_pair(frame_text, dual, tol)?;
    let mut flags = analyze(&pair, params, tol.classify)?.flags;
    let verdict = uniformity(&pair, tol.uniform);
    flags.one_uniform = verdict.one_uniform;
    flags.two_uniform = verdict.two_uniform;
    let report = CheckReport {
        count: pair.count(),
        dim: pair.dim(),
        p: params.p(),
        diagonal_value: verdict.diagonal_value,
        offdiag_product: verdict.offdiag_product,
        diagonal: pair.cross_gramian().diag(),
        norm_products: pair.norm_products(),
        flags,
    };
    Ok(to_json(&report))
}

#[derive(Debug, Clone)]
pub struct SearchOutput {
    pub json: String,
    /// Present when the config asked for a trace.
    pub trace_csv: Option<String>,
}

/// Searches the dual family of a corank-one frame for the `E₁ᵖ` minimiser.
pub fn cmd_search(frame_text: &str, params: MeasureParams, config: &SearchConfig, tol: &Tolerances) -> Result<SearchOutput> {
    let frame = Frame::from_csv(frame_text, tol.frame)?;
    let result = search_optimal_dual(&frame, params, config)?;
    Ok(SearchOutput {
        json: to_json(&result),
        trace_csv: config.record_trace.then(|| result.trace_csv()),
    })
}

#[derive(Debug, Clone, Serialize)]
struct BoundsReport {
    #[serde(rename = "N")]
    count: usize,
    #[serde(rename = "n")]
    dim: usize,
    #[serde(serialize_with = "sig15")]
    delta1: f64,
    #[serde(serialize_with = "sig15")]
    delta2_lower: f64,
}

/// The optimal single-erasure value and two-erasure lower bound.
pub fn cmd_bounds(count: usize, dim: usize) -> Result<String> {
    let b = bounds(count, dim)?;
    Ok(to_json(&BoundsReport {
        count,
        dim,
        delta1: b.delta1,
        delta2_lower: b.delta2_lower,
    }))
}

/// Canonical edge list of a graph file.
pub fn cmd_graph_dump(graph_text: &str) -> Result<String> {
    Ok(Graph::parse_edge_list(graph_text)?.to_edge_list())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn build_path() {
        let out = cmd_build("3\n1 2\n2 3\n", &Tolerances::default()).unwrap();
        let rounded: Vec<f64> = out.summary.spectrum.iter().map(|&x| crate::report::round_sig15(x)).collect();
        assert_eq!(rounded, vec![3.0, 1.0, 0.0]);
        assert_eq!(out.frame_csv.lines().count(), 3);
        assert!(out.summary_json.contains("\"spectrum\": [\n    3.0,\n    1.0,\n    0.0\n  ]"));
        assert!(!out.summary.tight);
        assert!(out.summary.gramian_residual < 1e-12);
    }

    #[test]
    fn build_edgeless_fails() {
        assert!(matches!(cmd_build("3\n", &Tolerances::default()), Err(Error::RankZero)));
    }

    #[test]
    fn bounds_json() {
        let s = cmd_bounds(3, 2).unwrap();
        assert!(s.contains("\"delta1\": 0.666666666666667"));
        assert!(s.contains("\"delta2_lower\": 1.0"));
    }

    #[test]
    fn graph_dump_is_canonical() {
        assert_eq!(cmd_graph_dump("4\n# x\n4 1\n2 1\n").unwrap(), "4\n1 2\n1 4\n");
    }
}
