//! Simple undirected graphs and their degree, adjacency and Laplacian
//! matrices.
//!
//! Vertices are 0-based inside the crate. The edge-list text format uses
//! 1-based vertex numbers; conversion happens only in [`Graph::parse_edge_list`]
//! and [`Graph::to_edge_list`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{sym_eig, EigenDecomposition, Matrix, DEFAULT_EIG_TOL};

/// Relative threshold under which a Laplacian eigenvalue counts as zero.
pub const ZERO_EIGEN_TOL: f64 = 1e-10;

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Canonical order: each pair has `i < j`, pairs sorted lexicographically.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 0-based edges, validating simplicity.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Domain("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (k, (a, b)) in edges.into_iter().enumerate() {
            let line = k + 1;
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        line,
                        vertex: v + 1,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { line, vertex: a + 1 });
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge {
                    line,
                    i: e.0 + 1,
                    j: e.1 + 1,
                });
            }
        }
        Ok(Graph {
            vertex_count,
            edges: set.into_iter().collect(),
        })
    }

    /// Parses the edge-list format: the first non-comment line holds the
    /// vertex count `N`, each further line an edge `i j` with `1 ≤ i, j ≤ N`.
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut vertex_count = None;
        let mut set = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let Some(n) = vertex_count else {
                let [count] = fields.as_slice() else {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected a vertex count, found {trimmed:?}"),
                    });
                };
                let n: usize = count.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid vertex count {count:?}"),
                })?;
                if n == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "vertex count must be at least 1".into(),
                    });
                }
                vertex_count = Some(n);
                continue;
            };
            let [a, b] = fields.as_slice() else {
                return Err(Error::Parse {
                    line,
                    message: format!("expected an edge \"i j\", found {trimmed:?}"),
                });
            };
            let parse_vertex = |s: &str| -> Result<usize> {
                let v: usize = s.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid vertex {s:?}"),
                })?;
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange {
                        line,
                        vertex: v,
                        vertex_count: n,
                    });
                }
                Ok(v - 1)
            };
            let (a, b) = (parse_vertex(a)?, parse_vertex(b)?);
            if a == b {
                return Err(Error::SelfLoop { line, vertex: a + 1 });
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge {
                    line,
                    i: e.0 + 1,
                    j: e.1 + 1,
                });
            }
        }
        let vertex_count = vertex_count.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing vertex count".into(),
        })?;
        Ok(Graph {
            vertex_count,
            edges: set.into_iter().collect(),
        })
    }

    /// Canonical edge-list rendering (1-based, sorted), parseable by
    /// [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count);
        for &(i, j) in &self.edges {
            writeln!(out, "{} {}", i + 1, j + 1).unwrap();
        }
        out
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("a simple cycle needs 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star with centre vertex 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (0, i)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    /// Vertex-disjoint union; vertices of `other` are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        Graph {
            vertex_count: shift + other.vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(i, j) in &self.edges {
            d[i] += 1;
            d[j] += 1;
        }
        d
    }

    pub fn degree_matrix(&self) -> Matrix {
        let d: Vec<f64> = self.degrees().into_iter().map(|x| x as f64).collect();
        Matrix::diagonal(&d)
    }

    pub fn adjacency_matrix(&self) -> Matrix {
        let mut a = Matrix::zeros(self.vertex_count, self.vertex_count);
        for &(i, j) in &self.edges {
            a[(i, j)] = 1.0;
            a[(j, i)] = 1.0;
        }
        a
    }

    /// `𝓛 = 𝒟 − 𝒜`.
    pub fn laplacian(&self) -> Matrix {
        &self.degree_matrix() - &self.adjacency_matrix()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Connected components by breadth-first search, each sorted, listed in
    /// order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbours();
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// `(largest degree, smallest degree)`.
    pub fn degree_extremes(&self) -> (usize, usize) {
        let d = self.degrees();
        let max = d.iter().copied().max().unwrap_or(0);
        let min = d.iter().copied().min().unwrap_or(0);
        (max, min)
    }

    pub fn structural_predicates(&self) -> StructuralPredicates {
        let (max, min) = self.degree_extremes();
        let n = self.vertex_count;
        let is_regular = max == min;
        StructuralPredicates {
            is_connected: self.connected_components().len() == 1,
            is_regular,
            regularity_degree: is_regular.then_some(max),
            is_complete: self.edges.len() == n * (n - 1) / 2,
            has_null_vertex: min == 0,
        }
    }

    /// Laplacian eigendecomposition plus component count and algebraic
    /// connectivity. Eigenvalues below `ZERO_EIGEN_TOL · ν₁` are snapped to 0.
    pub fn spectrum(&self) -> Result<GraphSpectrum> {
        let laplacian = self.laplacian();
        let mut eigen = sym_eig(&laplacian, DEFAULT_EIG_TOL)?;
        let top = eigen.max_value();
        for v in &mut eigen.values {
            if v.abs() <= ZERO_EIGEN_TOL * top.max(1.0) {
                *v = 0.0;
            }
        }
        let n = eigen.len();
        let algebraic_connectivity = if n >= 2 { eigen.values[n - 2] } else { 0.0 };
        Ok(GraphSpectrum {
            laplacian,
            eigen,
            components: self.connected_components().len(),
            algebraic_connectivity,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub is_connected: bool,
    pub is_regular: bool,
    pub regularity_degree: Option<usize>,
    pub is_complete: bool,
    pub has_null_vertex: bool,
}

#[derive(Debug, Clone)]
pub struct GraphSpectrum {
    pub laplacian: Matrix,
    /// Laplacian eigenpairs, eigenvalues descending (`ν₁ ≥ … ≥ ν_N`).
    pub eigen: EigenDecomposition,
    pub components: usize,
    /// Second-smallest Laplacian eigenvalue.
    pub algebraic_connectivity: f64,
}

impl GraphSpectrum {
    pub fn values(&self) -> &[f64] {
        &self.eigen.values
    }

    /// Multiplicity of the eigenvalue 0.
    pub fn zero_multiplicity(&self) -> usize {
        self.eigen.values.iter().filter(|&&v| v == 0.0).count()
    }

    pub fn rank(&self) -> usize {
        self.eigen.len() - self.zero_multiplicity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = Graph::parse_edge_list("3\n1 2\n2 3").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
    }

    #[test]
    fn parses_edgeless() {
        let g = Graph::parse_edge_list("2\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn comments_and_order_are_ignored() {
        let g = Graph::parse_edge_list("# header\n3\n# edges\n3 2\n\n2 1\n").unwrap();
        assert_eq!(g.to_edge_list(), "3\n1 2\n2 3\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Graph::parse_edge_list("3\n1 1"),
            Err(Error::SelfLoop { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3\n1 4"),
            Err(Error::VertexOutOfRange { line: 2, vertex: 4, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3\n1 2\n2 1"),
            Err(Error::DuplicateEdge { line: 3, i: 1, j: 2 })
        ));
        assert!(matches!(Graph::parse_edge_list("3\n1 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("3\n1 2 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("# only\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("0\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn matrices_of_path() {
        let g = Graph::path(3).unwrap();
        let want = Matrix::from_rows(&[[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]]).unwrap();
        assert_eq!(g.laplacian(), want);
        assert_eq!(g.degree_matrix(), Matrix::diagonal(&[1.0, 2.0, 1.0]));
    }

    #[test]
    fn laplacian_of_k3_and_edgeless() {
        let want = Matrix::from_rows(&[[2.0, -1.0, -1.0], [-1.0, 2.0, -1.0], [-1.0, -1.0, 2.0]]).unwrap();
        assert_eq!(Graph::complete(3).unwrap().laplacian(), want);
        assert_eq!(Graph::empty(4).unwrap().laplacian(), Matrix::zeros(4, 4));
    }

    #[test]
    fn components() {
        assert_eq!(Graph::path(3).unwrap().connected_components(), vec![vec![0, 1, 2]]);
        let g = Graph::parse_edge_list("4\n1 2").unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn degree_extremes_examples() {
        assert_eq!(Graph::path(3).unwrap().degree_extremes(), (2, 1));
        assert_eq!(Graph::complete(5).unwrap().degree_extremes(), (4, 4));
        assert_eq!(Graph::star(5).unwrap().degree_extremes(), (4, 1));
    }

    #[test]
    fn predicates() {
        let k4 = Graph::complete(4).unwrap().structural_predicates();
        assert!(k4.is_connected && k4.is_regular && k4.is_complete && !k4.has_null_vertex);
        assert_eq!(k4.regularity_degree, Some(3));

        let p3 = Graph::path(3).unwrap().structural_predicates();
        assert!(p3.is_connected && !p3.is_regular && !p3.is_complete);
        assert_eq!(p3.regularity_degree, None);

        let g = Graph::empty(1).unwrap().disjoint_union(&Graph::complete(2).unwrap());
        assert!(g.structural_predicates().has_null_vertex);
        assert!(!g.structural_predicates().is_connected);
    }

    #[test]
    fn spectrum_counts_components() {
        let g = Graph::complete(2).unwrap().disjoint_union(&Graph::path(3).unwrap());
        let s = g.spectrum().unwrap();
        assert_eq!(s.components, 2);
        assert_eq!(s.zero_multiplicity(), 2);
        assert_eq!(s.rank(), 3);
        assert_eq!(s.algebraic_connectivity, 0.0);

        let s = Graph::path(3).unwrap().spectrum().unwrap();
        assert!((s.algebraic_connectivity - 1.0).abs() < 1e-12);
    }
}
