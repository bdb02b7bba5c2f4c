//! Shared generators for the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use graph_frames::frame::{DualPair, Frame, DEFAULT_DUAL_TOL, DEFAULT_FRAME_TOL};
use graph_frames::linalg::{norm, Matrix};
use graph_frames::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub const S: f64 = std::f64::consts::FRAC_1_SQRT_2;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The example frame with vectors exactly as printed.
pub fn printed_example_frame() -> Frame {
    Frame::from_vectors(&[[S, S], [0.0, 2f64.sqrt()], [-S, S]], DEFAULT_FRAME_TOL).unwrap()
}

/// The example frame with the middle vector negated; its Gramian is the
/// path Laplacian.
pub fn laplacian_example_frame() -> Frame {
    Frame::from_vectors(&[[S, S], [0.0, -(2f64.sqrt())], [-S, S]], DEFAULT_FRAME_TOL).unwrap()
}

pub fn gaussian_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

pub fn uniform_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: f64, hi: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.random_range(lo..hi))
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let a = uniform_matrix(rng, n, n, -1.0, 1.0);
    Matrix::from_fn(n, n, |i, j| if i <= j { a[(i, j)] } else { a[(j, i)] })
}

/// Haar-ish random orthogonal matrix via Gram–Schmidt on a Gaussian matrix.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let g = gaussian_matrix(rng, n, n);
        let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut ok = true;
        for j in 0..n {
            let mut v = g.column(j);
            for _ in 0..2 {
                for q in &cols {
                    let d: f64 = v.iter().zip(q).map(|(a, b)| a * b).sum();
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= d * qi;
                    }
                }
            }
            let len = norm(&v);
            if len < 1e-8 {
                ok = false;
                break;
            }
            cols.push(v.into_iter().map(|x| x / len).collect());
        }
        if ok {
            return Matrix::from_columns(&cols).unwrap();
        }
    }
}

pub fn random_frame(rng: &mut ChaCha8Rng, dim: usize, count: usize) -> Frame {
    loop {
        if let Ok(f) = Frame::new(gaussian_matrix(rng, dim, count), 1e-6) {
            return f;
        }
    }
}

/// Projector onto the null space of the synthesis matrix (as an N×N matrix).
pub fn null_projector(frame: &Frame) -> Matrix {
    let f = frame.synthesis();
    let s_inv = frame.inverse_frame_operator().unwrap();
    let range = f.transpose().matmul(&s_inv).matmul(f);
    &Matrix::identity(frame.count()) - &range
}

/// A dual `S⁻¹F + W P` with `P` the null-space projector and random `W`.
pub fn random_dual(rng: &mut ChaCha8Rng, frame: &Frame, scale: f64) -> DualPair {
    let canonical = frame.canonical_dual().unwrap();
    let w = gaussian_matrix(rng, frame.dim(), frame.count()).scale(scale);
    let perturbation = w.matmul(&null_projector(frame));
    let g = Frame::new(canonical.dual().synthesis() + &perturbation, 1e-12).unwrap();
    DualPair::verify(frame.clone(), g, DEFAULT_DUAL_TOL).unwrap()
}

/// Random dual pair of the given shape; the canonical dual when `N = n`.
pub fn random_pair(rng: &mut ChaCha8Rng, dim: usize, count: usize) -> DualPair {
    let f = random_frame(rng, dim, count);
    if count == dim {
        f.canonical_dual().unwrap()
    } else {
        let scale = rng.random_range(0.05..1.5);
        random_dual(rng, &f, scale)
    }
}

/// Real harmonic frame: rows are cos/sin of `2π j k / N` for
/// `k = 1..=n/2` (plus a constant row when `n` is odd), scaled to Parseval.
/// Equal norms and tight, so the canonical pair is 1-uniform.
pub fn harmonic_frame(dim: usize, count: usize) -> Frame {
    assert!(dim < count);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    if dim % 2 == 1 {
        rows.push(vec![1.0 / (count as f64).sqrt(); count]);
    }
    let scale = (2.0 / count as f64).sqrt();
    for k in 1..=dim / 2 {
        let theta = |j: usize| 2.0 * std::f64::consts::PI * (j * k) as f64 / count as f64;
        rows.push((0..count).map(|j| scale * theta(j).cos()).collect());
        rows.push((0..count).map(|j| scale * theta(j).sin()).collect());
    }
    Frame::new(Matrix::from_rows(&rows).unwrap(), DEFAULT_FRAME_TOL).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, density);
        if g.structural_predicates().is_connected {
            return g;
        }
    }
}

/// Named graphs used throughout: paths, cycles, stars, complete and
/// complete bipartite graphs, wheels and a few disconnected ones.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push((format!("P{n}"), Graph::path(n).unwrap()));
        out.push((format!("K{n}"), Graph::complete(n).unwrap()));
        out.push((format!("S{n}"), Graph::star(n).unwrap()));
        if n >= 3 {
            out.push((format!("C{n}"), Graph::cycle(n).unwrap()));
        }
    }
    for (a, b) in [(1, 2), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)] {
        out.push((format!("K{a},{b}"), Graph::complete_bipartite(a, b).unwrap()));
    }
    for n in 4..=8 {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        edges.extend((1..n).map(|i| (i, if i + 1 < n { i + 1 } else { 1 })));
        out.push((format!("W{n}"), Graph::new(n, edges).unwrap()));
    }
    let k2 = Graph::complete(2).unwrap();
    out.push(("K2+K2".into(), k2.disjoint_union(&k2)));
    out.push(("P3+K1".into(), Graph::path(3).unwrap().disjoint_union(&Graph::empty(1).unwrap())));
    out.push(("K3+P3".into(), Graph::complete(3).unwrap().disjoint_union(&Graph::path(3).unwrap())));
    out
}

/// All connected simple graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    all_graphs_up_to_isomorphism(n)
        .into_iter()
        .filter(|g| g.structural_predicates().is_connected)
        .collect()
}

/// One representative per isomorphism class, grown vertex by vertex: every
/// graph on `n` vertices is some graph on `n − 1` vertices plus a new
/// vertex with some neighbourhood.
pub fn all_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n));
    let mut classes: Vec<Vec<Vec<bool>>> = vec![vec![vec![false]]];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &classes {
            for mask in 0u32..(1 << (size - 1)) {
                let mut grown = vec![vec![false; size]; size];
                for i in 0..size - 1 {
                    for j in 0..size - 1 {
                        grown[i][j] = adj[i][j];
                    }
                    let linked = mask >> i & 1 == 1;
                    grown[i][size - 1] = linked;
                    grown[size - 1][i] = linked;
                }
                if seen.insert(canonical_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        classes = next;
    }
    classes
        .into_iter()
        .map(|adj| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| adj[i][j])
                .collect();
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// Smallest upper-triangle bit code over relabelings that list vertices by
/// nondecreasing degree.
fn canonical_code(adj: &[Vec<bool>]) -> u64 {
    let n = adj.len();
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let slots: Vec<usize> = order.iter().map(|&v| deg[v]).collect();

    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn recurse(
        adj: &[Vec<bool>],
        deg: &[usize],
        slots: &[usize],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let n = adj.len();
        if perm.len() == n {
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = code << 1 | adj[perm[i]][perm[j]] as u64;
                }
            }
            *best = (*best).min(code);
            return;
        }
        let slot = perm.len();
        for v in 0..n {
            if !used[v] && deg[v] == slots[slot] {
                used[v] = true;
                perm.push(v);
                recurse(adj, deg, slots, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    recurse(adj, &deg, &slots, &mut perm, &mut used, &mut best);
    best
}
