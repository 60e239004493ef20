//! Recognition of forests, chordal graphs and grids.

use std::collections::VecDeque;

use serde::Serialize;

use super::{components, Multigraph};

/// Acyclic: simple and `|E| = n - #components`.
pub fn is_forest(g: &Multigraph) -> bool {
    g.is_simple() && g.edge_count() + components(g).len() == g.order()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chordality {
    Chordal,
    NotChordal,
    /// Chordality is only defined here for simple graphs.
    NotSimple,
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn chordality(g: &Multigraph) -> Chordality {
    if !g.is_simple() {
        return Chordality::NotSimple;
    }
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut picked = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| picked[v] == usize::MAX)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unpicked vertex remains");
        picked[v] = step;
        order.push(v);
        for w in g.neighbor_ids(v) {
            if picked[w] == usize::MAX {
                weight[w] += 1;
            }
        }
    }
    // Reverse MCS order is a perfect elimination ordering iff g is chordal: for each
    // v, the earlier-picked neighbours minus the latest of them must be adjacent to it.
    for &v in &order {
        let earlier: Vec<usize> = g
            .neighbor_ids(v)
            .filter(|&w| picked[w] < picked[v])
            .collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&w| picked[w]) else {
            continue;
        };
        if earlier.iter().any(|&w| w != parent && g.mu(w, parent) == 0) {
            return Chordality::NotChordal;
        }
    }
    Chordality::Chordal
}

pub fn is_chordal(g: &Multigraph) -> bool {
    chordality(g) == Chordality::Chordal
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridEmbedding {
    pub rows: usize,
    pub cols: usize,
    /// `coords[v] = (row, col)`.
    pub coords: Vec<(usize, usize)>,
}

impl GridEmbedding {
    /// Graph vertex at each grid position, row-major.
    pub fn vertex_at(&self) -> Vec<usize> {
        let mut at = vec![0; self.rows * self.cols];
        for (v, &(i, j)) in self.coords.iter().enumerate() {
            at[i * self.cols + j] = v;
        }
        at
    }
}

fn bfs(g: &Multigraph, src: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbor_ids(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Tries to recognise `g` as an `m x n` grid.
///
/// Anchors a corner `c` (degree at most 2) and a second corner `r` on the same side;
/// with `n - 1 = d(c, r)` the coordinates follow from `d(c, v) = i + j` and
/// `d(r, v) = i + (n - 1 - j)`. Every candidate is fully verified, so a returned
/// embedding is always a genuine isomorphism.
pub fn detect_grid(g: &Multigraph) -> Option<GridEmbedding> {
    let n_vertices = g.order();
    if n_vertices == 0 || !g.is_simple() {
        return None;
    }
    if n_vertices == 1 {
        return Some(GridEmbedding {
            rows: 1,
            cols: 1,
            coords: vec![(0, 0)],
        });
    }
    // In any grid the minimum-degree vertices are exactly the corners.
    let corner = (0..n_vertices).min_by_key(|&v| g.degree(v))?;
    if g.degree(corner) > 2 {
        return None;
    }
    let from_corner = bfs(g, corner);
    if from_corner.contains(&usize::MAX) {
        return None;
    }
    for other in (0..n_vertices).filter(|&v| v != corner && g.degree(v) <= 2) {
        let cols = from_corner[other] + 1;
        if !n_vertices.is_multiple_of(cols) {
            continue;
        }
        let rows = n_vertices / cols;
        let from_other = bfs(g, other);
        if let Some(embedding) = assign(g, rows, cols, &from_corner, &from_other) {
            return Some(embedding);
        }
    }
    None
}

fn assign(
    g: &Multigraph,
    rows: usize,
    cols: usize,
    dc: &[usize],
    dr: &[usize],
) -> Option<GridEmbedding> {
    let n_vertices = g.order();
    let expected_edges = rows * (cols - 1) + cols * (rows - 1);
    if g.edge_count() != expected_edges {
        return None;
    }
    let mut coords = Vec::with_capacity(n_vertices);
    let mut taken = vec![false; n_vertices];
    for v in 0..n_vertices {
        let sum = dc[v] + dr[v];
        if sum < cols - 1 || !(sum - (cols - 1)).is_multiple_of(2) {
            return None;
        }
        let i = (sum - (cols - 1)) / 2;
        if dc[v] < i {
            return None;
        }
        let j = dc[v] - i;
        if i >= rows || j >= cols || std::mem::replace(&mut taken[i * cols + j], true) {
            return None;
        }
        coords.push((i, j));
    }
    for (u, v, _) in g.pairs() {
        let (a, b) = (coords[u], coords[v]);
        if a.0.abs_diff(b.0) + a.1.abs_diff(b.1) != 1 {
            return None;
        }
    }
    Some(GridEmbedding { rows, cols, coords })
}
