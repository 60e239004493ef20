//! Named graph families.

use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

pub fn make_empty(n: usize) -> Multigraph {
    Multigraph::empty(n)
}

pub fn make_path(n: usize) -> Result<Multigraph> {
    Multigraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Simple cycle on `n >= 3` vertices.
pub fn make_cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "a simple cycle needs at least 3 vertices, got {n}"
        )));
    }
    Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Multigraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Multigraph::from_edges(n, edges).expect("complete graph edges are valid")
}

pub fn make_complete_bipartite(a: usize, b: usize) -> Multigraph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Multigraph::from_edges(a + b, edges).expect("bipartite edges are valid")
}

/// Star with centre 0 and `leaves` leaves.
pub fn make_star(leaves: usize) -> Multigraph {
    Multigraph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
}

/// The `m x n` grid; vertex `(i, j)` (0-based row `i`, column `j`) has id `i * n + j`.
pub fn make_grid(m: usize, n: usize) -> Result<Multigraph> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition(format!(
            "grid dimensions must be positive, got {m}x{n}"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            let v = i * n + j;
            if j + 1 < n {
                edges.push((v, v + 1));
            }
            if i + 1 < m {
                edges.push((v, v + n));
            }
        }
    }
    Multigraph::from_edges(m * n, edges)
}

/// Two `k`-cycles `u_0..u_{k-1}` (ids `0..k`) and `v_0..v_{k-1}` (ids `k..2k`)
/// joined by rungs `u_i v_i` of multiplicity two. For `k = 2` the "cycles" are
/// themselves doubled edges, so every vertex still has degree 4.
pub fn make_gk(k: usize) -> Result<Multigraph> {
    if k < 2 {
        return Err(Error::Precondition(format!("G_k needs k >= 2, got {k}")));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        edges.push((i, j, 1));
        edges.push((k + i, k + j, 1));
        edges.push((i, k + i, 2));
    }
    Multigraph::from_multiplicities(2 * k, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpiderKind {
    Thin,
    Fat,
}

/// Spider with clique `K = 0..k`, stable set `S = k..2k` (`s_i` paired with `k_i`)
/// and head `R` = a copy of `head` starting at id `2k`.
///
/// A fat spider with `k = 2` is the same graph as a thin one and is built as thin.
pub fn make_spider(kind: SpiderKind, k: usize, head: &Multigraph) -> Result<Multigraph> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "spider needs |K| >= 2, got {k}"
        )));
    }
    if !head.is_simple() {
        return Err(Error::Precondition("spider head must be simple".into()));
    }
    let kind = if k == 2 { SpiderKind::Thin } else { kind };
    let r0 = 2 * k;
    let n = r0 + head.order();
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b));
        }
    }
    for i in 0..k {
        let s = k + i;
        match kind {
            SpiderKind::Thin => edges.push((s, i)),
            SpiderKind::Fat => edges.extend((0..k).filter(|&j| j != i).map(|j| (s, j))),
        }
    }
    for r in 0..head.order() {
        edges.extend((0..k).map(|j| (r0 + r, j)));
    }
    edges.extend(head.pairs().map(|(a, b, _)| (r0 + a, r0 + b)));
    Multigraph::from_edges(n, edges)
}
