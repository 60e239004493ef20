//! Loopless undirected multigraphs over dense vertex ids.

mod blocks;
mod generate;
mod io;
mod recognize;

pub use blocks::{block_cut_tree, vertex_on_cycle, vertices_on_cycles, BlockCutTree};
pub use generate::{
    make_complete, make_complete_bipartite, make_cycle, make_empty, make_gk, make_grid, make_path,
    make_spider, make_star, SpiderKind,
};
pub use io::{parse_graph, GraphJson};
pub use recognize::{chordality, detect_grid, is_chordal, is_forest, Chordality, GridEmbedding};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Undirected loopless multigraph. Parallel edges are stored as a multiplicity per
/// unordered pair; individual copies are never distinguished.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Multigraph {
    /// `adj[u]` is sorted by neighbour id; each entry carries the multiplicity.
    adj: Vec<Vec<(usize, u32)>>,
    edges: usize,
}

impl Multigraph {
    pub fn empty(n: usize) -> Self {
        Multigraph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from a list of edges; repeated pairs raise the multiplicity.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_multiplicities(n, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn from_multiplicities<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut acc: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); n];
        let mut total = 0usize;
        for (u, v, mu) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if mu == 0 {
                continue;
            }
            *acc[u].entry(v).or_default() += mu;
            *acc[v].entry(u).or_default() += mu;
            total += mu as usize;
        }
        Ok(Multigraph {
            adj: acc.into_iter().map(|m| m.into_iter().collect()).collect(),
            edges: total,
        })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn no_vertices(&self) -> VertexSet {
        VertexSet::empty(self.order())
    }

    pub fn mu(&self, u: usize, v: usize) -> u32 {
        match self.adj[u].binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.adj[u][i].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].iter().map(|&(_, m)| m as usize).sum()
    }

    /// Distinct neighbours with multiplicities, ascending.
    pub fn neighbors(&self, u: usize) -> &[(usize, u32)] {
        &self.adj[u]
    }

    pub fn neighbor_ids(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().map(|&(w, _)| w)
    }

    /// Unordered pairs `(u, v, mu)` with `u < v`, lexicographic.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, m)| (u, v, m))
        })
    }

    /// Edge list with each pair repeated `mu` times.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .flat_map(|(u, v, m)| std::iter::repeat_n((u, v), m as usize))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.pairs().all(|(_, _, m)| m == 1)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.pairs().map(|(_, _, m)| m).max().unwrap_or(0)
    }

    /// Induced subgraph on `keep`, relabelled densely in ascending order.
    /// Returns the subgraph and the map from new ids to old ids.
    pub fn induced(&self, keep: &VertexSet) -> (Multigraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); old.len()];
        let mut edges = 0;
        for (i, &v) in old.iter().enumerate() {
            for &(w, m) in &self.adj[v] {
                if new_id[w] != usize::MAX {
                    adj[i].push((new_id[w], m));
                    if v < w {
                        edges += m as usize;
                    }
                }
            }
        }
        (Multigraph { adj, edges }, old)
    }

    /// Removes the vertices in `drop`, relabelling the rest.
    pub fn without(&self, drop: &VertexSet) -> (Multigraph, Vec<usize>) {
        self.induced(&drop.complement())
    }

    /// Simple complement; multiplicities are ignored.
    pub fn complement(&self) -> Multigraph {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        let mut edges = 0;
        for (u, row) in adj.iter_mut().enumerate() {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                while it.peek().is_some_and(|&&(w, _)| w < v) {
                    it.next();
                }
                let adjacent = it.peek().is_some_and(|&&(w, _)| w == v);
                if v != u && !adjacent {
                    row.push((v, 1));
                    if u < v {
                        edges += 1;
                    }
                }
            }
        }
        Multigraph { adj, edges }
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row.iter().map(|&(w, m)| (w + shift, m)).collect()),
        );
        Multigraph {
            adj,
            edges: self.edges + other.edges,
        }
    }

    /// Number of edges of `g[set]`, counted with multiplicity.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|u| {
                self.adj[u]
                    .iter()
                    .filter(|&&(w, _)| u < w && set.contains(w))
                    .map(|&(_, m)| m as usize)
                    .sum::<usize>()
            })
            .sum()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.order(),
            edges: self.edge_list().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

/// Connected components, each as a vertex set, ordered by smallest member.
pub fn components(g: &Multigraph) -> Vec<VertexSet> {
    components_within(g, &g.all())
}

/// Components of the induced subgraph `g[within]`, ordered by smallest member.
pub fn components_within(g: &Multigraph, within: &VertexSet) -> Vec<VertexSet> {
    let n = g.order();
    let mut seen = VertexSet::empty(n);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for root in within.iter() {
        if seen.contains(root) {
            continue;
        }
        let mut comp = VertexSet::empty(n);
        seen.insert(root);
        stack.push(root);
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for w in g.neighbor_ids(v) {
                if within.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Multigraph) -> bool {
    components(g).len() <= 1
}
