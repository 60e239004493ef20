//! Exact hull numbers by iterative deepening, plus preprocessing, lower bounds
//! and a brute-force oracle.
//!
//! The search at target size `k` grows a set `P` (starting from the forced
//! vertices) by vertices of increasing id, each taken from outside `hull(P)`.
//! A minimum hull set listed in ascending order never contains a vertex already
//! in the hull of its predecessors (it could be dropped), so this is complete.

use rayon::prelude::*;
use serde::Serialize;

use crate::convexity::Convexity;
use crate::error::{Error, Result};
use crate::graph::{block_cut_tree, components, vertices_on_cycles, Multigraph};
use crate::set::VertexSet;

/// Largest order accepted by [`brute_force_hn`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub hn: usize,
    pub witness: VertexSet,
    pub forced: VertexSet,
    pub lower_bound: usize,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preprocessed {
    /// Subgraph induced by the vertices lying on cycles.
    pub graph: Multigraph,
    /// `kept[i]` is the original id of vertex `i` of `graph`.
    pub kept: Vec<usize>,
    /// Vertices on no cycle; every hull set contains them.
    pub forced: VertexSet,
    pub offset: usize,
}

/// Strips every vertex lying on no cycle. Deleting such a vertex leaves every
/// cycle intact, so a single pass reaches the fixed point.
pub fn preprocess(g: &Multigraph) -> Preprocessed {
    let on_cycle = vertices_on_cycles(g);
    let (graph, kept) = g.induced(&on_cycle);
    let forced = on_cycle.complement();
    Preprocessed {
        graph,
        kept,
        offset: forced.len(),
        forced,
    }
}

/// Forced vertices plus, per component of the stripped graph, `p + 1` for a
/// simple component with `p` blocks and 1 otherwise.
pub fn lower_bound(g: &Multigraph) -> usize {
    let pre = preprocess(g);
    let mut bound = pre.offset;
    for comp in components(&pre.graph) {
        let (h, _) = pre.graph.induced(&comp);
        bound += if h.order() >= 2 && h.is_simple() {
            block_cut_tree(&h).block_count() + 1
        } else {
            1
        };
    }
    bound
}

/// Minimum hull set, searching first subtrees in parallel.
pub fn solve<C: Convexity>(conv: &C) -> SolveReport {
    solve_with(conv, true)
}

/// As [`solve`]; `parallel = false` runs on the calling thread and yields an
/// identical report.
pub fn solve_with<C: Convexity>(conv: &C, parallel: bool) -> SolveReport {
    let n = conv.order();
    let forced = conv.forced();
    let lower = conv.lower_bound();
    let mut nodes = 0;
    for k in lower.max(forced.len())..=n {
        let (found, explored) = search_level(conv, &forced, k, parallel);
        nodes += explored;
        if let Some(witness) = found {
            return SolveReport {
                hn: witness.len(),
                witness,
                forced,
                lower_bound: lower,
                nodes_explored: nodes,
            };
        }
    }
    unreachable!("the whole vertex set is a hull set")
}

/// Lexicographically first hull set of size exactly `k` containing `forced`
/// (among those the search visits), with the number of hulls computed.
pub fn search_level<C: Convexity>(
    conv: &C,
    forced: &VertexSet,
    k: usize,
    parallel: bool,
) -> (Option<VertexSet>, u64) {
    let n = conv.order();
    let hull = conv.hull(forced);
    if forced.len() >= k {
        let ok = forced.len() == k && hull.is_full();
        return (ok.then(|| forced.clone()), 1);
    }
    let firsts: Vec<usize> = (0..n).filter(|&v| !hull.contains(v)).collect();
    let run = |&v: &usize| {
        let mut search = Search { conv, nodes: 0, k };
        let found = search.extend(forced.with(v), v);
        (found, search.nodes)
    };
    let results: Vec<(Option<VertexSet>, u64)> = if parallel {
        firsts.par_iter().map(run).collect()
    } else {
        firsts.iter().map(run).collect()
    };
    let nodes = 1 + results.iter().map(|r| r.1).sum::<u64>();
    (results.into_iter().find_map(|r| r.0), nodes)
}

struct Search<'c, C> {
    conv: &'c C,
    nodes: u64,
    k: usize,
}

impl<C: Convexity> Search<'_, C> {
    fn extend(&mut self, set: VertexSet, last: usize) -> Option<VertexSet> {
        self.nodes += 1;
        let hull = self.conv.hull(&set);
        if hull.is_full() {
            return Some(set);
        }
        let need = self.k - set.len();
        if need == 0 {
            return None;
        }
        let candidates: Vec<usize> = (last + 1..self.conv.order())
            .filter(|&v| !hull.contains(v))
            .collect();
        if candidates.len() < need {
            return None;
        }
        for v in candidates {
            if let Some(found) = self.extend(set.with(v), v) {
                return Some(found);
            }
        }
        None
    }
}

/// Tries every subset by increasing size, in lexicographic order.
pub fn brute_force_hn<C: Convexity>(conv: &C) -> Result<SolveReport> {
    let n = conv.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut nodes = 0;
    for k in 0..=n {
        for combo in Combinations::new(n, k) {
            nodes += 1;
            let set = VertexSet::from_ids(n, combo);
            if conv.is_hull_set(&set) {
                return Ok(SolveReport {
                    hn: k,
                    witness: set,
                    forced: conv.forced(),
                    lower_bound: 0,
                    nodes_explored: nodes,
                });
            }
        }
    }
    unreachable!("the whole vertex set is a hull set")
}

/// Every non-empty co-convex set with at most `max_size` vertices, by size then
/// lexicographically.
pub fn enumerate_coconvex<C: Convexity>(conv: &C, max_size: usize) -> Vec<VertexSet> {
    let n = conv.order();
    (1..=max_size.min(n))
        .flat_map(|k| Combinations::new(n, k))
        .map(|combo| VertexSet::from_ids(n, combo))
        .filter(|s| conv.is_coconvex(s))
        .collect()
}

/// `k`-subsets of `0..n` as ascending id vectors, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let c = self.current.as_mut().expect("checked above");
        let k = c.len();
        match (0..k).rev().find(|&i| c[i] < self.n - k + i) {
            Some(i) => {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::CycleConvexity;
    use crate::graph::{make_complete, make_cycle, make_gk, make_grid, make_path};

    fn hn(g: &Multigraph) -> usize {
        solve(&CycleConvexity::new(g)).hn
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(
            Combinations::new(4, 0).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(
            Combinations::new(3, 3).collect::<Vec<_>>(),
            vec![vec![0, 1, 2]]
        );
    }

    #[test]
    fn preprocess_examples() {
        let tree = make_path(5).unwrap();
        let pre = preprocess(&tree);
        assert_eq!((pre.graph.order(), pre.offset), (0, 5));
        let c4 = make_cycle(4).unwrap();
        assert_eq!(preprocess(&c4).offset, 0);
        let pendant = Multigraph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let pre = preprocess(&pendant);
        assert_eq!((pre.graph.order(), pre.offset), (3, 1));
        assert_eq!(pre.forced.to_vec(), vec![3]);
        assert_eq!(pre.kept, vec![0, 1, 2]);
    }

    #[test]
    fn lower_bound_examples() {
        // Three triangles in a chain: 3 blocks.
        let chain = Multigraph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 2),
                (4, 5),
                (5, 6),
                (6, 4),
            ],
        )
        .unwrap();
        assert_eq!(lower_bound(&chain), 4);
        assert_eq!(lower_bound(&make_gk(3).unwrap()), 1);
        let two_k4 = make_complete(4).disjoint_union(&make_complete(4));
        assert_eq!(lower_bound(&two_k4), 4);
    }

    #[test]
    fn solve_examples() {
        for n in 3..=8 {
            assert_eq!(hn(&make_cycle(n).unwrap()), n - 1);
        }
        for k in 2..=6 {
            assert_eq!(hn(&make_gk(k).unwrap()), k - 1, "G_{k}");
        }
        assert_eq!(hn(&make_grid(3, 3).unwrap()), 5);
        assert_eq!(hn(&Multigraph::empty(0)), 0);
    }

    #[test]
    fn brute_force_examples() {
        let check = |g: &Multigraph, want| {
            assert_eq!(brute_force_hn(&CycleConvexity::new(g)).unwrap().hn, want);
        };
        check(&make_complete(4), 2);
        check(&make_path(4).unwrap(), 4);
        check(&make_cycle(4).unwrap(), 3);
        let big = Multigraph::empty(21);
        assert_eq!(
            brute_force_hn(&CycleConvexity::new(&big)),
            Err(Error::SizeGuard { n: 21, limit: 20 })
        );
    }

    #[test]
    fn parallel_and_serial_reports_agree() {
        for g in [
            make_grid(3, 4).unwrap(),
            make_gk(5).unwrap(),
            make_complete(6),
        ] {
            let conv = CycleConvexity::new(&g);
            assert_eq!(solve_with(&conv, true), solve_with(&conv, false));
        }
    }

    #[test]
    fn witness_contains_forced() {
        let g =
            Multigraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 5)]).unwrap();
        let report = solve(&CycleConvexity::new(&g));
        assert!(report.forced.is_subset(&report.witness));
        assert_eq!(report.hn, 5);
    }

    #[test]
    fn coconvex_enumeration() {
        let grid = make_grid(3, 3).unwrap();
        let found = enumerate_coconvex(&CycleConvexity::new(&grid), 3);
        for line in [
            [0, 1, 2],
            [3, 4, 5],
            [6, 7, 8],
            [0, 3, 6],
            [1, 4, 7],
            [2, 5, 8],
        ] {
            assert!(found.contains(&VertexSet::from_ids(9, line)));
        }
        let tree = make_path(4).unwrap();
        let singles = enumerate_coconvex(&CycleConvexity::new(&tree), 1);
        assert_eq!(singles.len(), 4);
        assert!(enumerate_coconvex(&CycleConvexity::new(&make_complete(4)), 1).is_empty());
    }
}
