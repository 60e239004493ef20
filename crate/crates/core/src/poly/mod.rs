//! Closed-form hull numbers with constructive witnesses: forests, chordal graphs,
//! grids and P4-sparse graphs.

mod p4sparse;

pub use p4sparse::{
    decompose_p4sparse, hn_p4sparse, hn_p4sparse_with_fold, rebuild, DecompNode, Fold, NodeKind,
};

use std::collections::VecDeque;

use crate::convexity::{Convexity, CycleConvexity};
use crate::error::{Error, Result};
use crate::exact::SolveReport;
use crate::graph::{
    block_cut_tree, chordality, components, detect_grid, is_forest, make_grid, Chordality,
    Multigraph,
};
use crate::set::VertexSet;

/// Packages a verified closed-form witness.
fn report(g: &Multigraph, witness: VertexSet, what: &str) -> Result<SolveReport> {
    let conv = CycleConvexity::new(g);
    if !conv.is_hull_set(&witness) {
        return Err(Error::Internal(format!(
            "{what} witness {witness} is not a hull set"
        )));
    }
    Ok(SolveReport {
        hn: witness.len(),
        lower_bound: witness.len(),
        forced: conv.forced(),
        witness,
        nodes_explored: 0,
    })
}

/// Every vertex of a forest is forced, so the hull number is `n`.
pub fn hn_forest(g: &Multigraph) -> Result<SolveReport> {
    if !is_forest(g) {
        return Err(Error::Precondition("graph has a cycle".into()));
    }
    report(g, g.all(), "forest")
}

/// `p + 1` for a connected chordal graph with `p` blocks; disconnected inputs
/// are summed over their components.
pub fn hn_chordal(g: &Multigraph) -> Result<SolveReport> {
    match chordality(g) {
        Chordality::Chordal => {}
        Chordality::NotChordal => return Err(Error::Precondition("graph is not chordal".into())),
        Chordality::NotSimple => return Err(Error::Precondition("graph is not simple".into())),
    }
    let mut witness = g.no_vertices();
    for comp in components(g) {
        let (h, ids) = g.induced(&comp);
        for v in chordal_component_witness(&h) {
            witness.insert(ids[v]);
        }
    }
    report(g, witness, "chordal")
}

/// Roots the block-cutpoint tree at the lowest leaf block `B_r` with cut vertex
/// `x_r`, takes `x_r` and a neighbour of it in `B_r`, and for every other block a
/// neighbour of its root cut vertex inside that block.
fn chordal_component_witness(h: &Multigraph) -> Vec<usize> {
    let n = h.order();
    if n == 1 {
        return vec![0];
    }
    let bct = block_cut_tree(h);
    let neighbour_in = |x: usize, b: usize| {
        h.neighbor_ids(x)
            .find(|&y| bct.blocks[b].contains(y))
            .expect("block with two or more vertices")
    };
    if bct.block_count() == 1 {
        return vec![0, neighbour_in(0, 0)];
    }
    let root = bct.leaf_blocks()[0];
    let x_r = bct
        .tree_edges
        .iter()
        .find(|&&(b, _)| b == root)
        .map(|&(_, x)| x)
        .expect("leaf block has a cut vertex");
    let mut out = vec![x_r, neighbour_in(x_r, root)];
    let mut seen_block = vec![false; bct.block_count()];
    let mut seen_cut = vec![false; n];
    seen_block[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(b) = queue.pop_front() {
        for &(_, x) in bct.tree_edges.iter().filter(|&&(bb, _)| bb == b) {
            if std::mem::replace(&mut seen_cut[x], true) {
                continue;
            }
            for &(child, _) in bct
                .tree_edges
                .iter()
                .filter(|&&(bb, xx)| xx == x && bb != b)
            {
                if !std::mem::replace(&mut seen_block[child], true) {
                    out.push(neighbour_in(x, child));
                    queue.push_back(child);
                }
            }
        }
    }
    out
}

/// `m + n - 1` for the `m x n` grid, witnessed by the first row and column.
pub fn hn_grid(m: usize, n: usize) -> Result<SolveReport> {
    let g = make_grid(m, n)?;
    let witness = VertexSet::from_ids(m * n, (0..n).chain((1..m).map(|i| i * n)));
    report(&g, witness, "grid")
}

/// [`hn_grid`] on a graph recognised as a grid, with the witness mapped back.
pub fn hn_grid_graph(g: &Multigraph) -> Result<SolveReport> {
    let emb = detect_grid(g).ok_or_else(|| Error::Precondition("graph is not a grid".into()))?;
    let at = emb.vertex_at();
    let grid = hn_grid(emb.rows, emb.cols)?;
    let witness = VertexSet::from_ids(g.order(), grid.witness.iter().map(|p| at[p]));
    report(g, witness, "grid")
}
