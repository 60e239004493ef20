//! Biconnected components and the block-cutpoint forest.

use serde::Serialize;

use super::Multigraph;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// Vertex sets of the blocks. Isolated vertices form trivial one-vertex blocks.
    pub blocks: Vec<VertexSet>,
    /// Edges in each block, counted with multiplicity.
    pub block_edges: Vec<usize>,
    pub cut_vertices: VertexSet,
    /// `(block index, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockCutTree {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks with exactly one cut vertex.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.tree_edges.iter().filter(|&&(x, _)| x == b).count() == 1)
            .collect()
    }

    /// A block contains a cycle iff it has at least two edges (a doubled edge is a 2-cycle).
    pub fn block_has_cycle(&self, b: usize) -> bool {
        self.block_edges[b] >= 2
    }
}

/// Hopcroft–Tarjan lowpoint decomposition over distinct vertex pairs, iterative.
/// Each block is emitted in DFS completion order; roots are scanned by ascending id.
pub fn block_cut_tree(g: &Multigraph) -> BlockCutTree {
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut block_edges = Vec::new();

    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.neighbors(root).is_empty() {
            blocks.push(VertexSet::from_ids(n, [root]));
            block_edges.push(0);
            continue;
        }
        frames.push((root, UNSEEN, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent, i) = *frame;
            if i < g.neighbors(v).len() {
                frame.2 += 1;
                let w = g.neighbors(v)[i].0;
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent == UNSEEN {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    let mut members = VertexSet::empty(n);
                    let mut count = 0usize;
                    while let Some((a, b)) = edge_stack.pop() {
                        members.insert(a);
                        members.insert(b);
                        count += g.mu(a, b) as usize;
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    blocks.push(members);
                    block_edges.push(count);
                }
            }
        }
    }

    let mut seen_in = vec![0usize; n];
    for b in &blocks {
        for v in b.iter() {
            seen_in[v] += 1;
        }
    }
    let cut_vertices = VertexSet::from_ids(n, (0..n).filter(|&v| seen_in[v] >= 2));
    let mut tree_edges = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for v in b.iter().filter(|&v| cut_vertices.contains(v)) {
            tree_edges.push((i, v));
        }
    }
    BlockCutTree {
        blocks,
        block_edges,
        cut_vertices,
        tree_edges,
    }
}

/// Vertices lying on at least one cycle (including 2-cycles from parallel edges).
pub fn vertices_on_cycles(g: &Multigraph) -> VertexSet {
    let bct = block_cut_tree(g);
    let mut out = VertexSet::empty(g.order());
    for (i, b) in bct.blocks.iter().enumerate() {
        if bct.block_has_cycle(i) {
            out.union_with(b);
        }
    }
    out
}

pub fn vertex_on_cycle(g: &Multigraph, v: usize) -> bool {
    vertices_on_cycles(g).contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{components, make_complete, make_cycle, make_path, make_star};

    fn incidence_identity(g: &Multigraph) {
        let t = block_cut_tree(g);
        assert_eq!(
            t.tree_edges.len() + components(g).len(),
            t.blocks.len() + t.cut_vertices.len()
        );
    }

    #[test]
    fn path_has_edge_blocks() {
        let t = block_cut_tree(&make_path(3).unwrap());
        assert_eq!(t.block_count(), 2);
        assert_eq!(t.cut_vertices.to_vec(), vec![1]);
        assert_eq!(t.leaf_blocks().len(), 2);
    }

    #[test]
    fn k4_is_one_block() {
        let t = block_cut_tree(&make_complete(4));
        assert_eq!(t.block_count(), 1);
        assert!(t.cut_vertices.is_empty());
        assert_eq!(t.block_edges, vec![6]);
    }

    #[test]
    fn bowtie() {
        let g =
            Multigraph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.block_count(), 2);
        assert_eq!(t.cut_vertices.to_vec(), vec![2]);
        incidence_identity(&g);
    }

    #[test]
    fn double_edge_block_has_cycle() {
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.block_count(), 2);
        assert_eq!(vertices_on_cycles(&g).to_vec(), vec![0, 1]);
        incidence_identity(&g);
    }

    #[test]
    fn on_cycle_examples() {
        let c4 = make_cycle(4).unwrap();
        assert!(c4.vertices().all(|v| vertex_on_cycle(&c4, v)));
        assert!(!vertex_on_cycle(&make_star(3), 0));
        let digon = Multigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert!(vertex_on_cycle(&digon, 0) && vertex_on_cycle(&digon, 1));
    }

    #[test]
    fn forest_with_isolated_vertices() {
        let g = Multigraph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.block_count(), 3);
        incidence_identity(&g);
    }
}
