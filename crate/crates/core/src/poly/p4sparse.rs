//! P4-sparse graphs: decomposition into unions, joins and spiders, and the
//! hull number read off the decomposition tree bottom-up.

use serde::Serialize;

use crate::convexity::is_hull_set;
use crate::error::{Error, Result};
use crate::exact::SolveReport;
use crate::graph::{components, components_within, Multigraph, SpiderKind};
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Union,
    Join,
    /// `pairs[i] = (k, s)`: `s` sees only `k` (thin) or all of `K` but `k` (fat).
    Spider {
        kind: SpiderKind,
        pairs: Vec<(usize, usize)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompNode {
    #[serde(flatten)]
    pub kind: NodeKind,
    /// Vertices of the subgraph represented by this node, ascending.
    pub vertices: Vec<usize>,
    /// Union/join parts; for a spider, the head if it is non-empty.
    pub children: Vec<DecompNode>,
    pub components: usize,
    pub has_edge: bool,
    pub hn: usize,
    pub witness: Vec<usize>,
}

impl DecompNode {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Pre-order traversal.
    pub fn nodes(&self) -> Vec<&DecompNode> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }
}

/// Order in which multi-part joins are combined two at a time. Parts are sorted
/// by size first (ties by smallest vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fold {
    Left,
    Right,
}

/// Decomposes `g`, annotating every node (joins folded left).
pub fn decompose_p4sparse(g: &Multigraph) -> Result<DecompNode> {
    decompose_with(g, Fold::Left)
}

fn decompose_with(g: &Multigraph, fold: Fold) -> Result<DecompNode> {
    if !g.is_simple() {
        return Err(Error::Precondition("graph is not simple".into()));
    }
    if g.order() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let ids: Vec<usize> = g.vertices().collect();
    let mut root = build(g, &ids)?;
    annotate(g, &mut root, fold);
    Ok(root)
}

pub fn hn_p4sparse(g: &Multigraph) -> Result<SolveReport> {
    hn_p4sparse_with_fold(g, Fold::Left)
}

pub fn hn_p4sparse_with_fold(g: &Multigraph, fold: Fold) -> Result<SolveReport> {
    let root = decompose_with(g, fold)?;
    let witness = VertexSet::from_ids(g.order(), root.witness.iter().copied());
    if !is_hull_set(g, &witness) {
        return Err(Error::Internal(format!(
            "P4-sparse witness {witness} is not a hull set"
        )));
    }
    Ok(SolveReport {
        hn: root.hn,
        lower_bound: root.hn,
        forced: crate::graph::vertices_on_cycles(g).complement(),
        witness,
        nodes_explored: 0,
    })
}

/// Recursive structure on the subgraph `h` whose vertex `i` is `ids[i]` in the host.
fn build(host: &Multigraph, ids: &[usize]) -> Result<DecompNode> {
    let set = VertexSet::from_ids(host.order(), ids.iter().copied());
    let (h, _) = host.induced(&set);
    let node = |kind, children| DecompNode {
        kind,
        vertices: ids.to_vec(),
        children,
        components: 0,
        has_edge: h.edge_count() > 0,
        hn: 0,
        witness: Vec::new(),
    };
    if ids.len() == 1 {
        return Ok(node(NodeKind::Leaf, Vec::new()));
    }
    let parts = |comps: Vec<VertexSet>| -> Result<Vec<DecompNode>> {
        comps
            .iter()
            .map(|c| build(host, &c.iter().map(|i| ids[i]).collect::<Vec<_>>()))
            .collect()
    };
    let comps = components(&h);
    if comps.len() > 1 {
        return Ok(node(NodeKind::Union, parts(comps)?));
    }
    let co = components(&h.complement());
    if co.len() > 1 {
        return Ok(node(NodeKind::Join, parts(co)?));
    }
    let Some((kind, pairs, head)) = detect_spider(&h) else {
        return Err(Error::NotP4Sparse(format!(
            "subgraph on {ids:?} is connected, co-connected and not a spider"
        )));
    };
    let pairs = pairs.into_iter().map(|(k, s)| (ids[k], ids[s])).collect();
    let children = if head.is_empty() {
        Vec::new()
    } else {
        vec![build(
            host,
            &head.iter().map(|&i| ids[i]).collect::<Vec<_>>(),
        )?]
    };
    Ok(node(NodeKind::Spider { kind, pairs }, children))
}

type Spider = (SpiderKind, Vec<(usize, usize)>, Vec<usize>);

/// Thin: `S` = degree-1 vertices, `K = N(S)`. Fat: `K` = vertices of degree
/// `n - 2`, `S` = the others whose neighbourhood is `K` minus one vertex.
/// Candidates are accepted only if they satisfy the full definition.
fn detect_spider(h: &Multigraph) -> Option<Spider> {
    let n = h.order();
    let thin_s: Vec<usize> = h.vertices().filter(|&v| h.degree(v) == 1).collect();
    let thin: Vec<(usize, usize)> = thin_s
        .iter()
        .map(|&s| (h.neighbor_ids(s).next().expect("degree one"), s))
        .collect();
    if let Some(sp) = verify_spider(h, SpiderKind::Thin, thin) {
        return Some(sp);
    }
    let k: Vec<usize> = h
        .vertices()
        .filter(|&v| n >= 2 && h.degree(v) == n - 2)
        .collect();
    let fat: Vec<(usize, usize)> = h
        .vertices()
        .filter(|v| !k.contains(v))
        .filter_map(|s| {
            let nbrs: Vec<usize> = h.neighbor_ids(s).collect();
            if nbrs.len() + 1 != k.len() || !nbrs.iter().all(|x| k.contains(x)) {
                return None;
            }
            let missing = k.iter().copied().find(|x| !nbrs.contains(x))?;
            Some((missing, s))
        })
        .collect();
    if fat.len() < 3 {
        return None;
    }
    verify_spider(h, SpiderKind::Fat, fat)
}

fn verify_spider(h: &Multigraph, kind: SpiderKind, pairs: Vec<(usize, usize)>) -> Option<Spider> {
    let n = h.order();
    if pairs.len() < 2 {
        return None;
    }
    let mut role = vec![None; n];
    for (i, &(k, s)) in pairs.iter().enumerate() {
        if role[k].is_some() || role[s].is_some() {
            return None;
        }
        role[k] = Some((true, i));
        role[s] = Some((false, i));
    }
    let expected = |a: usize, b: usize| match (role[a], role[b]) {
        (Some((true, _)), Some((true, _))) => true,
        (Some((false, _)), Some((false, _))) => false,
        (Some((true, i)), Some((false, j))) | (Some((false, j)), Some((true, i))) => match kind {
            SpiderKind::Thin => i == j,
            SpiderKind::Fat => i != j,
        },
        (Some((true, _)), None) | (None, Some((true, _))) => true,
        (Some((false, _)), None) | (None, Some((false, _))) => false,
        (None, None) => h.mu(a, b) > 0,
    };
    for a in 0..n {
        for b in a + 1..n {
            if expected(a, b) != (h.mu(a, b) > 0) {
                return None;
            }
        }
    }
    let mut pairs = pairs;
    pairs.sort_unstable();
    let head = (0..n).filter(|&v| role[v].is_none()).collect();
    Some((kind, pairs, head))
}

/// Summary of one side of a binary join.
struct Part {
    vertices: Vec<usize>,
    components: Vec<Vec<usize>>,
    edge: Option<(usize, usize)>,
}

fn part_of(g: &Multigraph, vertices: Vec<usize>) -> Part {
    let set = VertexSet::from_ids(g.order(), vertices.iter().copied());
    let components = components_within(g, &set)
        .iter()
        .map(VertexSet::to_vec)
        .collect();
    let edge = vertices.iter().find_map(|&u| {
        g.neighbor_ids(u)
            .find(|&v| v > u && set.contains(v))
            .map(|v| (u, v))
    });
    Part {
        vertices,
        components,
        edge,
    }
}

/// `G1 ∧ G2` with `|V(G1)| <= |V(G2)|`: `p + 1` when `G1` is a single vertex
/// (`p` = components of `G2`), 2 when some side has an edge, 3 otherwise.
fn join_witness(g1: &Part, g2: &Part) -> Vec<usize> {
    if g1.vertices.len() == 1 {
        let mut w = vec![g1.vertices[0]];
        w.extend(g2.components.iter().map(|c| c[0]));
        return w;
    }
    if let Some((u, v)) = g2.edge.or(g1.edge) {
        return vec![u, v];
    }
    vec![g1.vertices[0], g1.vertices[1], g2.vertices[0]]
}

fn annotate(g: &Multigraph, node: &mut DecompNode, fold: Fold) {
    for c in &mut node.children {
        annotate(g, c, fold);
    }
    let set = VertexSet::from_ids(g.order(), node.vertices.iter().copied());
    node.components = components_within(g, &set).len();
    let mut witness = match &node.kind {
        NodeKind::Leaf => node.vertices.clone(),
        NodeKind::Union => node
            .children
            .iter()
            .flat_map(|c| c.witness.iter().copied())
            .collect(),
        NodeKind::Join => {
            let mut parts: Vec<&DecompNode> = node.children.iter().collect();
            parts.sort_by_key(|c| (c.size(), c.vertices[0]));
            let mut parts: Vec<Part> = parts
                .into_iter()
                .map(|c| part_of(g, c.vertices.clone()))
                .collect();
            if fold == Fold::Right {
                parts.reverse();
            }
            let mut acc = parts.remove(0);
            let mut witness = Vec::new();
            for next in parts {
                let (g1, g2) = if acc.vertices.len() <= next.vertices.len() {
                    (&acc, &next)
                } else {
                    (&next, &acc)
                };
                witness = join_witness(g1, g2);
                let mut all = acc.vertices.clone();
                all.extend(&next.vertices);
                all.sort_unstable();
                acc = part_of(g, all);
            }
            witness
        }
        NodeKind::Spider { kind, pairs } => {
            let mut k: Vec<usize> = pairs.iter().map(|&(k, _)| k).collect();
            k.sort_unstable();
            let mut w = vec![k[0], k[1]];
            if !(*kind == SpiderKind::Fat && k.len() >= 3) {
                w.extend(pairs.iter().map(|&(_, s)| s));
            }
            w
        }
    };
    witness.sort_unstable();
    witness.dedup();
    node.hn = witness.len();
    node.witness = witness;
}

/// Reconstructs the graph described by a decomposition tree on `n` vertices.
pub fn rebuild(node: &DecompNode, n: usize) -> Multigraph {
    let mut edges = Vec::new();
    collect_edges(node, &mut edges);
    Multigraph::from_edges(n, edges).expect("decomposition edges are valid")
}

fn collect_edges(node: &DecompNode, edges: &mut Vec<(usize, usize)>) {
    for c in &node.children {
        collect_edges(c, edges);
    }
    match &node.kind {
        NodeKind::Leaf | NodeKind::Union => {}
        NodeKind::Join => {
            for (i, a) in node.children.iter().enumerate() {
                for b in &node.children[i + 1..] {
                    for &u in &a.vertices {
                        edges.extend(b.vertices.iter().map(|&v| (u, v)));
                    }
                }
            }
        }
        NodeKind::Spider { kind, pairs } => {
            for (i, &(k1, s1)) in pairs.iter().enumerate() {
                for &(k2, _) in &pairs[i + 1..] {
                    edges.push((k1, k2));
                }
                for &(k2, _) in pairs {
                    let linked = match kind {
                        SpiderKind::Thin => k2 == k1,
                        SpiderKind::Fat => k2 != k1,
                    };
                    if linked {
                        edges.push((s1, k2));
                    }
                }
                for head in &node.children {
                    edges.extend(head.vertices.iter().map(|&r| (r, k1)));
                }
            }
        }
    }
}
