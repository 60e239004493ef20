//! Random instance generators for tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{make_spider, Multigraph, SpiderKind};
use crate::plane::{embedded_grid, medial, trace_faces, PlaneGraph, RotationSystem};
use crate::set::VertexSet;

/// Each pair independently present with probability `p`, multiplicity uniform
/// in `1..=max_mu`.
pub fn random_multigraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    p: f64,
    max_mu: u32,
) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(1..=max_mu.max(1))));
            }
        }
    }
    Multigraph::from_multiplicities(n, edges).expect("valid random edges")
}

/// Each vertex after the first attaches to an earlier one with probability
/// `p_attach`, giving a random forest.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, n: usize, p_attach: f64) -> Multigraph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(p_attach) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    Multigraph::from_edges(n, edges).expect("valid random edges")
}

/// Connected chordal graph: each new vertex is joined to a random clique
/// around a random earlier vertex, so the reverse insertion order is a
/// perfect elimination ordering.
pub fn random_chordal<R: Rng + ?Sized>(rng: &mut R, n: usize, p_grow: f64) -> Multigraph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut around = adj[u].clone();
        around.shuffle(rng);
        for w in around {
            if rng.gen_bool(p_grow) && clique.iter().all(|c| adj[w].contains(c)) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    Multigraph::from_edges(n, edges).expect("valid random edges")
}

/// P4-sparse graph built top-down from a random decomposition tree.
pub fn random_p4sparse<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Multigraph {
    if n <= 1 {
        return Multigraph::empty(n);
    }
    let choice = if n >= 4 {
        rng.gen_range(0..3)
    } else {
        rng.gen_range(0..2)
    };
    match choice {
        0 | 1 => {
            let left = rng.gen_range(1..n);
            let a = random_p4sparse(rng, left);
            let b = random_p4sparse(rng, n - left);
            let joined = a.disjoint_union(&b);
            if choice == 0 {
                return joined;
            }
            let mut edges = joined.edge_list();
            edges.extend((0..left).flat_map(|u| (left..n).map(move |v| (u, v))));
            Multigraph::from_edges(n, edges).expect("valid join")
        }
        _ => {
            let k = rng.gen_range(2..=n / 2);
            let head = random_p4sparse(rng, n - 2 * k);
            let kind = if rng.gen_bool(0.5) {
                SpiderKind::Thin
            } else {
                SpiderKind::Fat
            };
            make_spider(kind, k, &head).expect("valid spider")
        }
    }
}

/// Configuration-model 4-regular multigraph on `n >= 2` vertices without loops.
pub fn random_four_regular<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Multigraph {
    assert!(n >= 2, "a loopless 4-regular graph needs two vertices");
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v; 4]).collect();
        stubs.shuffle(rng);
        let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().all(|&(a, b)| a != b) {
            return Multigraph::from_edges(n, pairs).expect("loopless pairing");
        }
    }
}

/// Medial graph of a random spanning subgraph of the `m x n` grid in which no
/// vertex has degree 1; always 4-regular and plane.
pub fn random_planar_four_regular<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    n: usize,
    p_drop: f64,
) -> PlaneGraph {
    let base = crate::graph::make_grid(m, n).expect("positive dimensions");
    let mut degree: Vec<usize> = base.vertices().map(|v| base.degree(v)).collect();
    let mut kept: Vec<(usize, usize)> = base.edge_list();
    kept.shuffle(rng);
    let mut dropped = Vec::new();
    for &(u, v) in &kept {
        if degree[u] > 2 && degree[v] > 2 && rng.gen_bool(p_drop) {
            degree[u] -= 1;
            degree[v] -= 1;
            dropped.push((u, v));
        }
    }
    let pg = embedded_grid(m, n, |u, v| !dropped.contains(&(u, v))).expect("positive dimensions");
    medial(&pg).expect("no vertex of degree 1")
}

/// `g` with an independently shuffled rotation at every vertex. The result is
/// cellularly embedded on some orientable surface, not necessarily the sphere.
pub fn random_embedding<R: Rng + ?Sized>(rng: &mut R, g: &Multigraph) -> PlaneGraph {
    let mut rotations = vec![Vec::new(); g.order()];
    let mut twins = Vec::new();
    for (u, v) in g.edge_list() {
        let d = 2 * twins.len();
        rotations[u].push(d);
        rotations[v].push(d + 1);
        twins.push([d, d + 1]);
    }
    for rot in &mut rotations {
        rot.shuffle(rng);
    }
    let rs = RotationSystem {
        vertices: g.order(),
        rotations,
        twins,
    };
    trace_faces(&rs).expect("darts of a loopless graph")
}

/// Identifies vertex `a` of `g1` with vertex `b` of `g2`. Vertices of `g1` keep
/// their ids; those of `g2` follow, skipping `b`. Returns the graph and the id
/// of the shared vertex.
pub fn glue_at_vertex(g1: &Multigraph, a: usize, g2: &Multigraph, b: usize) -> (Multigraph, usize) {
    let n1 = g1.order();
    let map = |v: usize| match v.cmp(&b) {
        std::cmp::Ordering::Less => n1 + v,
        std::cmp::Ordering::Equal => a,
        std::cmp::Ordering::Greater => n1 + v - 1,
    };
    let mut edges: Vec<(usize, usize, u32)> = g1.pairs().collect();
    edges.extend(g2.pairs().map(|(u, v, m)| (map(u), map(v), m)));
    let g = Multigraph::from_multiplicities(n1 + g2.order() - 1, edges)
        .expect("glued edges are loopless");
    (g, a)
}

/// Each vertex independently with probability `p`.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> VertexSet {
    VertexSet::from_ids(n, (0..n).filter(|_| rng.gen_bool(p)))
}
