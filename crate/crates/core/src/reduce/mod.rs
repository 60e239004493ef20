//! Reduction of 4-regular multigraphs by the local operations M4, M2, M3 and T,
//! and backward lifting of hull sets along the recorded script.
//!
//! Vertex ids are persistent: removed vertices keep their ids out of use and the
//! vertex created by each T step takes the next unused id, starting at `n`.

mod lift;

pub use lift::{hn_upper_4regular, lift_hull_set, terminal_hull, UpperBound};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphJson, Multigraph};

/// Working graph over persistent ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WorkGraph {
    adj: BTreeMap<usize, BTreeMap<usize, u32>>,
}

impl WorkGraph {
    pub fn from_multigraph(g: &Multigraph) -> Self {
        let mut adj: BTreeMap<usize, BTreeMap<usize, u32>> =
            g.vertices().map(|v| (v, BTreeMap::new())).collect();
        for (u, v, m) in g.pairs() {
            adj.get_mut(&u).expect("vertex").insert(v, m);
            adj.get_mut(&v).expect("vertex").insert(u, m);
        }
        WorkGraph { adj }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn mu(&self, u: usize, v: usize) -> u32 {
        self.adj
            .get(&u)
            .and_then(|m| m.get(&v))
            .copied()
            .unwrap_or(0)
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[&v].values().sum()
    }

    /// Neighbours of `v` with multiplicity, ascending.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.adj[&v].iter().map(|(&w, &m)| (w, m))
    }

    /// Neighbours of `v` outside `skip`, each repeated by multiplicity.
    fn endpoints_outside(&self, v: usize, skip: &[usize]) -> Vec<usize> {
        self.neighbors(v)
            .filter(|(w, _)| !skip.contains(w))
            .flat_map(|(w, m)| std::iter::repeat_n(w, m as usize))
            .collect()
    }

    /// `(u, v, mu)` with `u < v`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize, u32)> {
        self.adj
            .iter()
            .flat_map(|(&u, m)| {
                m.iter()
                    .filter(move |(&v, _)| u < v)
                    .map(move |(&v, &mu)| (u, v, mu))
            })
            .collect()
    }

    fn remove_vertex(&mut self, v: usize) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for w in nbrs.keys() {
                if let Some(m) = self.adj.get_mut(w) {
                    m.remove(&v);
                }
            }
        }
    }

    fn add_vertex(&mut self, v: usize) {
        self.adj.entry(v).or_default();
    }

    fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::Internal(format!(
                "reduction would create a loop at {a}"
            )));
        }
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::Internal(format!(
                "edge {a}-{b} touches a removed vertex"
            )));
        }
        *self.adj.get_mut(&a).expect("vertex").entry(b).or_default() += 1;
        *self.adj.get_mut(&b).expect("vertex").entry(a).or_default() += 1;
        Ok(())
    }

    /// Dense copy: vertex `i` of the result is `ids[i]` here.
    pub fn to_dense(&self) -> (Multigraph, Vec<usize>) {
        let ids: Vec<usize> = self.vertices().collect();
        let index = |v: usize| ids.binary_search(&v).expect("known vertex");
        let g = Multigraph::from_multiplicities(
            ids.len(),
            self.pairs()
                .into_iter()
                .map(|(u, v, m)| (index(u), index(v), m)),
        )
        .expect("work graph is loopless");
        (g, ids)
    }

    pub fn check_four_regular(&self) -> Result<()> {
        for v in self.vertices() {
            let degree = self.degree(v) as usize;
            if degree != 4 {
                return Err(Error::NotFourRegular { vertex: v, degree });
            }
        }
        Ok(())
    }

    /// Replays a recorded step.
    pub fn apply(&mut self, step: &ReductionStep) -> Result<()> {
        for &v in &step.removed {
            self.remove_vertex(v);
        }
        if let Some(w) = step.added_vertex {
            self.add_vertex(w);
        }
        for &[a, b] in &step.added_edges {
            self.add_edge(a, b)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Operation {
    /// A component on `{u, v}` with `mu(uv) = 4`.
    M4 { u: usize, v: usize },
    /// A component whose edges all have multiplicity 2, listed along the cycle.
    M2Cycle { cycle: Vec<usize> },
    /// A maximal path of multiplicity-2 edges from `u = path[0]` to `v`, with the
    /// outside neighbours `x, x'` of `u` and `y, y'` of `v`.
    M2Path {
        path: Vec<usize>,
        x: [usize; 2],
        y: [usize; 2],
    },
    /// `mu(uv) = 3`, `x` the other neighbour of `u`, `y` that of `v`; when `x = y`,
    /// `z` holds the two remaining neighbours of `x`.
    M3 {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
        z: Option<[usize; 2]>,
    },
    /// Triangle `(x, y, z)` with outside neighbours, replaced by edge `x1 x2` and
    /// a new vertex `w` joined to `y1, y2, z1, z2`.
    T {
        x: usize,
        y: usize,
        z: usize,
        x_out: [usize; 2],
        y_out: [usize; 2],
        z_out: [usize; 2],
        w: usize,
    },
}

impl Operation {
    pub fn name(&self) -> &'static str {
        match self {
            Operation::M4 { .. } => "M4",
            Operation::M2Cycle { .. } => "M2-cycle",
            Operation::M2Path { .. } => "M2-path",
            Operation::M3 { .. } => "M3",
            Operation::T { .. } => "T",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    #[serde(flatten)]
    pub op: Operation,
    pub removed: Vec<usize>,
    pub added_edges: Vec<[usize; 2]>,
    pub added_vertex: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TerminalKind {
    Empty,
    /// Two vertices joined by an edge of multiplicity 4.
    TwoVertex,
    /// Any other graph admitting no operation (not reachable from planar inputs).
    Nontrivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminalGraph {
    pub vertices: Vec<usize>,
    /// One entry per edge copy.
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionScript {
    pub input: GraphJson,
    pub steps: Vec<ReductionStep>,
    pub terminal: TerminalGraph,
    pub terminal_kind: TerminalKind,
}

impl ReductionScript {
    /// The graphs before the first step, between steps, and the terminal graph.
    pub fn replay(&self) -> Result<Vec<WorkGraph>> {
        let g = self.input.clone().into_graph()?;
        let mut current = WorkGraph::from_multigraph(&g);
        let mut out = vec![current.clone()];
        for step in &self.steps {
            current.apply(step)?;
            out.push(current.clone());
        }
        Ok(out)
    }
}

/// Applies the highest-priority operation (M4 > M2 > M3 > T) until none applies,
/// choosing the candidate with the lowest vertex ids.
pub fn reduce(g: &Multigraph) -> Result<ReductionScript> {
    let mut work = WorkGraph::from_multigraph(g);
    work.check_four_regular()?;
    let mut next_id = g.order();
    let mut steps = Vec::new();
    while let Some(step) = next_step(&work, next_id)? {
        work.apply(&step)?;
        if let Err(e) = work.check_four_regular() {
            return Err(Error::Internal(format!(
                "{} broke 4-regularity: {e}",
                step.op.name()
            )));
        }
        if step.added_vertex.is_some() {
            next_id += 1;
        }
        steps.push(step);
    }
    let terminal_kind = match work.order() {
        0 => TerminalKind::Empty,
        2 if work.pairs().len() == 1 => TerminalKind::TwoVertex,
        _ => TerminalKind::Nontrivial,
    };
    let terminal = TerminalGraph {
        vertices: work.vertices().collect(),
        edges: work
            .pairs()
            .into_iter()
            .flat_map(|(u, v, m)| std::iter::repeat_n([u, v], m as usize))
            .collect(),
    };
    Ok(ReductionScript {
        input: g.to_json(),
        steps,
        terminal,
        terminal_kind,
    })
}

fn next_step(g: &WorkGraph, next_id: usize) -> Result<Option<ReductionStep>> {
    let pairs = g.pairs();
    if let Some(&(u, v, _)) = pairs.iter().find(|&&(_, _, m)| m == 4) {
        if g.order() > 2 {
            return Ok(Some(ReductionStep {
                op: Operation::M4 { u, v },
                removed: vec![u, v],
                added_edges: Vec::new(),
                added_vertex: None,
            }));
        }
    }
    if let Some(step) = m2(g) {
        return Ok(Some(step));
    }
    for &(u, v, _) in pairs.iter().filter(|&&(_, _, m)| m == 3) {
        if let Some(step) = m3(g, u, v) {
            return Ok(Some(step));
        }
    }
    Ok(t(g, &pairs, next_id))
}

/// Components of the multiplicity-2 subgraph, by lowest vertex.
fn m2(g: &WorkGraph) -> Option<ReductionStep> {
    let double = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .filter(|&(_, m)| m == 2)
            .map(|(w, _)| w)
            .collect()
    };
    let mut seen = BTreeSet::new();
    for start in g.vertices() {
        if seen.contains(&start) || double(start).is_empty() {
            continue;
        }
        // Collect the component, then order it along the path or cycle.
        let mut comp = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in double(v) {
                if comp.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.extend(comp.iter().copied());
        let ends: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| double(v).len() == 1)
            .collect();
        let first = ends.first().copied().unwrap_or(start);
        let mut walk = vec![first];
        while walk.len() < comp.len() {
            let last = walk[walk.len() - 1];
            let next = double(last)
                .into_iter()
                .find(|w| !walk.contains(w))
                .expect("path or cycle of doubled edges");
            walk.push(next);
        }
        let removed: Vec<usize> = comp.iter().copied().collect();
        if ends.is_empty() {
            return Some(ReductionStep {
                op: Operation::M2Cycle { cycle: walk },
                removed,
                added_edges: Vec::new(),
                added_vertex: None,
            });
        }
        let (u, v) = (walk[0], walk[walk.len() - 1]);
        let xs = endpoints_off_path(g, u, walk[1]);
        let ys = endpoints_off_path(g, v, walk[walk.len() - 2]);
        let (x, y) = ([xs[0], xs[1]], [ys[0], ys[1]]);
        let added = if g.mu(u, v) == 1 {
            // u and v are also joined directly: the strand x - u - v - y becomes x - y.
            let xo = if x[0] == v { x[1] } else { x[0] };
            let yo = if y[0] == u { y[1] } else { y[0] };
            vec![[xo, yo]]
        } else {
            vec![x, y]
        };
        if added.iter().any(|e| e[0] == e[1]) {
            continue;
        }
        return Some(ReductionStep {
            op: Operation::M2Path { path: walk, x, y },
            removed,
            added_edges: added,
            added_vertex: None,
        });
    }
    None
}

/// Edge endpoints at a path end `u` other than the doubled edge to `along`.
fn endpoints_off_path(g: &WorkGraph, u: usize, along: usize) -> Vec<usize> {
    let mut out = g.endpoints_outside(u, &[]);
    for _ in 0..2 {
        let i = out.iter().position(|&w| w == along).expect("doubled edge");
        out.remove(i);
    }
    out
}

fn m3(g: &WorkGraph, u: usize, v: usize) -> Option<ReductionStep> {
    let x = g.endpoints_outside(u, &[v])[0];
    let y = g.endpoints_outside(v, &[u])[0];
    if x != y {
        return Some(ReductionStep {
            op: Operation::M3 {
                u,
                v,
                x,
                y,
                z: None,
            },
            removed: vec![u, v],
            added_edges: vec![[x, y]],
            added_vertex: None,
        });
    }
    let zs = g.endpoints_outside(x, &[u, v]);
    if zs[0] == zs[1] {
        return None;
    }
    let z = [zs[0], zs[1]];
    Some(ReductionStep {
        op: Operation::M3 {
            u,
            v,
            x,
            y,
            z: Some(z),
        },
        removed: vec![u, v, x],
        added_edges: vec![z],
        added_vertex: None,
    })
}

/// Lowest triangle `a < b < c` of simple edges; the roles of `x` are tried in
/// the order `a, b, c` and the first one whose outside neighbours differ is used.
fn t(g: &WorkGraph, pairs: &[(usize, usize, u32)], w: usize) -> Option<ReductionStep> {
    for &(a, b, m) in pairs {
        if m != 1 {
            continue;
        }
        for (c, mc) in g.neighbors(b).filter(|&(c, _)| c > b).collect::<Vec<_>>() {
            if mc != 1 || g.mu(a, c) != 1 {
                continue;
            }
            for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
                let tri = [x, y, z];
                let out = |p: usize| {
                    let e = g.endpoints_outside(p, &tri);
                    [e[0], e[1]]
                };
                let (x_out, y_out, z_out) = (out(x), out(y), out(z));
                if x_out[0] == x_out[1] {
                    continue;
                }
                let mut added_edges = vec![x_out];
                added_edges.extend(y_out.iter().chain(&z_out).map(|&n| [w, n]));
                return Some(ReductionStep {
                    op: Operation::T {
                        x,
                        y,
                        z,
                        x_out,
                        y_out,
                        z_out,
                        w,
                    },
                    removed: vec![a, b, c],
                    added_edges,
                    added_vertex: Some(w),
                });
            }
        }
    }
    None
}
