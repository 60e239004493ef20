//! Backward lifting: a hull set of the graph after a step plus one vertex is a
//! hull set of the graph before it. Every lifted set is verified.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{reduce, Operation, ReductionScript, TerminalKind, WorkGraph};
use crate::convexity::{hull_cc, is_hull_set};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub bound: usize,
    pub witness: VertexSet,
    pub script: ReductionScript,
}

/// Hull set of a trivial terminal graph: nothing for the empty graph, the lower
/// vertex of the two-vertex graph.
pub fn terminal_hull(script: &ReductionScript) -> Result<Vec<usize>> {
    match script.terminal_kind {
        TerminalKind::Empty => Ok(Vec::new()),
        TerminalKind::TwoVertex => Ok(vec![script.terminal.vertices[0]]),
        TerminalKind::Nontrivial => Err(Error::NontrivialTerminal(script.terminal.vertices.len())),
    }
}

fn hull_full(g: &WorkGraph, s: &BTreeSet<usize>) -> Result<bool> {
    let (dense, ids) = g.to_dense();
    let mut set = VertexSet::empty(dense.order());
    for v in s {
        let i = ids
            .binary_search(v)
            .map_err(|_| Error::Internal(format!("lifted vertex {v} is not in the graph")))?;
        set.insert(i);
    }
    Ok(is_hull_set(&dense, &set))
}

/// Walks the script backwards from a hull set of its terminal graph.
pub fn lift_hull_set(script: &ReductionScript, terminal: &[usize]) -> Result<Vec<usize>> {
    let graphs = script.replay()?;
    let mut s: BTreeSet<usize> = terminal.iter().copied().collect();
    let last = graphs.last().expect("replay includes the input");
    if !hull_full(last, &s).unwrap_or(false) {
        return Err(Error::Precondition(format!(
            "{terminal:?} is not a hull set of the terminal graph"
        )));
    }
    for (i, step) in script.steps.iter().enumerate().rev() {
        let (pre, post) = (&graphs[i], &graphs[i + 1]);
        s = match &step.op {
            Operation::M4 { u, .. } | Operation::M3 { u, .. } => with(&s, *u),
            Operation::M2Cycle { cycle } => with(&s, *cycle.iter().min().expect("non-empty cycle")),
            Operation::M2Path { path, .. } => with(&s, path[0]),
            Operation::T {
                x,
                y,
                z,
                x_out,
                y_out,
                z_out,
                w,
            } => lift_t(pre, post, &s, [*x, *y, *z], *x_out, *y_out, *z_out, *w)?,
        };
        if !hull_full(pre, &s)? {
            return Err(Error::Internal(format!(
                "lifting across {} at step {i} did not give a hull set",
                step.op.name()
            )));
        }
    }
    Ok(s.into_iter().collect())
}

fn with(s: &BTreeSet<usize>, v: usize) -> BTreeSet<usize> {
    let mut out = s.clone();
    out.insert(v);
    out
}

/// Lifts across a T step. First makes sure `w` is not in the set (dropping it,
/// or swapping it for another vertex of the post-graph), then adds the vertex of
/// the triangle suggested by how `w` was contaminated, falling back to the
/// other triangle vertices.
#[allow(clippy::too_many_arguments)]
fn lift_t(
    pre: &WorkGraph,
    post: &WorkGraph,
    s: &BTreeSet<usize>,
    [x, y, z]: [usize; 3],
    x_out: [usize; 2],
    y_out: [usize; 2],
    z_out: [usize; 2],
    w: usize,
) -> Result<BTreeSet<usize>> {
    let (dense, ids) = post.to_dense();
    let index = |v: usize| ids.binary_search(&v).expect("vertex of the post-graph");
    let dense_set =
        |s: &BTreeSet<usize>| VertexSet::from_ids(dense.order(), s.iter().map(|&v| index(v)));
    let mut s = s.clone();
    if s.remove(&w) && !hull_full(post, &s)? {
        let trace = hull_cc(&dense, &dense_set(&with(&s, w)));
        let mut candidates: Vec<usize> = ids
            .iter()
            .copied()
            .filter(|&v| v != w && !s.contains(&v))
            .collect();
        candidates.sort_by_key(|&v| (trace.steps[index(v)], v));
        let mut swapped = false;
        for c in candidates {
            if hull_full(post, &with(&s, c))? {
                s.insert(c);
                swapped = true;
                break;
            }
        }
        if !swapped {
            let mut fallback = s.clone();
            fallback.extend([y, z]);
            return Ok(fallback);
        }
    }
    let trace = hull_cc(&dense, &dense_set(&s));
    let step_of = |v: usize| trace.steps[index(v)];
    let k = step_of(w).ok_or_else(|| Error::Internal("w outside the hull of a hull set".into()))?;
    let cycle: Vec<usize> = trace.witnesses[index(w)]
        .as_ref()
        .ok_or_else(|| Error::Internal("w has no witness cycle".into()))?
        .iter()
        .map(|&i| ids[i])
        .collect();
    let (u, v) = (cycle[1], cycle[cycle.len() - 1]);
    let both_in = |side: [usize; 2]| side.contains(&u) && side.contains(&v);
    let default = if both_in(y_out) && !both_in(z_out) {
        z
    } else {
        y
    };
    let before = |p: usize| step_of(p).is_some_and(|p| p < k);
    let choice = match (before(x_out[0]), before(x_out[1])) {
        (true, false) if cycle.contains(&x_out[0]) => x,
        (false, true) if cycle.contains(&x_out[1]) => x,
        _ => default,
    };
    let mut order = vec![choice];
    order.extend([x, y, z].into_iter().filter(|&c| c != choice));
    for c in order {
        let lifted = with(&s, c);
        if hull_full(pre, &lifted)? {
            return Ok(lifted);
        }
    }
    Err(Error::Internal(format!(
        "no vertex of triangle ({x}, {y}, {z}) lifts the hull set across T"
    )))
}

/// Reduces `g`, lifts the terminal hull set and verifies the result on `g`.
pub fn hn_upper_4regular(g: &Multigraph) -> Result<UpperBound> {
    let script = reduce(g)?;
    let terminal = terminal_hull(&script)?;
    let lifted = lift_hull_set(&script, &terminal)?;
    let witness = VertexSet::from_ids(g.order(), lifted);
    if !is_hull_set(g, &witness) {
        return Err(Error::Internal(format!(
            "lifted set {witness} is not a hull set"
        )));
    }
    Ok(UpperBound {
        bound: witness.len(),
        witness,
        script,
    })
}
