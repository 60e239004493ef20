//! Incremental cycle-convexity contamination.
//!
//! Contaminated vertices are kept in a union-find forest whose roots own the
//! per-(uncontaminated vertex, component) endpoint counters. A counter reaching two
//! means the vertex closes a cycle. Vertices are admitted in synchronous rounds so
//! that `step(v)` is exactly the least `k` with `v` in `I^k(S)`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Multigraph;
use crate::set::VertexSet;

const NEVER: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContaminationTrace {
    /// `Some(0)` for seeds, `Some(k)` for vertices first in `I^k(S)`, `None` if never reached.
    pub steps: Vec<Option<u32>>,
    /// For contaminated non-seeds: a cycle through the vertex (listed starting with it)
    /// whose other vertices all have strictly smaller steps. Empty when witnesses
    /// were not requested.
    pub witnesses: Vec<Option<Vec<usize>>>,
    pub hull: VertexSet,
}

impl ContaminationTrace {
    pub fn rounds(&self) -> u32 {
        self.steps.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Vertices contaminated at exactly `step`, ascending.
    pub fn layer(&self, step: u32) -> Vec<usize> {
        (0..self.steps.len())
            .filter(|&v| self.steps[v] == Some(step))
            .collect()
    }
}

struct Spread<'g> {
    g: &'g Multigraph,
    step: Vec<u32>,
    inserted: Vec<bool>,
    parent: Vec<usize>,
    /// Per component root: uncontaminated vertices holding a counter keyed by it.
    watchers: Vec<Vec<usize>>,
    /// Per uncontaminated vertex: `(component root, endpoints into it)`.
    counters: Vec<Vec<(usize, u32)>>,
    next: Vec<usize>,
    queued: Vec<bool>,
}

impl<'g> Spread<'g> {
    fn new(g: &'g Multigraph) -> Self {
        let n = g.order();
        Spread {
            g,
            step: vec![NEVER; n],
            inserted: vec![false; n],
            parent: (0..n).collect(),
            watchers: vec![Vec::new(); n],
            counters: vec![Vec::new(); n],
            next: Vec::new(),
            queued: vec![false; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn add_count(&mut self, w: usize, root: usize, by: u32) {
        let total = match self.counters[w].iter_mut().find(|(r, _)| *r == root) {
            Some(entry) => {
                entry.1 += by;
                entry.1
            }
            None => {
                self.counters[w].push((root, by));
                self.watchers[root].push(w);
                by
            }
        };
        if total >= 2 && !self.queued[w] {
            self.queued[w] = true;
            self.next.push(w);
        }
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (keep, gone) = if self.watchers[ra].len() >= self.watchers[rb].len() {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[gone] = keep;
        for w in std::mem::take(&mut self.watchers[gone]) {
            if self.step[w] != NEVER {
                continue;
            }
            if let Some(pos) = self.counters[w].iter().position(|&(r, _)| r == gone) {
                let (_, c) = self.counters[w].swap_remove(pos);
                self.add_count(w, keep, c);
            }
        }
    }

    fn insert(&mut self, v: usize) {
        self.inserted[v] = true;
        self.counters[v].clear();
        let g = self.g;
        for &(w, _) in g.neighbors(v) {
            if self.inserted[w] {
                self.union(v, w);
            }
        }
        let root = self.find(v);
        for &(w, m) in g.neighbors(v) {
            if self.step[w] == NEVER {
                self.add_count(w, root, m);
            }
        }
    }

    fn run(&mut self, seeds: &VertexSet) {
        let mut batch: Vec<usize> = seeds.iter().collect();
        let mut k = 0u32;
        while !batch.is_empty() {
            for &v in &batch {
                self.step[v] = k;
            }
            for &v in &batch {
                self.insert(v);
            }
            let mut fresh: Vec<usize> = self
                .next
                .drain(..)
                .filter(|&w| self.step[w] == NEVER)
                .collect();
            fresh.sort_unstable();
            batch = fresh;
            k += 1;
        }
    }
}

pub(crate) fn spread(
    g: &Multigraph,
    seeds: &VertexSet,
    with_witnesses: bool,
) -> ContaminationTrace {
    let n = g.order();
    let mut state = Spread::new(g);
    state.run(seeds);
    let steps: Vec<Option<u32>> = state
        .step
        .iter()
        .map(|&s| (s != NEVER).then_some(s))
        .collect();
    let hull = VertexSet::from_ids(n, (0..n).filter(|&v| steps[v].is_some()));
    let witnesses = if with_witnesses {
        witnesses(g, &steps)
    } else {
        Vec::new()
    };
    ContaminationTrace {
        steps,
        witnesses,
        hull,
    }
}

/// Rebuilds one witness cycle per contaminated non-seed, layer by layer, from the
/// components of `G[{step < k}]`.
fn witnesses(g: &Multigraph, steps: &[Option<u32>]) -> Vec<Option<Vec<usize>>> {
    let n = g.order();
    let mut out = vec![None; n];
    let max_step = steps.iter().flatten().copied().max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let below = |v: usize, k: u32| steps[v].is_some_and(|s| s < k);

    for k in 1..=max_step {
        // Merge the layer k - 1 into the forest of earlier layers.
        for v in (0..n).filter(|&v| steps[v] == Some(k - 1)) {
            for w in g.neighbor_ids(v) {
                if below(w, k) {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                    parent[a] = b;
                }
            }
        }
        for v in (0..n).filter(|&v| steps[v] == Some(k)) {
            let mut first_by_root: Vec<(usize, usize)> = Vec::new();
            let mut cycle = None;
            for &(w, m) in g.neighbors(v) {
                if !below(w, k) {
                    continue;
                }
                if m >= 2 {
                    cycle = Some(vec![v, w]);
                    break;
                }
                let r = find(&mut parent, w);
                if let Some(&(_, x)) = first_by_root.iter().find(|&&(root, _)| root == r) {
                    let path = bfs_path(g, x, w, |u| below(u, k));
                    let mut c = vec![v];
                    c.extend(path);
                    cycle = Some(c);
                    break;
                }
                first_by_root.push((r, w));
            }
            debug_assert!(cycle.is_some(), "vertex {v} contaminated without a witness");
            out[v] = cycle;
        }
    }
    out
}

/// Shortest `from -> to` path inside the vertices admitted by `allowed`.
fn bfs_path(g: &Multigraph, from: usize, to: usize, allowed: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut prev = vec![usize::MAX; g.order()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for w in g.neighbor_ids(u) {
            if prev[w] == usize::MAX && allowed(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}
