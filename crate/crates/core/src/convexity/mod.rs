//! Interval-function convexities and the cycle convexity.
//!
//! A vertex outside `S` joins the cycle interval of `S` when some cycle has it as
//! its only vertex outside `S`. Equivalently, it sends at least two edge endpoints
//! (counting multiplicity) into a single component of `G[S]`. The second form is
//! what every routine here evaluates.

mod grid;
mod spread;

pub use grid::{grid_perimeter, is_boxed};
pub use spread::ContaminationTrace;

use crate::graph::Multigraph;
use crate::set::VertexSet;

/// A convexity defined by an interval function on `0..order()`.
///
/// The hull is the fixed point of the interval function; implementations may
/// override [`Convexity::hull`] with something faster than plain iteration.
pub trait Convexity: Sync {
    fn order(&self) -> usize;

    fn interval(&self, set: &VertexSet) -> VertexSet;

    fn hull(&self, set: &VertexSet) -> VertexSet {
        let mut current = set.clone();
        loop {
            let next = self.interval(&current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    fn is_convex(&self, set: &VertexSet) -> bool {
        self.interval(set) == *set
    }

    fn is_coconvex(&self, set: &VertexSet) -> bool {
        self.is_convex(&set.complement())
    }

    fn is_hull_set(&self, set: &VertexSet) -> bool {
        self.hull(set).is_full()
    }

    /// Vertices `w` whose singleton `{w}` is co-convex. Every hull set contains them.
    fn forced(&self) -> VertexSet {
        let all = VertexSet::full(self.order());
        VertexSet::from_ids(
            self.order(),
            (0..self.order()).filter(|&w| self.is_convex(&all.without(w))),
        )
    }

    /// A valid lower bound on the hull number.
    fn lower_bound(&self) -> usize {
        let forced = self.forced();
        let extra = usize::from(!self.hull(&forced).is_full());
        forced.len() + extra
    }
}

/// Cycle convexity on a loopless multigraph.
#[derive(Debug, Clone, Copy)]
pub struct CycleConvexity<'g> {
    pub graph: &'g Multigraph,
}

impl<'g> CycleConvexity<'g> {
    pub fn new(graph: &'g Multigraph) -> Self {
        CycleConvexity { graph }
    }
}

impl Convexity for CycleConvexity<'_> {
    fn order(&self) -> usize {
        self.graph.order()
    }

    fn interval(&self, set: &VertexSet) -> VertexSet {
        interval_cc(self.graph, set)
    }

    fn hull(&self, set: &VertexSet) -> VertexSet {
        spread::spread(self.graph, set, false).hull
    }

    fn forced(&self) -> VertexSet {
        crate::graph::vertices_on_cycles(self.graph).complement()
    }

    fn lower_bound(&self) -> usize {
        crate::exact::lower_bound(self.graph)
    }
}

/// One application of the cycle interval function.
pub fn interval_cc(g: &Multigraph, s: &VertexSet) -> VertexSet {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    for (i, c) in crate::graph::components_within(g, s).iter().enumerate() {
        for v in c.iter() {
            comp[v] = i;
        }
    }
    let mut out = s.clone();
    let mut hits: Vec<(usize, u32)> = Vec::new();
    for v in (0..n).filter(|&v| !s.contains(v)) {
        hits.clear();
        let mut closes = false;
        for &(w, m) in g.neighbors(v) {
            if comp[w] == usize::MAX {
                continue;
            }
            match hits.iter_mut().find(|(c, _)| *c == comp[w]) {
                Some(entry) => entry.1 += m,
                None => hits.push((comp[w], m)),
            }
            if hits.iter().any(|&(_, k)| k >= 2) {
                closes = true;
                break;
            }
        }
        if closes {
            out.insert(v);
        }
    }
    out
}

/// Convex hull of `s` with contamination steps and witness cycles.
pub fn hull_cc(g: &Multigraph, s: &VertexSet) -> ContaminationTrace {
    spread::spread(g, s, true)
}

pub fn is_convex_cc(g: &Multigraph, s: &VertexSet) -> bool {
    interval_cc(g, s) == *s
}

pub fn is_coconvex_cc(g: &Multigraph, s: &VertexSet) -> bool {
    is_convex_cc(g, &s.complement())
}

pub fn is_hull_set(g: &Multigraph, s: &VertexSet) -> bool {
    CycleConvexity::new(g).is_hull_set(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_gk, make_grid, make_star};

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied())
    }

    #[test]
    fn interval_examples() {
        let k4 = make_complete(4);
        assert_eq!(
            interval_cc(&k4, &set(4, &[0, 1])).to_vec(),
            vec![0, 1, 2, 3]
        );
        let c4 = make_cycle(4).unwrap();
        assert_eq!(interval_cc(&c4, &set(4, &[0, 1])).to_vec(), vec![0, 1]);
        let digon = Multigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(interval_cc(&digon, &set(2, &[0])).to_vec(), vec![0, 1]);
        for g in [&k4, &c4, &digon] {
            assert!(interval_cc(g, &g.no_vertices()).is_empty());
        }
    }

    #[test]
    fn interval_is_one_application_only() {
        // Path of triangles: 0-1-2, 1-2-3, 2-3-4.
        let g = Multigraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
            .unwrap();
        assert_eq!(interval_cc(&g, &set(5, &[0, 1])).to_vec(), vec![0, 1, 2]);
        assert!(hull_cc(&g, &set(5, &[0, 1])).hull.is_full());
    }

    #[test]
    fn cycle_hulls() {
        for n in 3..=8 {
            let c = make_cycle(n).unwrap();
            let t = hull_cc(&c, &VertexSet::from_ids(n, 0..n - 1));
            assert!(t.hull.is_full());
            assert_eq!(t.steps[n - 1], Some(1));
            let t = hull_cc(&c, &VertexSet::from_ids(n, 0..n - 2));
            assert_eq!(t.hull.len(), n - 2);
            assert_eq!(t.steps[n - 1], None);
        }
    }

    #[test]
    fn gk_hull_from_first_k_minus_1_top_vertices() {
        for k in 2..=7 {
            let g = make_gk(k).unwrap();
            assert!(is_hull_set(&g, &VertexSet::from_ids(2 * k, 0..k - 1)));
        }
        let g3 = make_gk(3).unwrap();
        assert!(is_hull_set(&g3, &set(6, &[0, 1])));
    }

    #[test]
    fn co_convexity_examples() {
        let grid = make_grid(3, 3).unwrap();
        assert!(is_coconvex_cc(&grid, &set(9, &[0, 1, 2])));
        assert!(is_coconvex_cc(&grid, &set(9, &[1, 4, 7])));
        assert!(!is_coconvex_cc(&grid, &set(9, &[4])));
        let star = make_star(3);
        assert!(star
            .vertices()
            .all(|v| is_coconvex_cc(&star, &set(4, &[v]))));
        let k4 = make_complete(4);
        assert!(is_convex_cc(&k4, &k4.all()));
        assert!(is_convex_cc(&k4, &k4.no_vertices()));
    }

    #[test]
    fn hull_set_examples() {
        for n in 2..=7 {
            let k = make_complete(n);
            assert!(is_hull_set(&k, &set(n, &[n - 2, n - 1])));
        }
        let grid = make_grid(3, 4).unwrap();
        assert!(is_hull_set(&grid, &set(12, &[0, 1, 2, 3, 4, 8])));
        let c4 = make_cycle(4).unwrap();
        assert!(!is_hull_set(&c4, &set(4, &[0, 2])));
        assert!(!is_hull_set(&c4, &set(4, &[0, 1])));
    }

    #[test]
    fn forced_vertices_are_those_off_cycles() {
        let g = Multigraph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let conv = CycleConvexity::new(&g);
        assert_eq!(conv.forced().to_vec(), vec![3]);
        let all = g.all();
        let generic: Vec<usize> = (0..4)
            .filter(|&w| conv.is_convex(&all.without(w)))
            .collect();
        assert_eq!(generic, vec![3]);
    }
}
