//! Face convexity on the fixed faces of an embedding: a face whose incident
//! vertices all lie in `S` except one contaminates that last vertex.

use serde::Serialize;

use super::PlaneGraph;
use crate::convexity::Convexity;
use crate::exact::{solve, SolveReport};
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceTrace {
    /// `Some(0)` for seeds, `Some(k)` for vertices first reached in round `k`.
    pub steps: Vec<Option<u32>>,
    /// For contaminated non-seeds: the lowest-numbered face that triggered it.
    pub witness_face: Vec<Option<usize>>,
    pub hull: VertexSet,
}

#[derive(Debug, Clone, Copy)]
pub struct FaceConvexity<'a> {
    pub plane: &'a PlaneGraph,
}

impl<'a> FaceConvexity<'a> {
    pub fn new(plane: &'a PlaneGraph) -> Self {
        FaceConvexity { plane }
    }
}

impl Convexity for FaceConvexity<'_> {
    fn order(&self) -> usize {
        self.plane.order()
    }

    fn interval(&self, set: &VertexSet) -> VertexSet {
        interval_fc(self.plane, set)
    }

    fn hull(&self, set: &VertexSet) -> VertexSet {
        hull_fc(self.plane, set).hull
    }
}

pub fn interval_fc(pg: &PlaneGraph, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    for f in 0..pg.face_count() {
        if let Some(v) = sole_missing(pg.face_vertices(f), s) {
            out.insert(v);
        }
    }
    out
}

/// The unique vertex of `face` outside `s`, if there is exactly one.
fn sole_missing(face: &VertexSet, s: &VertexSet) -> Option<usize> {
    let mut outside = face.iter().filter(|&v| !s.contains(v));
    let v = outside.next()?;
    outside.next().is_none().then_some(v)
}

pub fn hull_fc(pg: &PlaneGraph, s: &VertexSet) -> FaceTrace {
    let n = pg.order();
    let faces_at: Vec<Vec<usize>> = (0..n).map(|v| pg.faces_at(v)).collect();
    let mut missing: Vec<usize> = (0..pg.face_count())
        .map(|f| {
            pg.face_vertices(f)
                .iter()
                .filter(|&v| !s.contains(v))
                .count()
        })
        .collect();
    let mut steps: Vec<Option<u32>> = (0..n).map(|v| s.contains(v).then_some(0)).collect();
    let mut witness_face = vec![None; n];
    let mut hull = s.clone();
    let mut ready: Vec<usize> = (0..pg.face_count()).filter(|&f| missing[f] == 1).collect();
    let mut k = 0;
    while !ready.is_empty() {
        k += 1;
        ready.sort_unstable();
        let mut batch = Vec::new();
        for f in ready.drain(..) {
            if let Some(v) = sole_missing(pg.face_vertices(f), &hull) {
                if steps[v].is_none() {
                    steps[v] = Some(k);
                    witness_face[v] = Some(f);
                    batch.push(v);
                }
            }
        }
        for &v in &batch {
            hull.insert(v);
        }
        for &v in &batch {
            for &f in &faces_at[v] {
                missing[f] -= 1;
                if missing[f] == 1 {
                    ready.push(f);
                }
            }
        }
    }
    FaceTrace {
        steps,
        witness_face,
        hull,
    }
}

/// Minimum face-hull set through the exact search engine.
pub fn hn_fc_exact(pg: &PlaneGraph) -> SolveReport {
    solve(&FaceConvexity::new(pg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::{embedded_cycle, embedded_grid};

    #[test]
    fn square_interval_and_hull_number() {
        let pg = embedded_cycle(4).unwrap();
        assert!(interval_fc(&pg, &VertexSet::from_ids(4, [0, 1, 2])).is_full());
        assert_eq!(interval_fc(&pg, &VertexSet::from_ids(4, [0, 1])).len(), 2);
        assert!(interval_fc(&pg, &VertexSet::empty(4)).is_empty());
        let report = hn_fc_exact(&pg);
        assert_eq!(report.hn, 3);
    }

    #[test]
    fn trace_matches_iterated_interval() {
        let pg = embedded_grid(3, 3, |_, _| true).unwrap();
        let conv = FaceConvexity::new(&pg);
        for mask in 0u32..(1 << 9) {
            let s = VertexSet::from_ids(9, (0..9).filter(|&v| mask >> v & 1 == 1));
            let t = hull_fc(&pg, &s);
            let mut layer = s.clone();
            let mut k = 0;
            loop {
                for v in 0..9 {
                    if layer.contains(v) {
                        assert!(t.steps[v].is_some_and(|sv| sv <= k));
                    } else {
                        assert!(t.steps[v].is_none_or(|sv| sv > k));
                    }
                }
                let next = conv.interval(&layer);
                if next == layer {
                    break;
                }
                layer = next;
                k += 1;
            }
            assert_eq!(t.hull, layer);
            for v in 0..9 {
                if let (Some(sv), Some(f)) = (t.steps[v], t.witness_face[v]) {
                    for u in pg.face_vertices(f).iter().filter(|&u| u != v) {
                        assert!(t.steps[u].unwrap() < sv);
                    }
                }
            }
        }
    }
}
