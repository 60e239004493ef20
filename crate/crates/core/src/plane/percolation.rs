//! Crossing removal on 4-regular plane graphs.
//!
//! While some face has exactly one unmarked vertex `v`, `v` is smoothed so that
//! this face and the face opposite to it at `v` merge, while the two other
//! corner faces at `v` survive. The working embedding is updated in place and
//! faces are re-traced after every removal.

use serde::Serialize;

use super::PlaneGraph;
use crate::error::Result;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Percolation {
    /// Every unmarked vertex was removed.
    pub percolates: bool,
    pub removal_order: Vec<usize>,
}

struct Working {
    tail: Vec<usize>,
    twin: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    alive: Vec<bool>,
}

impl Working {
    fn rotation_next(&self, d: usize) -> usize {
        let rot = &self.rotation[self.tail[d]];
        let i = rot
            .iter()
            .position(|&x| x == d)
            .expect("dart in its rotation");
        rot[(i + 1) % rot.len()]
    }

    /// Faces of the current embedding as dart cycles, by ascending first dart.
    fn faces(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let darts = self.tail.len();
        let mut face_of = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if !self.alive[self.tail[start]] || face_of[start] != usize::MAX {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = faces.len();
                cycle.push(d);
                d = self.rotation_next(self.twin[d]);
            }
            faces.push(cycle);
        }
        (faces, face_of)
    }

    /// Removes `v`, joining its darts in the pairs `(d[j+1], d[j+2])` and
    /// `(d[j+3], d[j])` where `j` is the corner of the merging face.
    fn smooth(&mut self, v: usize, j: usize) {
        let d = self.rotation[v].clone();
        let partner = |a: usize, b: usize| [(a, b), (b, a)];
        let pairs: Vec<(usize, usize)> = partner(d[(j + 1) % 4], d[(j + 2) % 4])
            .into_iter()
            .chain(partner(d[(j + 3) % 4], d[j]))
            .collect();
        let mate = |x: usize| {
            pairs
                .iter()
                .find(|&&(a, _)| a == x)
                .map(|&(_, b)| b)
                .unwrap()
        };
        // Darts elsewhere whose twin sits at `v`: follow the strand through `v`
        // (possibly several times, along loops created earlier) to its far end.
        let outer: Vec<usize> = d
            .iter()
            .map(|&x| self.twin[x])
            .filter(|&e| self.tail[e] != v)
            .collect();
        let mut new_twin = Vec::new();
        for &e in &outer {
            let mut cur = self.twin[e];
            let end = loop {
                let t = self.twin[mate(cur)];
                if self.tail[t] != v {
                    break t;
                }
                cur = t;
            };
            new_twin.push((e, end));
        }
        for (e, end) in new_twin {
            self.twin[e] = end;
        }
        self.alive[v] = false;
        self.rotation[v].clear();
    }
}

/// Runs the removal process from the marked set `s`.
pub fn dynamic_percolation(pg: &PlaneGraph, s: &VertexSet) -> Result<Percolation> {
    pg.is_four_regular()?;
    let n = pg.order();
    let mut w = Working {
        tail: (0..pg.dart_count()).map(|d| pg.tail(d)).collect(),
        twin: (0..pg.dart_count()).map(|d| pg.twin(d)).collect(),
        rotation: (0..n).map(|v| pg.rotation(v).to_vec()).collect(),
        alive: vec![true; n],
    };
    let mut removal_order = Vec::new();
    loop {
        let (faces, face_of) = w.faces();
        let mut best: Option<(usize, usize)> = None;
        for face in &faces {
            let mut unmarked: Vec<usize> = face
                .iter()
                .map(|&d| w.tail[d])
                .filter(|&u| !s.contains(u))
                .collect();
            unmarked.sort_unstable();
            unmarked.dedup();
            if let [v] = unmarked[..] {
                let f = face_of[face[0]];
                if best.is_none_or(|(bv, _)| v < bv) {
                    best = Some((v, f));
                }
            }
        }
        let Some((v, f)) = best else { break };
        // Corner j lies between d[j] and d[j+1] and belongs to the face of d[j+1].
        let rot = &w.rotation[v];
        let j = (0..4)
            .find(|&j| face_of[rot[(j + 1) % 4]] == f)
            .expect("triggering face has a corner at its vertex");
        w.smooth(v, j);
        removal_order.push(v);
    }
    let percolates = (0..n).all(|v| s.contains(v) || !w.alive[v]);
    Ok(Percolation {
        percolates,
        removal_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::plane::{embedded_cycle, embedded_grid, hull_fc, medial};

    #[test]
    fn rejects_non_four_regular() {
        let pg = embedded_cycle(4).unwrap();
        assert!(matches!(
            dynamic_percolation(&pg, &VertexSet::empty(4)),
            Err(Error::NotFourRegular { .. })
        ));
    }

    #[test]
    fn all_marked_is_trivial() {
        let pg = medial(&embedded_grid(2, 3, |_, _| true).unwrap()).unwrap();
        let p = dynamic_percolation(&pg, &pg.underlying().all()).unwrap();
        assert!(p.percolates);
        assert!(p.removal_order.is_empty());
    }

    #[test]
    fn agrees_with_face_hull_on_small_medials() {
        for (m, n) in [(2, 2), (2, 3), (3, 3)] {
            let pg = medial(&embedded_grid(m, n, |_, _| true).unwrap()).unwrap();
            let order = pg.order();
            for mask in 0u64..(1 << order.min(12)) {
                let s =
                    VertexSet::from_ids(order, (0..order.min(12)).filter(|&v| mask >> v & 1 == 1));
                let p = dynamic_percolation(&pg, &s).unwrap();
                assert_eq!(p.percolates, hull_fc(&pg, &s).hull.is_full(), "{m}x{n} {s}");
            }
        }
    }
}
