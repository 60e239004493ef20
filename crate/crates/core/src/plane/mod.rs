//! Plane multigraphs given by rotation systems, and the face convexity.
//!
//! Every edge copy is a pair of darts. `rotation(v)` lists the darts leaving `v`
//! in counter-clockwise order. Faces are traced with the rule: after dart `d`
//! arrives at `v`, the face continues with the rotation successor of `twin(d)`
//! at `v`. The outer face is not distinguished.

mod build;
mod face;
mod percolation;

pub use build::{embedded_cycle, embedded_grid, medial};
pub use face::{hn_fc_exact, hull_fc, interval_fc, FaceConvexity, FaceTrace};
pub use percolation::{dynamic_percolation, Percolation};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components, Multigraph};
use crate::set::VertexSet;

/// `{"vertices": n, "rotations": [[dart ids ccw], ...], "twins": [[d1, d2], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotationSystem {
    pub vertices: usize,
    pub rotations: Vec<Vec<usize>>,
    pub twins: Vec<[usize; 2]>,
}

impl RotationSystem {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("rotation system JSON: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    underlying: Multigraph,
    tail: Vec<usize>,
    twin: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    /// Index of each dart inside its tail's rotation.
    slot: Vec<usize>,
    /// Faces as dart cycles.
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
    face_vertices: Vec<VertexSet>,
}

impl PlaneGraph {
    pub fn underlying(&self) -> &Multigraph {
        &self.underlying
    }

    pub fn order(&self) -> usize {
        self.underlying.order()
    }

    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }

    pub fn tail(&self, d: usize) -> usize {
        self.tail[d]
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail[self.twin[d]]
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Counter-clockwise successor of `d` around its tail.
    pub fn rotation_next(&self, d: usize) -> usize {
        let rot = &self.rotation[self.tail[d]];
        rot[(self.slot[d] + 1) % rot.len()]
    }

    /// The dart following `d` along its face.
    pub fn face_next(&self, d: usize) -> usize {
        self.rotation_next(self.twin[d])
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    /// `V(F)`: the distinct vertices incident to face `f`.
    pub fn face_vertices(&self, f: usize) -> &VertexSet {
        &self.face_vertices[f]
    }

    /// Face boundary as the vertex sequence of its closed walk.
    pub fn face_walk(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.tail[d]).collect()
    }

    /// Faces incident to each vertex, ascending, without repetition.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        let mut fs: Vec<usize> = self.rotation[v].iter().map(|&d| self.face_of[d]).collect();
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    /// Genus-zero check: `n - e + f = 2` on every component with an edge
    /// (isolated vertices carry no traced face and contribute 1).
    pub fn is_spherical(&self) -> bool {
        let g = &self.underlying;
        let comps = components(g);
        let isolated = comps.iter().filter(|c| c.len() == 1).count();
        let with_edges = comps.len() - isolated;
        let euler = g.order() as isize - g.edge_count() as isize + self.face_count() as isize;
        euler == (2 * with_edges + isolated) as isize
    }

    pub fn to_rotation_system(&self) -> RotationSystem {
        let twins = (0..self.dart_count())
            .filter(|&d| d < self.twin[d])
            .map(|d| [d, self.twin[d]])
            .collect();
        RotationSystem {
            vertices: self.order(),
            rotations: self.rotation.clone(),
            twins,
        }
    }

    pub fn is_four_regular(&self) -> Result<()> {
        for v in 0..self.order() {
            let degree = self.rotation[v].len();
            if degree != 4 {
                return Err(Error::NotFourRegular { vertex: v, degree });
            }
        }
        Ok(())
    }
}

/// Validates the dart structure and traces its faces.
pub fn trace_faces(rs: &RotationSystem) -> Result<PlaneGraph> {
    let n = rs.vertices;
    if rs.rotations.len() != n {
        return Err(Error::Embedding(format!(
            "{} rotations listed for {n} vertices",
            rs.rotations.len()
        )));
    }
    let darts: usize = rs.rotations.iter().map(Vec::len).sum();
    let mut tail = vec![usize::MAX; darts];
    let mut slot = vec![0; darts];
    for (v, rot) in rs.rotations.iter().enumerate() {
        for (i, &d) in rot.iter().enumerate() {
            if d >= darts {
                return Err(Error::Embedding(format!(
                    "dart {d} out of range (there are {darts} darts)"
                )));
            }
            if tail[d] != usize::MAX {
                return Err(Error::Embedding(format!(
                    "dart {d} appears in two rotations"
                )));
            }
            tail[d] = v;
            slot[d] = i;
        }
    }
    let mut twin = vec![usize::MAX; darts];
    for &[a, b] in &rs.twins {
        if a >= darts || b >= darts || a == b {
            return Err(Error::Embedding(format!("bad twin pair [{a}, {b}]")));
        }
        if twin[a] != usize::MAX || twin[b] != usize::MAX {
            return Err(Error::Embedding(format!(
                "dart in more than one twin pair: [{a}, {b}]"
            )));
        }
        if tail[a] == tail[b] {
            return Err(Error::Loop(tail[a]));
        }
        twin[a] = b;
        twin[b] = a;
    }
    if let Some(d) = twin.iter().position(|&t| t == usize::MAX) {
        return Err(Error::Embedding(format!("dart {d} has no twin")));
    }
    let underlying = Multigraph::from_edges(
        n,
        (0..darts)
            .filter(|&d| d < twin[d])
            .map(|d| (tail[d], tail[twin[d]])),
    )?;

    let mut pg = PlaneGraph {
        underlying,
        tail,
        twin,
        rotation: rs.rotations.clone(),
        slot,
        faces: Vec::new(),
        face_of: vec![usize::MAX; darts],
        face_vertices: Vec::new(),
    };
    for start in 0..darts {
        if pg.face_of[start] != usize::MAX {
            continue;
        }
        let id = pg.faces.len();
        let mut cycle = Vec::new();
        let mut verts = VertexSet::empty(n);
        let mut d = start;
        while pg.face_of[d] == usize::MAX {
            pg.face_of[d] = id;
            cycle.push(d);
            verts.insert(pg.tail[d]);
            d = pg.face_next(d);
        }
        if d != start {
            return Err(Error::Embedding(format!(
                "face walk from dart {start} is not a permutation cycle"
            )));
        }
        pg.faces.push(cycle);
        pg.face_vertices.push(verts);
    }
    Ok(pg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_has_two_faces() {
        let pg = embedded_cycle(4).unwrap();
        assert_eq!(pg.face_count(), 2);
        for f in 0..2 {
            assert_eq!(pg.face_vertices(f).len(), 4);
        }
        assert!(pg.is_spherical());
    }

    #[test]
    fn single_edge_has_one_face() {
        let rs = RotationSystem {
            vertices: 2,
            rotations: vec![vec![0], vec![1]],
            twins: vec![[0, 1]],
        };
        let pg = trace_faces(&rs).unwrap();
        assert_eq!(pg.face_count(), 1);
        assert_eq!(pg.face_walk(0), vec![0, 1]);
        assert!(pg.is_spherical());
    }

    #[test]
    fn rejects_broken_structures() {
        let missing_twin = RotationSystem {
            vertices: 2,
            rotations: vec![vec![0], vec![1]],
            twins: vec![],
        };
        assert!(matches!(
            trace_faces(&missing_twin),
            Err(Error::Embedding(_))
        ));
        let looped = RotationSystem {
            vertices: 1,
            rotations: vec![vec![0, 1]],
            twins: vec![[0, 1]],
        };
        assert_eq!(trace_faces(&looped), Err(Error::Loop(0)));
        let dup = RotationSystem {
            vertices: 2,
            rotations: vec![vec![0, 1], vec![1]],
            twins: vec![[0, 1]],
        };
        assert!(matches!(trace_faces(&dup), Err(Error::Embedding(_))));
    }

    #[test]
    fn rotation_json_round_trip() {
        let pg = embedded_grid(2, 3, |_, _| true).unwrap();
        let text = serde_json::to_string(&pg.to_rotation_system()).unwrap();
        let back = trace_faces(&RotationSystem::parse(&text).unwrap()).unwrap();
        assert_eq!(back.underlying(), pg.underlying());
        assert_eq!(back.face_count(), pg.face_count());
    }

    #[test]
    fn toroidal_rotation_is_not_spherical() {
        // K4 with a rotation that embeds it on the torus (single face walk pattern).
        let rs = RotationSystem {
            vertices: 4,
            // edges: 01 (0,1) 02 (2,3) 03 (4,5) 12 (6,7) 13 (8,9) 23 (10,11)
            rotations: vec![vec![0, 2, 4], vec![1, 6, 8], vec![3, 10, 7], vec![5, 9, 11]],
            twins: vec![[0, 1], [2, 3], [4, 5], [6, 7], [8, 9], [10, 11]],
        };
        let pg = trace_faces(&rs).unwrap();
        let planar_rs = RotationSystem {
            vertices: 4,
            rotations: vec![vec![0, 2, 4], vec![1, 8, 6], vec![3, 7, 10], vec![5, 11, 9]],
            twins: rs.twins.clone(),
        };
        let planar = trace_faces(&planar_rs).unwrap();
        assert_ne!(pg.is_spherical(), planar.is_spherical());
    }
}
