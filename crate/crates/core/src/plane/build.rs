//! Embedded constructions: cycles, grid subgraphs and medial graphs.

use super::{trace_faces, PlaneGraph, RotationSystem};
use crate::error::{Error, Result};

/// The cycle `C_n` drawn as a polygon (`n = 2` gives a digon).
pub fn embedded_cycle(n: usize) -> Result<PlaneGraph> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "embedded cycle needs n >= 2, got {n}"
        )));
    }
    // Edge i joins i and i+1; dart 2i leaves i, dart 2i+1 leaves i+1.
    let rotations = (0..n)
        .map(|v| vec![2 * v, 2 * ((v + n - 1) % n) + 1])
        .collect();
    let twins = (0..n).map(|i| [2 * i, 2 * i + 1]).collect();
    trace_faces(&RotationSystem {
        vertices: n,
        rotations,
        twins,
    })
}

/// Spanning subgraph of the `m x n` grid (ids `i * n + j`) in its straight-line
/// drawing, keeping the grid edges `(u, v)` with `u < v` accepted by `keep`.
pub fn embedded_grid(
    m: usize,
    n: usize,
    keep: impl Fn(usize, usize) -> bool,
) -> Result<PlaneGraph> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition(format!(
            "grid dimensions must be positive, got {m}x{n}"
        )));
    }
    let id = |i: usize, j: usize| i * n + j;
    // Per vertex, slots for the four directions in counter-clockwise order:
    // east, north (row - 1), west, south (row + 1).
    let mut slots = vec![[None::<usize>; 4]; m * n];
    let mut twins = Vec::new();
    let mut next_dart = 0;
    let mut link =
        |a: usize, slot_a: usize, b: usize, slot_b: usize, slots: &mut Vec<[Option<usize>; 4]>| {
            slots[a][slot_a] = Some(next_dart);
            slots[b][slot_b] = Some(next_dart + 1);
            twins.push([next_dart, next_dart + 1]);
            next_dart += 2;
        };
    for i in 0..m {
        for j in 0..n {
            if j + 1 < n && keep(id(i, j), id(i, j + 1)) {
                link(id(i, j), 0, id(i, j + 1), 2, &mut slots);
            }
            if i + 1 < m && keep(id(i, j), id(i + 1, j)) {
                link(id(i, j), 3, id(i + 1, j), 1, &mut slots);
            }
        }
    }
    let rotations = slots
        .iter()
        .map(|s| s.iter().flatten().copied().collect())
        .collect();
    trace_faces(&RotationSystem {
        vertices: m * n,
        rotations,
        twins,
    })
}

/// The medial graph: one vertex per edge of `pg` (numbered by lowest dart), one
/// edge per corner. Vertices of degree 1 would produce loops and are rejected;
/// isolated vertices are ignored.
pub fn medial(pg: &PlaneGraph) -> Result<PlaneGraph> {
    if let Some(v) = (0..pg.order()).find(|&v| pg.rotation(v).len() == 1) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree 1; its medial vertex would carry a loop"
        )));
    }
    let darts = pg.dart_count();
    let mut edge_of = vec![usize::MAX; darts];
    let mut edges = 0;
    for d in 0..darts {
        if d < pg.twin(d) {
            edge_of[d] = edges;
            edge_of[pg.twin(d)] = edges;
            edges += 1;
        }
    }
    let mut prev = vec![0; darts];
    for d in 0..darts {
        prev[pg.rotation_next(d)] = d;
    }
    // The corner (d, rotation_next(d)) becomes medial edge d, with dart 2d at
    // edge_of[d] and dart 2d + 1 at edge_of[rotation_next(d)]. Around the midpoint
    // of an edge with darts d and t the corners appear in the order
    // (d, next d), (prev d, d), (t, next t), (prev t, t).
    let mut rotations = vec![Vec::new(); edges];
    for d in 0..darts {
        let t = pg.twin(d);
        if d < t {
            rotations[edge_of[d]] = vec![2 * d, 2 * prev[d] + 1, 2 * t, 2 * prev[t] + 1];
        }
    }
    let twins = (0..darts).map(|d| [2 * d, 2 * d + 1]).collect();
    trace_faces(&RotationSystem {
        vertices: edges,
        rotations,
        twins,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_faces_match_euler() {
        for m in 1..=4 {
            for n in 1..=4 {
                let pg = embedded_grid(m, n, |_, _| true).unwrap();
                let expected = if m * n == 1 { 0 } else { (m - 1) * (n - 1) + 1 };
                assert_eq!(pg.face_count(), expected, "{m}x{n}");
                assert!(pg.is_spherical());
                assert_eq!(pg.underlying(), &crate::graph::make_grid(m, n).unwrap());
            }
        }
    }

    #[test]
    fn medial_of_cycle_is_a_doubled_cycle() {
        let med = medial(&embedded_cycle(4).unwrap()).unwrap();
        assert_eq!(med.order(), 4);
        assert!(med.is_four_regular().is_ok());
        assert!(med.is_spherical());
        // Two faces of C4 plus one face per vertex of C4.
        assert_eq!(med.face_count(), 6);
    }

    #[test]
    fn medial_of_grid_is_planar_and_four_regular() {
        let pg = embedded_grid(3, 4, |_, _| true).unwrap();
        let med = medial(&pg).unwrap();
        assert_eq!(med.order(), pg.underlying().edge_count());
        assert!(med.is_four_regular().is_ok());
        assert!(med.is_spherical());
        assert_eq!(med.face_count(), pg.order() + pg.face_count());
    }

    #[test]
    fn medial_rejects_pendant_vertices() {
        let path = embedded_grid(1, 3, |_, _| true).unwrap();
        assert!(matches!(medial(&path), Err(Error::Precondition(_))));
    }
}
