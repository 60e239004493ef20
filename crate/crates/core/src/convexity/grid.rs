//! Perimeter and boxed sets on the `m x n` grid (ids as in [`crate::graph::make_grid`]).
//!
//! The grid is drawn as the cells of an `(m+1) x (n+1)` lattice. A wall of the
//! lattice bounds the region of `S` exactly when one side is a cell of `S` and the
//! other side is a cell outside `S` or the exterior; walls between two cells of `S`
//! are removed because the corresponding grid edge lies in `G[S]`.

use crate::graph::{components_within, make_grid};
use crate::set::VertexSet;

/// `|B(S)|`, the number of lattice walls on the boundary of `S`.
pub fn grid_perimeter(m: usize, n: usize, s: &VertexSet) -> usize {
    let inside = |i: isize, j: isize| {
        i >= 0
            && j >= 0
            && (i as usize) < m
            && (j as usize) < n
            && s.contains(i as usize * n + j as usize)
    };
    let mut walls = 0;
    // Horizontal walls sit between rows i-1 and i (i = 0..=m); vertical ones between
    // columns j-1 and j (j = 0..=n).
    for i in 0..=m as isize {
        for j in 0..n as isize {
            if inside(i - 1, j) != inside(i, j) {
                walls += 1;
            }
        }
    }
    for i in 0..m as isize {
        for j in 0..=n as isize {
            if inside(i, j - 1) != inside(i, j) {
                walls += 1;
            }
        }
    }
    walls
}

/// Every component of `G[S]` is a full sub-rectangle of the grid.
pub fn is_boxed(m: usize, n: usize, s: &VertexSet) -> bool {
    let g = make_grid(m, n).expect("positive grid dimensions");
    components_within(&g, s).iter().all(|comp| {
        let (mut r0, mut r1, mut c0, mut c1) = (usize::MAX, 0, usize::MAX, 0);
        for v in comp.iter() {
            let (i, j) = (v / n, v % n);
            r0 = r0.min(i);
            r1 = r1.max(i);
            c0 = c0.min(j);
            c1 = c1.max(j);
        }
        (r1 - r0 + 1) * (c1 - c0 + 1) == comp.len()
    })
}
