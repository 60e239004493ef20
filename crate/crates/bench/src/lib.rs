//! Seeded fixtures shared by the criterion benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyconv_core::graph::Multigraph;
use cyconv_core::knot::{bundled_db, pd_to_plane_graph};
use cyconv_core::plane::PlaneGraph;
use cyconv_core::random;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random multigraphs on `n` vertices.
pub fn multigraphs(n: usize, count: usize, seed: u64) -> Vec<Multigraph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random::random_multigraph(&mut rng, n, 0.35, 2))
        .collect()
}

/// Connected chordal graphs on `n` vertices.
pub fn chordal_graphs(n: usize, count: usize, seed: u64) -> Vec<Multigraph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random::random_chordal(&mut rng, n, 0.5))
        .collect()
}

/// P4-sparse graphs on `n` vertices.
pub fn p4sparse_graphs(n: usize, count: usize, seed: u64) -> Vec<Multigraph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random::random_p4sparse(&mut rng, n))
        .collect()
}

/// Plane graphs of the bundled knot diagrams with exactly `crossings` crossings.
pub fn diagrams(crossings: usize) -> Vec<PlaneGraph> {
    bundled_db(crossings >= 9)
        .iter()
        .filter(|pd| pd.crossings.len() == crossings)
        .map(|pd| pd_to_plane_graph(pd).expect("bundled diagram"))
        .collect()
}
