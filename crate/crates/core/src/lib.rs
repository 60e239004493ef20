//! Cycle convexity and face convexity on loopless multigraphs.
//!
//! Hulls with contamination traces, exact and closed-form hull numbers, the
//! reduction of 4-regular graphs with hull-set lifting, and knot-diagram census.

pub mod convexity;
pub mod error;
pub mod exact;
pub mod graph;
pub mod knot;
pub mod plane;
pub mod poly;
pub mod random;
pub mod reduce;
pub mod set;

pub use convexity::{
    grid_perimeter, hull_cc, interval_cc, is_boxed, is_coconvex_cc, is_convex_cc, is_hull_set,
    ContaminationTrace, Convexity, CycleConvexity,
};
pub use error::{Error, Result};
pub use exact::{brute_force_hn, enumerate_coconvex, lower_bound, preprocess, solve, SolveReport};
pub use graph::Multigraph;
pub use plane::{
    dynamic_percolation, hn_fc_exact, hull_fc, interval_fc, trace_faces, FaceConvexity, FaceTrace,
    PlaneGraph, RotationSystem,
};
pub use set::VertexSet;
