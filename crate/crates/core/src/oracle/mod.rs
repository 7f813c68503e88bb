//! Brute-force ground truth on a discretized sphere.
//!
//! Nothing here uses the pattern conditions of the planner. Reachability is
//! plain BFS over unit steps that stay on the boundary, path sets are
//! exhaustive enumerations, and dihomotopy is counted with union-find over
//! elementary square swaps. That independence is what makes the grid a
//! useful check on the analytic decision procedure.

mod grid;
mod halfsquare;
mod paths;

pub use grid::{expected_vertex_count, GridGraph, MAX_LATTICE_POINTS};
pub use paths::{LatticeDipath, UnionFind, DEFAULT_PATH_CAP};
