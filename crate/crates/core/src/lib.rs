//! Monitoring edge-geodetic sets.
//!
//! A vertex pair monitors an edge when the edge lies on every shortest path
//! between the pair; a monitoring edge-geodetic set is a vertex set whose
//! pairs monitor every edge of the graph. This crate provides:
//!
//! - an immutable simple-graph type with BFS distance queries, including
//!   distances under single-edge deletion ([`graph`]);
//! - the monitored-edge predicate, per-pair coverage sets and the
//!   certification check ([`monitoring`]);
//! - an exact minimum solver with leaf-based pruning, a greedy set-cover
//!   approximation, and exact/bounded vertex-cover search ([`solvers`]);
//! - gadget constructions translating vertex-cover instances into
//!   monitoring-set instances and back, plus the derived vertex-cover
//!   approximation pipeline ([`reductions`]).
//!
//! Every solver certifies its own output through the independent removal
//! test before returning it.

pub mod error;
pub mod graph;
pub mod monitoring;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{DistanceRow, Graph, INFINITY};
pub use monitoring::{
    coverage_map, is_monitored, meg_check, monitored_edges, monitored_edges_by_counting, EdgeSet,
    PairCoverage,
};
pub use reductions::{
    add_universal_vertex, apx_vc, build_replicated_gadget, build_vc_gadget, meg_from_vc,
    vc_from_meg, GadgetInstance, Role,
};
pub use solvers::{
    bounded_vertex_cover_search, bounded_vertex_cover_search_with_budget, exact_meg,
    exact_meg_with_budget, exact_vertex_cover, exact_vertex_cover_with_budget, excluded_vertices,
    greedy_set_cover, harmonic_number, is_vertex_cover, mandatory_vertices, meg_apx,
    prune_meg_set, Method, SetCoverInstance, SolveBudget, SolveReport, SolveStats,
};
