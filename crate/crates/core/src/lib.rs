//! Identifying codes in graphs.
//!
//! An identifying code of a graph is a vertex set `C` such that every
//! closed neighbourhood meets `C` in a nonempty set, and these sets
//! (`I(C; v) = N[v] ∩ C`) differ for every pair of vertices. This crate
//! verifies codes, builds them with the layered parity-shift and
//! support-complement constructions, computes the minimum size exactly by
//! branch and bound, generates the graph families where the known upper
//! bounds are tight, and surveys those bounds over every small tree.

pub mod bounds;
pub mod constructions;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod identification;
pub mod solver;
pub mod survey;

pub use bounds::{evaluate_bounds, BoundEntry, BoundKind, BoundReport};
pub use constructions::{
    best_construction, corona2_optimal_code, parity_shift_code, prop12_code,
    support_complement_code, twin_free_bipartite_code, ConstructionError, Method, ParityShift,
    Parity, Shift, ShiftTrace,
};
pub use exec::Execution;
pub use generators::{all_trees, generate, is_2corona, Family, GenError};
pub use graph::{profile, Girth, Graph, GraphError, GraphProfile, Vertex, VertexSet};
pub use identification::{i_set, verify_identifying, verify_td_identifying, CodeCertificate, Verdict};
pub use solver::{gamma_id, gamma_tid, SolveError, SolveResult};
pub use survey::{survey_trees, SurveyError, SurveyOptions, SurveySummary};
