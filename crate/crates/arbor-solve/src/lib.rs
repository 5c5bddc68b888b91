//! Unified exact decision/optimization engine for covering or partitioning
//! E(G) into k parts of a forest class, with optional per-vertex load
//! constraints, plus exact chromatic-type parameters. All feasible answers
//! come with certificates that re-verify in arbor-core; infeasible answers
//! mean the full search space was exhausted.

pub mod bounds;
pub mod chain;
pub mod coloring;
mod engine;
pub mod request;
pub mod solve;

pub use bounds::{class_param, lower_bound};
pub use chain::{check_inequality_chain, ArborParam, Violation};
pub use coloring::{
    acyclic_chromatic_number, chromatic_number, edge_chromatic_number, ColoringOutcome,
    ColoringResult,
};
pub use request::{Budget, Objective, SearchStats, SolveRequest, SolveResult, SolveStatus};
pub use solve::{decide_cover, min_cover, strong_chromatic_index, SolveError};
