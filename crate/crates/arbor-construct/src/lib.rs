//! Certified upper-bound builders: every operation returns a cover or
//! coloring certificate that arbor-core re-verifies.

pub mod acyclic;
pub mod degen;
pub mod error;
pub mod layers;
pub mod leafsplit;
pub mod minor;

pub use acyclic::{acyclic_matching_cover, acyclic_pairs_cover, round_robin_matchings, LabeledCover};
pub use degen::{check_prefix_invariants, degeneracy_star_cover, DegeneracyColoring};
pub use error::{ConstructError, Result};
pub use layers::split_layers;
pub use leafsplit::leaf_color_split;
pub use minor::{shallow_minor_coloring, MinorColoring};
