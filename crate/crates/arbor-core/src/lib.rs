//! Graph representation, forest-class validators, structural parameters
//! (degeneracy, chordality, clique number, Nash-Williams density), and
//! verification of cover/coloring certificates.
//!
//! Vertices are 1-based integers and graphs are immutable after
//! construction, so certificates can reference stable vertex ids.

pub mod bitset;
pub mod certificate;
pub mod chordal;
pub mod class;
pub mod clique;
pub mod degeneracy;
pub mod density;
pub mod error;
pub mod graph;
pub mod io;
pub mod minor;

pub use certificate::{
    ColoringCertificate, ColoringKind, CoverCertificate, CoverMode, OrderingCertificate,
    VerifyReport, verify_certificate, verify_coloring,
};
pub use chordal::{chordality, treewidth_chordal, Chordality};
pub use class::{validate_edge_set, ForestClass, Inducedness};
pub use clique::clique_number;
pub use degeneracy::degeneracy;
pub use density::{nash_williams_density, DensityBound};
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use minor::{check_stars, is_half_shallow_minor, Star, StarDecomposition};
