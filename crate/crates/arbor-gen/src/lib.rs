//! Constructors for the named graphs and extremal families of the
//! arboricity test bed, with exact vertex/edge counts as testable contracts.

pub mod basic;
pub mod degenerate;
pub mod error;
pub mod family;
pub mod gadget;
pub mod gk;
pub mod random;
pub mod trees;
pub mod wheels;

pub use basic::{complete, complete_bipartite, cycle, path, path_power, subdivide_once, SubdividedGraph};
pub use degenerate::{degenerate_lb_graph, DegenerateLbGraph};
pub use error::{GenError, Result};
pub use family::{FamilySpec, GeneratedGraph};
pub use gadget::{prop2_gadget, Prop2Gadget};
pub use gk::{gk, GkBlock, GkGraph};
pub use random::{random_degenerate, random_interval};
pub use trees::{all_trees, tree_code};
pub use wheels::{double_wheel, planar_ia_gadget, DoubleWheel, PlanarGadget};
