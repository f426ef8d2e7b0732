//! Resolution trees of annular closures and the leaf census.

mod qa;
mod tree;
mod wirtinger;

pub use qa::{is_quasi_alternating_annular, Certificate};
pub use tree::{
    is_branchable, leaf_census, leaf_invariants, resolve, wehrli_tree, LeafData, NodeExport, ResolutionNode,
    DEFAULT_CROSSING_CAP,
};
pub use wirtinger::{alexander_of_map, wirtinger_alexander};
