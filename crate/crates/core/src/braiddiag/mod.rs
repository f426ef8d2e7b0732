//! Braid words, annular closure diagrams and their checkerboard invariants.

mod braid;
mod diagram;
mod invariants;

pub use braid::{parse_braid, BraidWord};
pub use diagram::{closure_diagram, Crossing, CrossingState, LinkDiagram, PlanarMap};
pub use invariants::{
    alternating_signature, determinant, determinant_of_map, diagram_invariants, doubled_cover_diagram, goeritz_matrix,
    signature, signature_of_map, tait_graph, DiagramInvariants, TaitGraph,
};
