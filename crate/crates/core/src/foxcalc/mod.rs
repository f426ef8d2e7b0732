//! Group rings over finite abelian groups, Fox calculus and the refined
//! torsion of the lifted axis.

mod fox;
mod group;
mod ring;
mod torsion;

pub use fox::{
    build_presentation, cover_images, fox_derivative, group_ring_det, push_forward, torsion_matrix, FreeGroupRing,
    GeneratorImages, Presentation,
};
pub use group::{FiniteAbelian, MAX_GROUP_ORDER};
pub use ring::GroupRingElem;
pub use torsion::{refined_torsion, refined_torsion_of_monodromy, RefinedTorsion};
