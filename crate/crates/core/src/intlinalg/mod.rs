//! Exact integer linear algebra and Laurent polynomials.

pub mod abelian;
pub mod alexander;
pub mod laurent;
pub mod matrix;
pub mod ring;
pub mod snf;

pub use abelian::{cokernel, AbelianGroup};
pub use alexander::{alexander_from_monodromy, characteristic_det, has_alternating_signs};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use ring::ExactRing;
pub use snf::{smith_normal_form, SmithForm};
