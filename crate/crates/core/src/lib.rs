//! Exact invariants of the lifted braid axis in the branched double cover
//! of an annular braid closure.
//!
//! Everything is generic over an integer [`Scalar`]; the aliases below fix
//! it to [`BigInt`].

pub mod braiddiag;
pub mod error;
pub mod floer;
pub mod foxcalc;
pub mod freegroup;
pub mod intlinalg;
pub mod json;
pub mod restree;
pub mod scalar;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use scalar::Scalar;

pub type Poly = intlinalg::LaurentPoly<BigInt>;
pub type IntMatrix = intlinalg::Matrix<BigInt>;
pub type Group = intlinalg::AbelianGroup<BigInt>;
