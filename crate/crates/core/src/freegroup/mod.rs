//! Free groups on the chain curves `γ_1 … γ_{b-1}` and the monodromy of the
//! branched double cover of a braid closure.

mod endo;
mod word;

pub use endo::{abelianize, compose, dehn_twist, monodromy_of_braid, FreeEndomorphism};
pub use word::{reduce, FreeWord};
