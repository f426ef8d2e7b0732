//! Knot Floer rank tables from the refined torsion, torsion coefficients
//! and the staircase comparison between `HF^+` and the cohomology of the
//! fibre minus a curve system.

mod coeffs;
mod eftekhary;
mod hfk;
mod staircase;

pub use coeffs::{torsion_coeffs, TorsionCoeffs};
pub use eftekhary::{
    compare_braid, eftekhary_check, find_equivalent_staircase, Comparison, EftekharyReport, MismatchReport,
    DEFAULT_SEARCH_LIMIT,
};
pub use hfk::{hfk_from_torsion, HfkTable};
pub use staircase::{
    complement_cohomology, loop_cohomology, loop_multiset, staircase_hfk, staircase_parse, total, Cohomology,
    GradedRank, StaircaseForm, StaircaseHfk, StaircaseWord,
};
