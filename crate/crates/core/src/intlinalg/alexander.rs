use super::laurent::LaurentPoly;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `det(I - tA)` as a Laurent polynomial, before normalization.
pub fn characteristic_det<T: Scalar>(a: &Matrix<T>) -> LaurentPoly<T> {
    let n = a.nrows();
    let m = Matrix::from_fn(n, n, |i, j| {
        let mut p = LaurentPoly::monomial(1, -a[(i, j)].clone());
        if i == j {
            p.add_term(0, T::one());
        }
        p
    });
    m.det()
}

/// Symmetrized Alexander polynomial of the fibration with monodromy `a`
/// acting on first homology of the fiber.
///
/// The result satisfies `Δ(T^-1) = Δ(T)` and `Δ(1) = |det(I - A)|`.
pub fn alexander_from_monodromy<T: Scalar>(a: &Matrix<T>) -> Result<LaurentPoly<T>> {
    let raw = characteristic_det(a);
    if raw.evaluate_at_one().is_zero() {
        return Err(Error::NotRationalHomologySphere);
    }
    raw.symmetrize()
}

/// True when `(-1)^j a_j >= 0` for every coefficient.
pub fn has_alternating_signs<T: Scalar>(p: &LaurentPoly<T>) -> bool {
    p.terms().all(|(j, c)| if j.rem_euclid(2) == 0 { !c.is_negative() } else { !c.is_positive() })
}
