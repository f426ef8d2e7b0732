use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::intlinalg::LaurentPoly;
use crate::scalar::Scalar;

/// `a_j`, `t_s` and `b_s` of a symmetric Alexander polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct TorsionCoeffs<T: Scalar> {
    /// `a_0, a_1, ..` with `Δ = a_0 + Σ a_j (T^j + T^-j)`.
    #[serde(with = "crate::json::scalar_vec")]
    pub a: Vec<T>,
    /// `t_0, t_1, ..`.
    #[serde(with = "crate::json::scalar_vec")]
    pub t: Vec<T>,
    /// `b_1, b_2, ..`.
    #[serde(with = "crate::json::scalar_vec")]
    pub b: Vec<T>,
}

impl<T: Scalar> TorsionCoeffs<T> {
    pub fn t_at(&self, s: i64) -> T {
        self.t.get(s.unsigned_abs() as usize).cloned().unwrap_or_else(T::zero)
    }

    pub fn b_at(&self, s: i64) -> T {
        if s <= 0 {
            return T::zero();
        }
        self.b.get(s as usize - 1).cloned().unwrap_or_else(T::zero)
    }

    /// Number of odd `b_s`, `s > 0`.
    pub fn odd_b_count(&self) -> usize {
        self.b.iter().filter(|x| x.is_odd()).count()
    }
}

pub fn torsion_coeffs<T: Scalar>(delta: &LaurentPoly<T>) -> Result<TorsionCoeffs<T>> {
    let a = delta.symmetric_coefficients()?;
    let top = a.len();
    let t: Vec<T> = (0..top)
        .map(|s| {
            (1..top.saturating_sub(s))
                .fold(T::zero(), |acc, j| acc + T::from_usize(j).expect("index fits") * a[s + j].clone())
        })
        .collect();
    let b = (1..top).map(|s| if s % 2 == 1 { t[s].clone() } else { -t[s].clone() }).collect();
    Ok(TorsionCoeffs { a, t, b })
}
