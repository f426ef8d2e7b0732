//! Integer Laurent polynomials in one variable `T`.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::ExactRing;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finitely supported map from `T`-exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, c)
    }

    /// The variable `T`.
    pub fn t() -> Self {
        Self::monomial(1, T::one())
    }

    pub fn monomial(exp: i64, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Builds `Σ coeffs[k] T^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(low + k as i64, T::from_i64_exact(c));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> T {
        self.terms.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Degree span `max - min`, or `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_deg()? - self.min_deg()?)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())).collect() }
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution `T -> T^-1`.
    pub fn conjugate(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn evaluate_at_one(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc + c.clone())
    }

    pub fn evaluate_at_minus_one(&self) -> T {
        self.terms.iter().fold(
            T::zero(),
            |acc, (e, c)| {
                if e.rem_euclid(2) == 0 {
                    acc + c.clone()
                } else {
                    acc - c.clone()
                }
            },
        )
    }

    /// Exact quotient in `Z[T, T^-1]`; `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dmin = other.min_deg()?;
        let dmax = other.max_deg()?;
        let lead = other.terms[&dmax].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rmax) = rem.max_deg() {
            let rmin = rem.min_deg()?;
            if rmax - rmin < dmax - dmin {
                return None;
            }
            let c = rem.terms[&rmax].clone();
            if !(c.clone() % lead.clone()).is_zero() {
                return None;
            }
            let q = c / lead.clone();
            let e = rmax - dmax;
            quot.add_term(e, q.clone());
            rem = rem.sub(&other.shift(e).scale(&q));
        }
        Some(quot)
    }

    /// Multiplies by the unique unit `±T^k` that makes the polynomial
    /// symmetric under `T -> T^-1` with positive value at `T = 1`.
    pub fn symmetrize(&self) -> Result<Self> {
        let (lo, hi) = match (self.min_deg(), self.max_deg()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::Normalization("zero polynomial".into())),
        };
        if (lo + hi) % 2 != 0 {
            return Err(Error::Normalization(format!("odd degree span {}", hi - lo)));
        }
        let centered = self.shift(-(lo + hi) / 2);
        let v = centered.evaluate_at_one();
        let out = if v.is_negative() {
            centered.neg()
        } else if v.is_zero() {
            return Err(Error::Normalization("vanishes at T = 1".into()));
        } else {
            centered
        };
        if !out.is_symmetric() {
            return Err(Error::Asymmetric);
        }
        Ok(out)
    }

    /// Symmetric coefficients `a_0, a_1, ..` with `Δ = a_0 + Σ a_i (T^i + T^-i)`.
    pub fn symmetric_coefficients(&self) -> Result<Vec<T>> {
        if !self.is_symmetric() {
            return Err(Error::Asymmetric);
        }
        let top = self.max_deg().unwrap_or(0).max(0);
        Ok((0..=top).map(|i| self.coeff(i)).collect())
    }

    /// Coefficients as explicit `(exponent, coefficient)` pairs, lowest first.
    pub fn to_pairs(&self) -> Vec<(i64, T)> {
        self.terms.iter().map(|(e, c)| (*e, c.clone())).collect()
    }

    /// Converts the coefficients to another scalar type.
    pub fn convert<U: Scalar>(&self) -> LaurentPoly<U> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| {
            let v = c.to_i64().expect("coefficient out of i64 range");
            (*e, U::from_i64_exact(v))
        }))
    }
}

impl<T: Scalar> ExactRing for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        LaurentPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn exact_div(&self, other: &Self) -> Self {
        self.checked_div(other).expect("inexact Laurent division")
    }
}

fn superscript(n: i64) -> String {
    if n == 1 {
        String::new()
    } else {
        format!("^{n}")
    }
}

/// Renders lowest exponent first, e.g. `-T^-1 + 7 - T`.
impl<T: Scalar> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if *e == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                write!(f, "T{}", superscript(*e))?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<T: Scalar> serde::Serialize for LaurentPoly<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, crate::json::IntRepr::from_scalar(c)))?;
        }
        seq.end()
    }
}

impl<'de, T: Scalar> serde::Deserialize<'de> for LaurentPoly<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, crate::json::IntRepr)> = serde::Deserialize::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c.to_scalar().map_err(serde::de::Error::custom)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    #[test]
    fn display_lowest_first() {
        let p = P::from_coeffs(-1, &[-1, 7, -1]);
        assert_eq!(p.to_string(), "-T^-1 + 7 - T");
        assert_eq!(P::from_coeffs(-2, &[1, -14, 34, -14, 1]).to_string(), "T^-2 - 14T^-1 + 34 - 14T + T^2");
    }

    #[test]
    fn conjugate_and_evaluate() {
        let p = P::from_coeffs(-1, &[-1, 7, -1]);
        assert_eq!(p.conjugate(), p);
        assert_eq!(p.evaluate_at_one(), 5);
        assert_eq!(p.evaluate_at_minus_one(), 9);
    }

    #[test]
    fn ring_identities() {
        let t_minus_1 = P::from_coeffs(0, &[-1, 1]);
        let tinv = P::monomial(-1, 1);
        assert_eq!(t_minus_1.mul(&tinv), P::from_coeffs(-1, &[-1, 1]));
        let a = P::from_coeffs(-2, &[3, 0, -1, 4]);
        let b = P::from_coeffs(1, &[2, 5]);
        assert_eq!(a.mul(&b).checked_div(&b), Some(a.clone()));
        assert_eq!(a.add(&a.neg()), P::zero());
        assert!(P::from_coeffs(0, &[1, 1]).checked_div(&P::from_coeffs(0, &[2, 1])).is_none());
    }

    #[test]
    fn symmetrize_fixes_unit() {
        let raw = P::from_coeffs(0, &[1, -7, 1]);
        assert_eq!(raw.symmetrize().unwrap(), P::from_coeffs(-1, &[-1, 7, -1]));
        let again = raw.symmetrize().unwrap();
        assert_eq!(again.symmetrize().unwrap(), again);
        assert!(P::from_coeffs(0, &[1, 2]).symmetrize().is_err());
    }
}
