use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::group::FiniteAbelian;
use crate::intlinalg::LaurentPoly;
use crate::scalar::Scalar;

/// An element `Σ_s p_s(T) · s` of `Z[H][T, T^-1]` for a finite abelian `H`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElem<T: Scalar> {
    group: Arc<FiniteAbelian>,
    coeffs: BTreeMap<usize, LaurentPoly<T>>,
}

impl<T: Scalar> GroupRingElem<T> {
    pub fn zero(group: Arc<FiniteAbelian>) -> Self {
        GroupRingElem { group, coeffs: BTreeMap::new() }
    }

    pub fn one(group: Arc<FiniteAbelian>) -> Self {
        Self::monomial(group, 0, 0, T::one())
    }

    /// `c · T^n · h`.
    pub fn monomial(group: Arc<FiniteAbelian>, h: usize, n: i64, c: T) -> Self {
        let mut out = Self::zero(group);
        out.add_poly(h, &LaurentPoly::monomial(n, c));
        out
    }

    pub fn from_polys(group: Arc<FiniteAbelian>, polys: impl IntoIterator<Item = (usize, LaurentPoly<T>)>) -> Self {
        let mut out = Self::zero(group);
        for (h, p) in polys {
            out.add_poly(h, &p);
        }
        out
    }

    pub fn group(&self) -> &Arc<FiniteAbelian> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_poly(&mut self, h: usize, p: &LaurentPoly<T>) {
        if p.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(h).or_insert_with(LaurentPoly::zero);
        *entry = entry.add(p);
        if entry.is_zero() {
            self.coeffs.remove(&h);
        }
    }

    /// `p_s` for the element with index `h`.
    pub fn coefficient(&self, h: usize) -> LaurentPoly<T> {
        self.coeffs.get(&h).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &LaurentPoly<T>)> {
        self.coeffs.iter().map(|(h, p)| (*h, p))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (h, p) in &other.coeffs {
            out.add_poly(*h, p);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem { group: self.group.clone(), coeffs: self.coeffs.iter().map(|(h, p)| (*h, p.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.group.clone());
        for (a, p) in &self.coeffs {
            for (b, q) in &other.coeffs {
                out.add_poly(self.group.add(*a, *b), &p.mul(q));
            }
        }
        out
    }

    /// Multiplies by the unit `c · T^n · h`.
    pub fn mul_unit(&self, h: usize, n: i64, c: &T) -> Self {
        GroupRingElem {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(a, p)| (self.group.add(*a, h), p.shift(n).scale(c))).collect(),
        }
    }

    /// Image under `h ↦ 1`.
    pub fn specialize(&self) -> LaurentPoly<T> {
        self.coeffs.values().fold(LaurentPoly::zero(), |acc, p| acc.add(p))
    }

    /// Image under `h ↦ -h`.
    pub fn conjugate_labels(&self) -> Self {
        GroupRingElem {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(h, p)| (self.group.neg(*h), p.clone())).collect(),
        }
    }

    /// Image under `T ↦ T^-1`.
    pub fn conjugate_t(&self) -> Self {
        GroupRingElem {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(h, p)| (*h, p.conjugate())).collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for GroupRingElem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (h, p) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let label = self.group.label(*h);
            let single_const = p.min_deg() == Some(0) && p.max_deg() == Some(0);
            match (single_const, label.as_str()) {
                (true, "1") => write!(f, "{p}")?,
                (true, _) if p.coeff(0).is_one() => write!(f, "{label}")?,
                (true, _) => write!(f, "{p} {label}")?,
                (false, "1") => write!(f, "({p})")?,
                (false, _) => write!(f, "({p}) {label}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for GroupRingElem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElem[{:?}]({self})", self.group.moduli())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
struct Term<T: Scalar> {
    h: Vec<u64>,
    p: LaurentPoly<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
struct Repr<T: Scalar> {
    moduli: Vec<u64>,
    terms: Vec<Term<T>>,
}

impl<T: Scalar> Serialize for GroupRingElem<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            moduli: self.group.moduli().to_vec(),
            terms: self.coeffs.iter().map(|(h, p)| Term { h: self.group.decode(*h), p: p.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for GroupRingElem<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = Repr::<T>::deserialize(d)?;
        let group = Arc::new(FiniteAbelian::new(r.moduli).map_err(serde::de::Error::custom)?);
        let polys: Vec<(usize, LaurentPoly<T>)> = r
            .terms
            .into_iter()
            .map(|t| (group.encode(&t.h.iter().map(|&c| c as i64).collect::<Vec<_>>()), t.p))
            .collect();
        Ok(GroupRingElem::from_polys(group, polys))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z5() -> Arc<FiniteAbelian> {
        Arc::new(FiniteAbelian::new(vec![5]).unwrap())
    }

    #[test]
    fn ring_operations() {
        let g = z5();
        let e = GroupRingElem::<i64>::monomial(g.clone(), 1, 0, 1);
        let t = GroupRingElem::<i64>::monomial(g.clone(), 0, 1, 1);
        let mut pow = GroupRingElem::one(g.clone());
        for _ in 0..5 {
            pow = pow.mul(&e);
        }
        assert_eq!(pow, GroupRingElem::one(g.clone()));
        let x = e.add(&t).mul(&e.sub(&t));
        assert_eq!(x.coefficient(2), LaurentPoly::one());
        assert_eq!(x.coefficient(0), LaurentPoly::monomial(2, -1));
        assert_eq!(x.specialize(), LaurentPoly::from_coeffs(0, &[1, 0, -1]));
    }

    #[test]
    fn display_and_json() {
        let g = z5();
        let x = GroupRingElem::<i64>::from_polys(
            g,
            vec![(0, LaurentPoly::one()), (1, LaurentPoly::one()), (2, LaurentPoly::from_coeffs(-1, &[-1, 3, -1]))],
        );
        assert_eq!(x.to_string(), "1 + e1 + (-T^-1 + 3 - T) e1^2");
        let js = serde_json::to_string(&x).unwrap();
        let back: GroupRingElem<i64> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
    }
}
