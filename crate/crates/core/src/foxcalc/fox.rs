use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::group::FiniteAbelian;
use super::ring::GroupRingElem;
use crate::error::{Error, Result};
use crate::freegroup::{FreeEndomorphism, FreeWord};
use crate::intlinalg::{AbelianGroup, Matrix};
use crate::scalar::Scalar;

/// Formal integer combination of free-group words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeGroupRing<T: Scalar> {
    terms: BTreeMap<FreeWord, T>,
}

impl<T: Scalar> FreeGroupRing<T> {
    pub fn zero() -> Self {
        FreeGroupRing { terms: BTreeMap::new() }
    }

    pub fn word(w: FreeWord) -> Self {
        let mut out = Self::zero();
        out.add_term(w, T::one());
        out
    }

    pub fn add_term(&mut self, w: FreeWord, c: T) {
        let entry = self.terms.entry(w.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), a.clone() * b.clone());
            }
        }
        out
    }
}

/// Left Fox derivative `∂w/∂x` in the free group ring on `generators`
/// letters.
pub fn fox_derivative<T: Scalar>(w: &FreeWord, x: usize, generators: usize) -> Result<FreeGroupRing<T>> {
    if x == 0 || x > generators {
        return Err(Error::UnknownGenerator(x));
    }
    if w.max_generator() > generators {
        return Err(Error::UnknownGenerator(w.max_generator()));
    }
    let mut out = FreeGroupRing::zero();
    let mut prefix = FreeWord::identity();
    for &(g, e) in w.letters() {
        let next = prefix.mul(&FreeWord::from_letters(&[(g, e)]));
        if g == x {
            if e > 0 {
                out.add_term(prefix.clone(), T::one());
            } else {
                out.add_term(next.clone(), -T::one());
            }
        }
        prefix = next;
    }
    Ok(out)
}

/// Where each free generator goes in `H × Z`: a group element and a power
/// of `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorImages {
    pub group: Arc<FiniteAbelian>,
    pub images: Vec<(usize, i64)>,
}

impl GeneratorImages {
    pub fn word(&self, w: &FreeWord) -> (usize, i64) {
        let g = &self.group;
        w.letters().iter().fold((0, 0), |(h, n), &(x, e)| {
            let (hx, nx) = self.images[x - 1];
            let hx = if e > 0 { hx } else { g.neg(hx) };
            (g.add(h, hx), n + i64::from(e) * nx)
        })
    }
}

pub fn push_forward<T: Scalar>(sum: &FreeGroupRing<T>, images: &GeneratorImages) -> GroupRingElem<T> {
    let mut out = GroupRingElem::zero(images.group.clone());
    for (w, c) in sum.terms() {
        let (h, n) = images.word(w);
        out = out.add(&GroupRingElem::monomial(images.group.clone(), h, n, c.clone()));
    }
    out
}

/// Presentation of the mapping torus: generators `γ_1 … γ_n` and `t`
/// (numbered `n + 1`), relations `γ_i^-1 t R(γ_i) t^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub rank: usize,
    pub relations: Vec<FreeWord>,
}

impl Presentation {
    pub fn t(&self) -> usize {
        self.rank + 1
    }
}

pub fn build_presentation(f: &FreeEndomorphism) -> Presentation {
    let n = f.rank();
    let t = FreeWord::generator(n + 1);
    let relations =
        (1..=n).map(|i| FreeWord::generator(i).inverse().mul(&t).mul(f.image(i)).mul(&t.inverse())).collect();
    Presentation { rank: n, relations }
}

/// Generator images for `γ_i ↦ [γ_i] ∈ H`, `t ↦ T`.
pub fn cover_images<T: Scalar>(h: &AbelianGroup<T>) -> Result<GeneratorImages> {
    let group = Arc::new(FiniteAbelian::from_abelian(h)?);
    let mut images: Vec<(usize, i64)> = h
        .generator_images()
        .iter()
        .map(|v| {
            let coords: Vec<i64> = v.iter().map(|c| c.to_i64().unwrap_or(0)).collect();
            (group.encode(&coords), 0)
        })
        .collect();
    images.push((0, 1));
    Ok(GeneratorImages { group, images })
}

/// Entry `(i, j)` is the image of `∂r_i/∂γ_j`; the `t` column is dropped.
pub fn torsion_matrix<T: Scalar>(p: &Presentation, images: &GeneratorImages) -> Result<Matrix<GroupRingElem<T>>> {
    let n = p.rank;
    let mut rows = Vec::with_capacity(n);
    for r in &p.relations {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            row.push(push_forward(&fox_derivative::<T>(r, j, n + 1)?, images));
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows))
}

/// Determinant by Laplace expansion along rows with memoized column
/// subsets.
pub fn group_ring_det<T: Scalar>(m: &Matrix<GroupRingElem<T>>, group: &Arc<FiniteAbelian>) -> GroupRingElem<T> {
    let n = m.nrows();
    assert!(n < 63, "matrix too large for subset expansion");
    let mut memo: Vec<Option<GroupRingElem<T>>> = vec![None; 1 << n];
    memo[0] = Some(GroupRingElem::one(group.clone()));
    for mask in 1usize..(1 << n) {
        let row = n - mask.count_ones() as usize;
        let mut acc = GroupRingElem::zero(group.clone());
        for (pos, j) in (0..n).filter(|j| mask >> j & 1 == 1).enumerate() {
            let e = &m[(row, j)];
            if e.is_zero() {
                continue;
            }
            let minor = memo[mask & !(1 << j)].as_ref().expect("smaller subsets come first");
            if minor.is_zero() {
                continue;
            }
            let term = e.mul(minor);
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        memo[mask] = Some(acc);
    }
    memo.pop().flatten().expect("full subset computed")
}
