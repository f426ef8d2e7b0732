use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::fox::{build_presentation, cover_images, group_ring_det, torsion_matrix, GeneratorImages};
use super::group::FiniteAbelian;
use super::ring::GroupRingElem;
use crate::braiddiag::BraidWord;
use crate::error::{Error, Result};
use crate::freegroup::{abelianize, monodromy_of_braid, FreeEndomorphism};
use crate::intlinalg::{alexander_from_monodromy, cokernel, has_alternating_signs, AbelianGroup, LaurentPoly, Matrix};
use crate::scalar::Scalar;

/// Normalized `(T - 1) τ̌` of the complement of the lifted axis, with the
/// data needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct RefinedTorsion<T: Scalar> {
    pub homology: AbelianGroup<T>,
    pub alexander: LaurentPoly<T>,
    /// Determinant of the Fox matrix before normalization.
    pub raw: GroupRingElem<T>,
    pub torsion: GroupRingElem<T>,
    /// The unit applied is `sign · T^shift · translation`.
    pub shift: i64,
    pub sign: i8,
    pub translation: Vec<u64>,
    /// Every `p_s` has coefficient signs `(-1)^j`.
    pub sign_pattern: bool,
}

impl<T: Scalar> RefinedTorsion<T> {
    pub fn group(&self) -> &Arc<FiniteAbelian> {
        self.torsion.group()
    }

    /// `(label, p_s)` for every structure, including those with `p_s = 0`.
    pub fn per_structure(&self) -> Vec<(Vec<u64>, LaurentPoly<T>)> {
        let g = self.group();
        (0..g.order()).map(|h| (g.decode(h), self.torsion.coefficient(h))).collect()
    }
}

/// Refined torsion of the lifted axis for a braid on an odd number of
/// strands with `det(I - A) != 0`.
pub fn refined_torsion<T: Scalar>(w: &BraidWord) -> Result<RefinedTorsion<T>> {
    w.require_odd()?;
    let t = refined_torsion_of_monodromy(&monodromy_of_braid(w))?;
    if w.is_alternating_annular() && !t.sign_pattern {
        return Err(Error::NoNormalizingUnit(format!("sign pattern fails for {}", t.torsion)));
    }
    Ok(t)
}

/// Refined torsion of the mapping torus of `f`, with labels taken from the
/// Smith basis of `coker(I - A)`.
pub fn refined_torsion_of_monodromy<T: Scalar>(f: &FreeEndomorphism) -> Result<RefinedTorsion<T>> {
    let a: Matrix<T> = abelianize(f);
    let alexander = alexander_from_monodromy(&a)?;
    let n = a.nrows();
    let homology = cokernel(&Matrix::<T>::identity(n).sub(&a));
    let images = cover_images(&homology)?;
    let raw = fox_determinant(f, &images)?;
    let (torsion, shift, sign, translation) = normalize(&raw, &alexander)?;
    let sign_pattern = torsion.support().all(|(_, p)| has_alternating_signs(p));
    let translation = images.group.decode(translation);
    Ok(RefinedTorsion { homology, alexander, raw, torsion, shift, sign, translation, sign_pattern })
}

fn fox_determinant<T: Scalar>(f: &FreeEndomorphism, images: &GeneratorImages) -> Result<GroupRingElem<T>> {
    let p = build_presentation(f);
    let m = torsion_matrix::<T>(&p, images)?;
    Ok(group_ring_det(&m, &images.group))
}

/// Chooses `±T^a` so the image under `h ↦ 1` is `Δ` and every `p_s` is
/// symmetric, then translates so the structure carrying the top
/// `T`-degree is the identity.
fn normalize<T: Scalar>(
    raw: &GroupRingElem<T>,
    alexander: &LaurentPoly<T>,
) -> Result<(GroupRingElem<T>, i64, i8, usize)> {
    if raw.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    let spec = raw.specialize();
    let (lo, hi) = match (spec.min_deg(), spec.max_deg()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::NoNormalizingUnit("specialization vanishes".into())),
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::NoNormalizingUnit("odd degree span".into()));
    }
    let shift = -(lo + hi) / 2;
    let centered = spec.shift(shift);
    let sign: i8 = if centered == *alexander {
        1
    } else if centered.neg() == *alexander {
        -1
    } else {
        return Err(Error::NoNormalizingUnit(format!("specialization {spec} is not a unit times {alexander}")));
    };
    let c = T::from_i64_exact(i64::from(sign));
    let unit = raw.mul_unit(0, shift, &c);
    if let Some((h, p)) = unit.support().find(|(_, p)| !p.is_symmetric()) {
        return Err(Error::NoNormalizingUnit(format!("{} has asymmetric coefficient {p}", unit.group().label(h))));
    }
    let h = translation(&unit);
    let g = unit.group().clone();
    Ok((unit.mul_unit(g.neg(h), 0, &T::one()), shift, sign, h))
}

fn translation<T: Scalar>(x: &GroupRingElem<T>) -> usize {
    let top = x.support().filter_map(|(_, p)| p.max_deg()).max().unwrap_or(0);
    let carriers: Vec<usize> = x.support().filter(|(_, p)| p.max_deg() == Some(top)).map(|(h, _)| h).collect();
    if let [h] = carriers[..] {
        return h;
    }
    let g = x.group().clone();
    (0..g.order())
        .find(|&h| {
            let y = x.mul_unit(g.neg(h), 0, &T::one());
            y.conjugate_labels() == y
        })
        .unwrap_or(0)
}
