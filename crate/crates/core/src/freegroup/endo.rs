use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::FreeWord;
use crate::braiddiag::BraidWord;
use crate::error::{Error, Result};
use crate::intlinalg::Matrix;
use crate::scalar::Scalar;

/// An endomorphism of the free group of rank `images.len()`, stored by the
/// reduced images of the generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeEndomorphism {
    images: Vec<FreeWord>,
}

impl FreeEndomorphism {
    pub fn identity(rank: usize) -> Self {
        FreeEndomorphism { images: (1..=rank).map(FreeWord::generator).collect() }
    }

    /// Fails if an image mentions a generator beyond the rank.
    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if let Some(g) = images.iter().map(FreeWord::max_generator).find(|&g| g > rank) {
            return Err(Error::UnknownGenerator(g));
        }
        Ok(FreeEndomorphism { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// `R(γ_i)` for `i` counted from 1.
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &(g, e) in w.letters() {
            let img = &self.images[g - 1];
            out = if e > 0 { out.mul(img) } else { out.mul(&img.inverse()) };
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == FreeWord::generator(i + 1))
    }
}

/// The twist `D_i^{±1}` along the chain curve `γ_i`.
///
/// `D_i` sends `γ_{i+1} ↦ γ_i γ_{i+1}` and `γ_{i-1} ↦ γ_{i-1} γ_i^-1`, fixing
/// the other generators, and `D_i^-1` is its inverse. `D_2^{±1}` is further
/// followed by conjugation with `γ_2^{∓1}`, so `γ_1 ↦ γ_2^{∓1} γ_1`. That
/// inner factor does not change the mapping torus and keeps the rank-two
/// images in their usual form; the braid relations hold on the nose.
pub fn dehn_twist(i: usize, sign: i8, rank: usize) -> Result<FreeEndomorphism> {
    if i == 0 || i > rank {
        return Err(Error::IndexOutOfRange { index: i as i64, max: rank });
    }
    let s = if sign < 0 { -1 } else { 1 };
    let mut images = FreeEndomorphism::identity(rank).images;
    if i < rank {
        images[i] = FreeWord::from_letters(&[(i, s), (i + 1, 1)]);
    }
    if i > 1 {
        images[i - 2] = FreeWord::from_letters(&[(i - 1, 1), (i, -s)]);
    }
    if i == 2 {
        let c = FreeWord::from_letters(&[(2, -s)]);
        let c_inv = c.inverse();
        for w in &mut images {
            *w = c.mul(w).mul(&c_inv);
        }
    }
    Ok(FreeEndomorphism { images })
}

/// `f ∘ g`, i.e. `γ ↦ f(g(γ))`.
pub fn compose(f: &FreeEndomorphism, g: &FreeEndomorphism) -> Result<FreeEndomorphism> {
    if f.rank() != g.rank() {
        return Err(Error::RankMismatch(f.rank(), g.rank()));
    }
    Ok(FreeEndomorphism { images: g.images.iter().map(|w| f.apply(w)).collect() })
}

/// Monodromy `D_{l_1} ∘ … ∘ D_{l_k}` of the branched double cover, where
/// `l_1` is the leftmost letter; the rightmost twist acts first.
pub fn monodromy_of_braid(w: &BraidWord) -> FreeEndomorphism {
    let rank = w.strands().saturating_sub(1);
    let mut cur = FreeEndomorphism::identity(rank);
    for &(i, s) in w.letters().iter().rev() {
        let d = dehn_twist(i, s, rank).expect("braid letters are in range");
        cur = FreeEndomorphism { images: cur.images.iter().map(|x| d.apply(x)).collect() };
    }
    cur
}

/// Action on first homology; column `i` holds the exponent sums of `R(γ_i)`.
pub fn abelianize<T: Scalar>(f: &FreeEndomorphism) -> Matrix<T> {
    let n = f.rank();
    let cols: Vec<Vec<i64>> = f.images.iter().map(|w| w.exponent_sums(n)).collect();
    Matrix::from_fn(n, n, |i, j| T::from_i64_exact(cols[j][i]))
}

impl fmt::Display for FreeEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "g{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeEndomorphism[")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "g{} -> {}", i + 1, w)?;
        }
        write!(f, "]")
    }
}
