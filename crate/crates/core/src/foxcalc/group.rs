use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlinalg::AbelianGroup;
use crate::scalar::Scalar;

/// Largest group order accepted for group-ring arithmetic.
pub const MAX_GROUP_ORDER: u64 = 1 << 20;

/// `Z/d_1 ⊕ … ⊕ Z/d_r`; elements are mixed-radix indices with the first
/// coordinate varying slowest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelian {
    moduli: Vec<u64>,
}

impl FiniteAbelian {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        let mut order: u64 = 1;
        for &d in &moduli {
            order = order
                .checked_mul(d)
                .filter(|&o| o <= MAX_GROUP_ORDER)
                .ok_or_else(|| Error::GroupTooLarge(moduli.iter().map(u64::to_string).collect::<Vec<_>>().join("*")))?;
        }
        Ok(FiniteAbelian { moduli })
    }

    pub fn trivial() -> Self {
        FiniteAbelian { moduli: vec![] }
    }

    /// The torsion part of a finite cokernel.
    pub fn from_abelian<T: Scalar>(g: &AbelianGroup<T>) -> Result<Self> {
        if !g.is_finite() {
            return Err(Error::NotRationalHomologySphere);
        }
        let moduli = g
            .invariant_factors()
            .iter()
            .map(|d| d.to_u64().ok_or_else(|| Error::GroupTooLarge(d.to_string())))
            .collect::<Result<Vec<_>>>()?;
        FiniteAbelian::new(moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn encode(&self, coords: &[i64]) -> usize {
        let mut idx = 0usize;
        for (k, &d) in self.moduli.iter().enumerate() {
            let c = coords.get(k).copied().unwrap_or(0).rem_euclid(d as i64) as usize;
            idx = idx * d as usize + c;
        }
        idx
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.moduli.len()];
        for (k, &d) in self.moduli.iter().enumerate().rev() {
            out[k] = (idx % d as usize) as u64;
            idx /= d as usize;
        }
        out
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut idx = 0usize;
        let mut place = 1usize;
        let (mut a, mut b) = (a, b);
        for &d in self.moduli.iter().rev() {
            let d = d as usize;
            let digit = (a % d + b % d) % d;
            idx += digit * place;
            place *= d;
            a /= d;
            b /= d;
        }
        idx
    }

    pub fn neg(&self, a: usize) -> usize {
        let coords: Vec<i64> = self.decode(a).into_iter().map(|c| -(c as i64)).collect();
        self.encode(&coords)
    }

    /// `k · a`.
    pub fn times(&self, a: usize, k: i64) -> usize {
        let coords: Vec<i64> = self.decode(a).into_iter().map(|c| c as i64 * k).collect();
        self.encode(&coords)
    }

    /// Renders an element as `e1^a e2^b …`, `1` for the identity.
    pub fn label(&self, a: usize) -> String {
        let parts: Vec<String> = self
            .decode(a)
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(k, c)| if c == 1 { format!("e{}", k + 1) } else { format!("e{}^{}", k + 1, c) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}
