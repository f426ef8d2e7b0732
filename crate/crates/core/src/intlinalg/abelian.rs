//! Finitely generated abelian groups presented as cokernels.

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::snf::smith_normal_form;
use crate::scalar::Scalar;

/// `Z/d_1 ⊕ … ⊕ Z/d_r ⊕ Z^free` with `d_1 | d_2 | …`, each `d_i >= 2`,
/// together with the images of the presenting generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct AbelianGroup<T: Scalar> {
    #[serde(with = "crate::json::scalar_vec")]
    factors: Vec<T>,
    free_rank: usize,
    /// Image of generator `e_i`: torsion coordinates (reduced mod `d_k`)
    /// followed by `free_rank` free coordinates.
    #[serde(with = "crate::json::scalar_vec_vec")]
    generator_images: Vec<Vec<T>>,
}

impl<T: Scalar> AbelianGroup<T> {
    pub fn trivial(generators: usize) -> Self {
        AbelianGroup { factors: vec![], free_rank: 0, generator_images: vec![vec![]; generators] }
    }

    pub fn invariant_factors(&self) -> &[T] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn generator_images(&self) -> &[Vec<T>] {
        &self.generator_images
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group, `None` if infinite.
    pub fn order(&self) -> Option<T> {
        self.is_finite().then(|| self.factors.iter().fold(T::one(), |a, d| a * d.clone()))
    }

    /// Reduces a coordinate vector into canonical form.
    pub fn reduce(&self, coords: &[T]) -> Vec<T> {
        coords
            .iter()
            .enumerate()
            .map(|(k, c)| match self.factors.get(k) {
                Some(d) => c.mod_floor(d),
                None => c.clone(),
            })
            .collect()
    }

    /// Image of the integer combination `Σ coeffs[i] e_i`.
    pub fn image_of(&self, coeffs: &[T]) -> Vec<T> {
        let width = self.factors.len() + self.free_rank;
        let mut acc = vec![T::zero(); width];
        for (c, img) in coeffs.iter().zip(&self.generator_images) {
            for (a, x) in acc.iter_mut().zip(img) {
                *a = a.clone() + c.clone() * x.clone();
            }
        }
        self.reduce(&acc)
    }

    /// Human-readable structure such as `Z/2 + Z/2 + Z`.
    pub fn structure(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The cokernel `Z^n / M Z^m` of an `n × m` integer matrix, with the image
/// of each standard basis vector `e_i` of `Z^n`.
pub fn cokernel<T: Scalar>(m: &Matrix<T>) -> AbelianGroup<T> {
    let n = m.nrows();
    let snf = smith_normal_form(m);
    let diag: Vec<T> = (0..n).map(|i| if i < m.ncols() { snf.d[(i, i)].clone() } else { T::zero() }).collect();
    // coordinates with d = 1 vanish; d = 0 are free
    let torsion: Vec<usize> = (0..n).filter(|&i| !diag[i].is_zero() && !diag[i].is_one()).collect();
    let free: Vec<usize> = (0..n).filter(|&i| diag[i].is_zero()).collect();
    let factors: Vec<T> = torsion.iter().map(|&i| diag[i].clone()).collect();
    let generator_images = (0..n)
        .map(|j| {
            torsion
                .iter()
                .map(|&i| snf.u[(i, j)].mod_floor(&diag[i]))
                .chain(free.iter().map(|&i| snf.u[(i, j)].clone()))
                .collect()
        })
        .collect();
    AbelianGroup { factors, free_rank: free.len(), generator_images }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_is_free() {
        let g = cokernel(&Matrix::<i64>::from_i64_rows(&[&[0]]));
        assert_eq!(g.free_rank(), 1);
        assert!(g.invariant_factors().is_empty());
        assert_eq!(g.order(), None);
    }

    #[test]
    fn cyclic_of_order_five() {
        // I - A for A = [[5,3],[3,2]]
        let g = cokernel(&Matrix::<i64>::from_i64_rows(&[&[-4, -3], &[-3, -1]]));
        assert_eq!(g.invariant_factors(), &[5]);
        let imgs = g.generator_images();
        // e_2 = -3 e_1 up to automorphism of Z/5
        assert_eq!((imgs[1][0] - (-3 * imgs[0][0])).rem_euclid(5), 0);
        assert_ne!(imgs[0][0] % 5, 0);
    }

    #[test]
    fn image_of_relation_vanishes() {
        let m = Matrix::<i64>::from_i64_rows(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 4]]);
        let g = cokernel(&m);
        assert_eq!(g.order(), Some(m.det().abs()));
        for j in 0..3 {
            let col = m.column(j);
            assert!(g.image_of(&col).iter().all(|x| *x == 0));
        }
    }
}
