//! Dense matrices over an arbitrary coefficient type.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::ring::ExactRing;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<F: Clone>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// The matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let rows: Vec<Vec<E>> = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| (0..self.cols).filter(|&j| j != c).map(|j| self[(i, j)].clone()).collect())
            .collect();
        if rows.is_empty() {
            return Matrix { rows: 0, cols: self.cols.saturating_sub(1), data: vec![] };
        }
        Matrix::from_rows(rows)
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.data.iter()
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

impl<E: ExactRing> Matrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| E::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { E::one() } else { E::zero() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = E::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&other[(k, j)]));
            }
            acc
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].sub(&other[(i, j)]))
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> E {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return E::one();
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = E::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(p) => {
                        m.swap_rows(k, p);
                        sign_flip = !sign_flip;
                    }
                    None => return E::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[(k, k)].mul(&m[(i, j)]).sub(&m[(i, k)].mul(&m[(k, j)]));
                    m[(i, j)] = v.exact_div(&prev);
                }
                m[(i, k)] = E::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_i64_exact(v)).collect()).collect())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Inertia `(positive, negative, zero)` of a symmetric integer matrix,
    /// computed by exact congruence diagonalization.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "inertia of a non-symmetric matrix");
        let mut m = self.clone();
        let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
        // Invariant: the signature of the original form equals
        // (pos - neg) + factor_sign * signature(m).
        let mut factor_sign = 1i32;
        while m.rows > 0 {
            let n = m.rows;
            let pivot = (0..n).find(|&i| !m[(i, i)].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => match (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && !m[(i, j)].is_zero())
                {
                    Some((i, j)) => {
                        // add row/column j to row/column i: new diagonal is 2 m_ij
                        for c in 0..n {
                            let v = m[(i, c)].clone() + m[(j, c)].clone();
                            m[(i, c)] = v;
                        }
                        for r in 0..n {
                            let v = m[(r, i)].clone() + m[(r, j)].clone();
                            m[(r, i)] = v;
                        }
                        i
                    }
                    None => {
                        zero += n;
                        break;
                    }
                },
            };
            m.swap_rows(0, pivot);
            m.swap_cols(0, pivot);
            let p = m[(0, 0)].clone();
            if p.is_positive() == (factor_sign > 0) {
                pos += 1;
            } else {
                neg += 1;
            }
            // Schur complement scaled by p: p*m_rest - v v^T; signature scales by sign(p)
            let rest = Matrix::from_fn(n - 1, n - 1, |i, j| {
                p.clone() * m[(i + 1, j + 1)].clone() - m[(i + 1, 0)].clone() * m[(0, j + 1)].clone()
            });
            if p.is_negative() {
                factor_sign = -factor_sign;
            }
            let g = rest.data.iter().fold(T::zero(), |acc, v| acc.gcd(v));
            m = if g.is_zero() || g.is_one() { rest } else { rest.map(|v| v.clone() / g.clone()) };
        }
        (pos, neg, zero)
    }

    pub fn signature(&self) -> i64 {
        let (p, n, _) = self.inertia();
        p as i64 - n as i64
    }
}

impl<E: fmt::Display> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}
