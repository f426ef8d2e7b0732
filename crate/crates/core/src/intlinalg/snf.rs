//! Smith normal form by elementary row and column operations.

use super::matrix::Matrix;
use crate::scalar::Scalar;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, its nonzero
/// diagonal entries positive and each dividing the next.
#[derive(Debug, Clone)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> SmithForm<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.nrows().min(self.d.ncols())).map(|i| self.d[(i, i)].clone()).collect()
    }
}

fn row_add<T: Scalar>(m: &mut Matrix<T>, target: usize, source: usize, k: &T) {
    for j in 0..m.ncols() {
        let v = m[(target, j)].clone() + k.clone() * m[(source, j)].clone();
        m[(target, j)] = v;
    }
}

fn col_add<T: Scalar>(m: &mut Matrix<T>, target: usize, source: usize, k: &T) {
    for i in 0..m.nrows() {
        let v = m[(i, target)].clone() + k.clone() * m[(i, source)].clone();
        m[(i, target)] = v;
    }
}

fn row_neg<T: Scalar>(m: &mut Matrix<T>, r: usize) {
    for j in 0..m.ncols() {
        let v = -m[(r, j)].clone();
        m[(r, j)] = v;
    }
}

pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut d = m.clone();
    let mut u = Matrix::<T>::identity(rows);
    let mut v = Matrix::<T>::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let p = d[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = d[(i, k)].div_floor(&p);
                row_add(&mut d, i, k, &-q.clone());
                row_add(&mut u, i, k, &-q);
                if !d[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = d[(k, j)].div_floor(&p);
                col_add(&mut d, j, k, &-q.clone());
                col_add(&mut v, j, k, &-q);
                if !d[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offending = (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !(d[(i, j)].clone() % p.clone()).is_zero()));
            match offending {
                Some(i) => {
                    row_add(&mut d, k, i, &T::one());
                    row_add(&mut u, k, i, &T::one());
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            row_neg(&mut d, k);
            row_neg(&mut u, k);
        }
    }
    finish(u, d, v)
}

fn finish<T: Scalar>(u: Matrix<T>, d: Matrix<T>, v: Matrix<T>) -> SmithForm<T> {
    SmithForm { u, d, v }
}
