#![allow(dead_code)]

use std::collections::BTreeMap;

use braidfloer::braiddiag::{parse_braid, BraidWord};
use braidfloer::foxcalc::{FiniteAbelian, GroupRingElem};
use braidfloer::freegroup::FreeWord;
use braidfloer::intlinalg::{LaurentPoly, Matrix};
use braidfloer::{BigInt, Poly};
use num_integer::Integer;
use proptest::prelude::*;

pub fn braid(text: &str) -> BraidWord {
    parse_braid(text).unwrap()
}

pub fn poly(low: i64, coeffs: &[i64]) -> Poly {
    LaurentPoly::from_coeffs(low, coeffs)
}

/// Symmetric polynomial from its coefficients at `T^0, T^1, …`.
pub fn sym(coeffs: &[i64]) -> Poly {
    let n = coeffs.len() as i64 - 1;
    let mut full: Vec<i64> = coeffs.iter().rev().copied().collect();
    full.extend_from_slice(&coeffs[1..]);
    poly(-n, &full)
}

/// Words like `"g4^-1 g3^-1 g2 g1 g2"`.
pub fn free_word(text: &str) -> FreeWord {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let tok = tok.strip_prefix('g').unwrap();
        let (g, e) = match tok.split_once('^') {
            Some((g, e)) => (g.parse::<usize>().unwrap(), e.parse::<i64>().unwrap()),
            None => (tok.parse().unwrap(), 1),
        };
        letters.push((g, e));
    }
    FreeWord::from_runs(&letters)
}

/// `x = sign · T^shift · h · y` for some choice of sign, shift and `h`.
pub fn unit_equivalent(x: &GroupRingElem<BigInt>, y: &GroupRingElem<BigInt>) -> bool {
    let g = x.group().clone();
    (0..g.order()).any(|h| (-8..=8).any(|n| [1i64, -1].iter().any(|&s| y.mul_unit(h, n, &BigInt::from(s)) == *x)))
}

/// All automorphisms of `(Z/2)^r` as images of the standard basis.
pub fn gl2(r: usize) -> Vec<Vec<u64>> {
    let n = 1u64 << r;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(r: usize, n: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in 1..n {
            let span: Vec<u64> = (0..(1u64 << cur.len()))
                .map(|m| (0..cur.len()).filter(|&k| m >> k & 1 == 1).fold(0, |a, k| a ^ cur[k]))
                .collect();
            if !span.contains(&v) {
                cur.push(v);
                rec(r, n, cur, out);
                cur.pop();
            }
        }
    }
    rec(r, n, &mut cur, &mut out);
    out
}

/// Index in `group` of `Σ c_i · g_i` where `gens[i]` are group indices.
pub fn combine(group: &FiniteAbelian, gens: &[usize], coeffs: &[i64]) -> usize {
    gens.iter().zip(coeffs).fold(0, |acc, (&g, &c)| group.add(acc, group.times(g, c)))
}

/// Invariant factors from gcds of minors, trailing zeros for rank
/// deficiency.
pub fn determinantal_factors(m: &Matrix<BigInt>) -> Vec<BigInt> {
    let (r, c) = (m.nrows(), m.ncols());
    let k = r.min(c);
    let mut d: Vec<BigInt> = vec![BigInt::from(1)];
    for size in 1..=k {
        let mut g = BigInt::from(0);
        for rows in subsets(r, size) {
            for cols in subsets(c, size) {
                let sub = Matrix::from_fn(size, size, |i, j| m[(rows[i], cols[j])].clone());
                g = g.gcd(&sub.det());
            }
        }
        d.push(g);
    }
    (1..=k).map(|i| if d[i] == BigInt::from(0) { BigInt::from(0) } else { &d[i] / &d[i - 1] }).collect()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

pub fn small_matrix() -> impl Strategy<Value = Matrix<BigInt>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-10i64..=10, c), r).prop_map(|rows| {
            Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
        })
    })
}

pub fn free_word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=rank, prop::bool::ANY), 0..=max_len).prop_map(|ls| {
        FreeWord::from_letters(&ls.into_iter().map(|(g, p)| (g, if p { 1 } else { -1 })).collect::<Vec<_>>())
    })
}

/// Fully alternating braids on `b ∈ {3, 5, 7}` strands with at most
/// `max_len` letters: every generator occurs and `σ_i` has sign `ε (-1)^i`.
pub fn fully_alternating(max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop_oneof![Just(3usize), Just(5), Just(7)].prop_flat_map(move |b| {
        let extra = max_len - (b - 1);
        (
            Just(b),
            prop::bool::ANY,
            prop::collection::vec(1..b, 0..=extra),
            prop::collection::vec(any::<prop::sample::Index>(), b - 1 + extra),
        )
            .prop_map(|(b, eps, extra, order)| {
                let mut idx: Vec<usize> = (1..b).chain(extra).collect();
                for (k, ix) in order.iter().enumerate().take(idx.len()) {
                    let j = ix.index(idx.len() - k) + k;
                    idx.swap(k, j);
                }
                let letters = idx.into_iter().map(|i| (i, if (i % 2 == 0) == eps { 1 } else { -1 })).collect();
                BraidWord::new(b, letters).unwrap()
            })
    })
}

/// Staircase braids with run lengths `2k ≤ 6` and exponents `≤ 4`.
pub fn staircase_braid() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1usize..=3, 0usize..=1, prop::collection::vec(1i64..=4, 6)), 1..=3).prop_map(|runs| {
        let mut powers: Vec<(usize, i64)> = Vec::new();
        for (k, gap, exps) in runs {
            let start = powers.last().map_or(1, |&(end, _)| end + 2) + gap;
            for (j, &e) in exps.iter().enumerate().take(2 * k) {
                powers.push((start + j, e));
            }
        }
        let top = powers.last().unwrap().0;
        let strands = if top.is_multiple_of(2) { top + 1 } else { top + 2 };
        BraidWord::from_powers(strands, &powers).unwrap()
    })
}

pub fn multiset<T: Ord + Clone>(v: &[T]) -> BTreeMap<T, usize> {
    let mut out = BTreeMap::new();
    for x in v {
        *out.entry(x.clone()).or_default() += 1;
    }
    out
}
pub mod props;
