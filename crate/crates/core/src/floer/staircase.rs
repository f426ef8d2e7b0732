use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braiddiag::BraidWord;
use crate::error::{Error, Result};

/// One word `σ_i^{n_i} σ_{i+1}^{n_{i+1}} … σ_{i+2k-1}^{n_{i+2k-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseWord {
    pub start: usize,
    pub exponents: Vec<u64>,
}

impl StaircaseWord {
    pub fn k(&self) -> usize {
        self.exponents.len() / 2
    }

    pub fn end(&self) -> usize {
        self.start + self.exponents.len() - 1
    }

    /// `T_j = Σ_l (n_l n_{l+1} - 1)`.
    pub fn squares(&self) -> u64 {
        self.exponents.windows(2).map(|p| p[0] * p[1] - 1).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseForm {
    pub strands: usize,
    pub words: Vec<StaircaseWord>,
}

impl StaircaseForm {
    pub fn new(strands: usize, words: Vec<StaircaseWord>) -> Result<Self> {
        if strands.is_multiple_of(2) {
            return Err(Error::EvenStrandCount(strands));
        }
        if words.is_empty() {
            return Err(Error::NotStaircase("no words".into()));
        }
        let mut prev_end: Option<usize> = None;
        for w in &words {
            if w.exponents.is_empty() || w.exponents.len() % 2 == 1 {
                return Err(Error::OddRun(w.exponents.len()));
            }
            if w.start == 0 || w.end() >= strands {
                return Err(Error::IndexOutOfRange { index: w.end() as i64, max: strands - 1 });
            }
            if w.exponents.contains(&0) {
                return Err(Error::NotStaircase(format!("zero exponent in word at {}", w.start)));
            }
            if let Some(e) = prev_end {
                if w.start <= e + 1 {
                    return Err(Error::NotStaircase(format!("word at {} starts too close to {e}", w.start)));
                }
            }
            prev_end = Some(w.end());
        }
        Ok(StaircaseForm { strands, words })
    }

    pub fn genus(&self) -> u64 {
        (self.strands as u64 - 1) / 2
    }

    /// `m = g - Σ k_j`.
    pub fn m(&self) -> u64 {
        self.genus() - self.words.iter().map(|w| w.k() as u64).sum::<u64>()
    }

    pub fn s(&self) -> u64 {
        self.words.len() as u64
    }

    pub fn squares(&self) -> Vec<u64> {
        self.words.iter().map(StaircaseWord::squares).collect()
    }

    pub fn total_squares(&self) -> u64 {
        self.squares().iter().sum()
    }

    /// Number of parallel copies of each chain curve.
    pub fn multiplicities(&self) -> BTreeMap<usize, u64> {
        self.words.iter().flat_map(|w| w.exponents.iter().enumerate().map(move |(l, &n)| (w.start + l, n))).collect()
    }

    pub fn to_braid(&self) -> BraidWord {
        let powers: Vec<(usize, i64)> = self
            .words
            .iter()
            .flat_map(|w| w.exponents.iter().enumerate().map(move |(l, &n)| (w.start + l, n as i64)))
            .collect();
        BraidWord::from_powers(self.strands, &powers).expect("indices validated")
    }
}

/// Reads a positive braid as a product of staircase words.
pub fn staircase_parse(w: &BraidWord) -> Result<StaircaseForm> {
    if w.letters().iter().any(|&(_, s)| s < 0) {
        return Err(Error::NotStaircase("braid is not positive".into()));
    }
    let runs = w.powers();
    let mut seen = std::collections::BTreeSet::new();
    let mut words: Vec<StaircaseWord> = Vec::new();
    for &(i, n) in &runs {
        if !seen.insert(i) {
            return Err(Error::NotStaircase(format!("σ{i} occurs in two separate runs")));
        }
        match words.last_mut() {
            Some(last) if last.end() + 1 == i => last.exponents.push(n as u64),
            Some(last) if i < last.end() + 1 => {
                return Err(Error::NotStaircase(format!("σ{i} follows σ{}", last.end())));
            }
            _ => words.push(StaircaseWord { start: i, exponents: vec![n as u64] }),
        }
    }
    StaircaseForm::new(w.strands(), words)
}

/// A free abelian group of rank `rank` in relative grading `grading`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRank {
    pub grading: i64,
    pub rank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseHfk {
    pub genus: u64,
    pub m: u64,
    pub s: u64,
    pub squares: Vec<u64>,
    pub top: Vec<GradedRank>,
    pub next_to_top: Vec<GradedRank>,
    pub hf_plus: Vec<GradedRank>,
}

fn graded(v: &[(i64, u64)]) -> Vec<GradedRank> {
    let mut out: BTreeMap<i64, u64> = BTreeMap::new();
    for &(grading, rank) in v {
        if rank > 0 {
            *out.entry(grading).or_default() += rank;
        }
    }
    out.into_iter().map(|(grading, rank)| GradedRank { grading, rank }).collect()
}

pub fn total(v: &[GradedRank]) -> u64 {
    v.iter().map(|g| g.rank).sum()
}

/// Knot Floer groups at `j = g, g - 1` and the `HF^+` group at `s_{g-2}`.
pub fn staircase_hfk(f: &StaircaseForm) -> StaircaseHfk {
    let (m, s, t) = (f.m(), f.s(), f.total_squares());
    let mi = m as i64;
    StaircaseHfk {
        genus: f.genus(),
        m,
        s,
        squares: f.squares(),
        top: graded(&[(mi, 1)]),
        next_to_top: graded(&[(mi - 1, 2 * m + s), (mi, t)]),
        hf_plus: graded(&[(mi, t + 1), (mi - 1, 2 * m + s - 1)]),
    }
}

/// Ranks of `H^0` and `H^1` of the closed fibre minus the curve system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cohomology {
    pub h0: u64,
    pub h1: u64,
}

impl Cohomology {
    pub fn total(&self) -> u64 {
        self.h0 + self.h1
    }
}

/// Intersection points of the curve system.
fn vertex_count(mult: &BTreeMap<usize, u64>) -> u64 {
    mult.iter().map(|(&i, &n)| n * mult.get(&(i + 1)).copied().unwrap_or(0)).sum()
}

/// Staircase count `H^0 = 1 + Σ T_j`, `H^1 = 2m + s - 1`, cross-checked
/// against `χ = 2 - 2g + V`.
pub fn complement_cohomology(f: &StaircaseForm) -> Result<Cohomology> {
    let h0 = 1 + f.total_squares();
    let h1 = 2 * f.m() + f.s() - 1;
    let lhs = h0 as i64 - h1 as i64;
    let rhs = 2 - 2 * f.genus() as i64 + vertex_count(&f.multiplicities()) as i64;
    if lhs != rhs {
        return Err(Error::EulerCheck { lhs, rhs });
    }
    Ok(Cohomology { h0, h1 })
}

/// Cohomology of the closed fibre minus `n_i` parallel copies of each
/// chain curve `γ_i`, for an arbitrary multiset.
///
/// Components are the main region plus the thin regions between parallel
/// copies; `H^1` follows from the Euler characteristic.
pub fn loop_cohomology(genus: u64, mult: &BTreeMap<usize, u64>) -> Cohomology {
    let mult: BTreeMap<usize, u64> = mult.iter().filter(|(_, &n)| n > 0).map(|(&i, &n)| (i, n)).collect();
    if mult.is_empty() {
        return Cohomology { h0: 1, h1: 2 * genus };
    }
    let n = |i: usize| mult.get(&i).copied().unwrap_or(0);
    let mut h0 = 1u64;
    for (&i, &ni) in &mult {
        let sides = u64::from(i > 1 && n(i - 1) > 0) + u64::from(n(i + 1) > 0);
        h0 += if sides == 0 { ni - 1 } else { (ni - 1) * sides };
        if n(i + 1) > 0 {
            h0 += (ni - 1) * (n(i + 1) - 1);
        }
    }
    let chi = 2 - 2 * genus as i64 + vertex_count(&mult) as i64;
    Cohomology { h0, h1: (h0 as i64 - chi) as u64 }
}

/// Letter counts of a positive braid, one curve per letter.
pub fn loop_multiset(w: &BraidWord) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for &(i, _) in w.letters() {
        *out.entry(i).or_default() += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiddiag::parse_braid;

    fn form(s: &str) -> Result<StaircaseForm> {
        staircase_parse(&parse_braid(s).unwrap())
    }

    #[test]
    fn squares_example() {
        let f = form("b=5: s1^2 s2^2 s3^2 s4^2").unwrap();
        assert_eq!((f.genus(), f.m(), f.s(), f.total_squares()), (2, 0, 1, 9));
        let h = staircase_hfk(&f);
        assert_eq!(h.next_to_top, vec![GradedRank { grading: -1, rank: 1 }, GradedRank { grading: 0, rank: 9 }]);
        assert_eq!(total(&h.hf_plus), 10);
        assert_eq!(complement_cohomology(&f).unwrap(), Cohomology { h0: 10, h1: 0 });
        assert_eq!(loop_cohomology(2, &f.multiplicities()), Cohomology { h0: 10, h1: 0 });
    }

    #[test]
    fn merged_letters_and_round_trip() {
        let f = form("b=5: s1 s1 s2^3").unwrap();
        assert_eq!(f.words, vec![StaircaseWord { start: 1, exponents: vec![2, 3] }]);
        assert_eq!(f.to_braid().to_string(), "b=5: s1^2 s2^3");
    }

    #[test]
    fn rejections() {
        assert!(matches!(form("b=7: s1 s2 s3 s4 s5 s4 s6"), Err(Error::NotStaircase(_))));
        assert_eq!(form("b=5: s1 s2 s3"), Err(Error::OddRun(3)));
        assert!(matches!(form("b=5: s1 s2^-1"), Err(Error::NotStaircase(_))));
        assert!(matches!(form("b=5: s2 s1"), Err(Error::NotStaircase(_))));
        assert_eq!(form("b=4: s1 s2"), Err(Error::EvenStrandCount(4)));
        assert!(matches!(form("b=5:"), Err(Error::NotStaircase(_))));
    }

    #[test]
    fn torus_knot_case() {
        let f = form("b=5: s1 s2 s3 s4").unwrap();
        let h = staircase_hfk(&f);
        assert_eq!(total(&h.hf_plus), 1);
        assert_eq!(complement_cohomology(&f).unwrap(), Cohomology { h0: 1, h1: 0 });
    }

    #[test]
    fn two_words() {
        let f = form("b=7: s1 s2 s4 s5").unwrap();
        assert_eq!((f.m(), f.s()), (1, 2));
        assert_eq!(total(&staircase_hfk(&f).hf_plus), 4);
        assert_eq!(complement_cohomology(&f).unwrap(), Cohomology { h0: 1, h1: 3 });
    }

    #[test]
    fn single_pair_on_torus() {
        let f = form("b=3: s1 s2").unwrap();
        assert_eq!(complement_cohomology(&f).unwrap(), Cohomology { h0: 1, h1: 0 });
    }

    #[test]
    fn counterexample_loops() {
        let w = parse_braid("b=7: s1 s2 s3 s4 s5 s4 s6").unwrap();
        assert_eq!(loop_cohomology(3, &loop_multiset(&w)), Cohomology { h0: 3, h1: 0 });
    }

    #[test]
    fn isolated_parallel_copies() {
        let mut mult = BTreeMap::new();
        mult.insert(1, 3);
        assert_eq!(loop_cohomology(1, &mult), Cohomology { h0: 3, h1: 3 });
        assert_eq!(loop_cohomology(2, &BTreeMap::new()), Cohomology { h0: 1, h1: 4 });
    }
}
