use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::staircase::{
    complement_cohomology, loop_cohomology, loop_multiset, staircase_hfk, staircase_parse, total, Cohomology,
    GradedRank, StaircaseForm,
};
use crate::braiddiag::BraidWord;
use crate::error::{Error, Result};

/// `HF^+` at `s_{g-2}` next to `H^*` of the fibre minus the curves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EftekharyReport {
    pub braid: String,
    pub hf_plus: Vec<GradedRank>,
    pub cohomology: Cohomology,
    pub hf_plus_total: u64,
    pub cohomology_total: u64,
    pub equal: bool,
    /// `H^0` matches the grading-`m` part and `H^1` the grading-`(m - 1)` part.
    pub aligned: bool,
}

pub fn eftekhary_check(f: &StaircaseForm) -> Result<EftekharyReport> {
    let hfk = staircase_hfk(f);
    let coh = complement_cohomology(f)?;
    let m = hfk.m as i64;
    let at = |g: i64| hfk.hf_plus.iter().find(|x| x.grading == g).map_or(0, |x| x.rank);
    let hf_plus_total = total(&hfk.hf_plus);
    Ok(EftekharyReport {
        braid: f.to_braid().to_string(),
        hf_plus_total,
        cohomology_total: coh.total(),
        equal: hf_plus_total == coh.total(),
        aligned: at(m) == coh.h0 && at(m - 1) == coh.h1,
        hf_plus: hfk.hf_plus,
        cohomology: coh,
    })
}

/// A positive braid that is not a staircase, compared with a staircase
/// reached by braid relations and conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchReport {
    pub braid: String,
    pub loop_cohomology: Cohomology,
    pub equivalent_staircase: String,
    pub staircase_report: EftekharyReport,
    pub equal: bool,
}

/// Either the direct comparison or, for a non-staircase positive braid,
/// the comparison through an equivalent staircase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Comparison {
    Staircase(EftekharyReport),
    Mismatch(MismatchReport),
}

pub const DEFAULT_SEARCH_LIMIT: usize = 200_000;

pub fn compare_braid(w: &BraidWord, search_limit: usize) -> Result<Comparison> {
    match staircase_parse(w) {
        Ok(f) => Ok(Comparison::Staircase(eftekhary_check(&f)?)),
        Err(Error::NotStaircase(why)) if w.letters().iter().all(|&(_, s)| s > 0) => {
            let Some((eq, f)) = find_equivalent_staircase(w, search_limit) else {
                return Err(Error::NotStaircase(format!("{why}; no equivalent staircase within {search_limit} words")));
            };
            let staircase_report = eftekhary_check(&f)?;
            let genus = (w.strands() as u64 - 1) / 2;
            let coh = loop_cohomology(genus, &loop_multiset(w));
            Ok(Comparison::Mismatch(MismatchReport {
                braid: w.to_string(),
                equal: coh.total() == staircase_report.hf_plus_total,
                loop_cohomology: coh,
                equivalent_staircase: eq.to_string(),
                staircase_report,
            }))
        }
        Err(e) => Err(e),
    }
}

/// Breadth-first search over positive words related by braid relations,
/// far commutations and cyclic rotation.
pub fn find_equivalent_staircase(w: &BraidWord, limit: usize) -> Option<(BraidWord, StaircaseForm)> {
    let b = w.strands();
    let start: Vec<usize> = w.letters().iter().map(|&(i, _)| i).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(word) = queue.pop_front() {
        let braid = BraidWord::new(b, word.iter().map(|&i| (i, 1)).collect()).expect("indices stay in range");
        if let Ok(f) = staircase_parse(&braid) {
            return Some((f.to_braid(), f));
        }
        for next in neighbours(&word) {
            if seen.len() >= limit {
                return None;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    None
}

fn neighbours(w: &[usize]) -> Vec<Vec<usize>> {
    let n = w.len();
    let mut out = Vec::new();
    if n > 1 {
        let mut r = w[1..].to_vec();
        r.push(w[0]);
        out.push(r);
    }
    for k in 0..n.saturating_sub(1) {
        if w[k].abs_diff(w[k + 1]) > 1 {
            let mut v = w.to_vec();
            v.swap(k, k + 1);
            out.push(v);
        }
    }
    for k in 0..n.saturating_sub(2) {
        let (x, y, z) = (w[k], w[k + 1], w[k + 2]);
        if x == z && x.abs_diff(y) == 1 {
            let mut v = w.to_vec();
            v[k..k + 3].copy_from_slice(&[y, x, y]);
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiddiag::parse_braid;

    #[test]
    fn staircase_report_agrees() {
        let f = staircase_parse(&parse_braid("b=5: s1^2 s2^2 s3^2 s4^2").unwrap()).unwrap();
        let r = eftekhary_check(&f).unwrap();
        assert!(r.equal && r.aligned);
        assert_eq!(r.hf_plus_total, 10);
    }

    #[test]
    fn counterexample_mismatch() {
        let w = parse_braid("b=7: s1 s2 s3 s4 s5 s4 s6").unwrap();
        let Comparison::Mismatch(r) = compare_braid(&w, DEFAULT_SEARCH_LIMIT).unwrap() else {
            panic!("expected a mismatch report");
        };
        assert_eq!(r.loop_cohomology.total(), 3);
        assert_eq!(r.staircase_report.hf_plus_total, 2);
        assert!(!r.equal);
        assert!(staircase_parse(&parse_braid(&r.equivalent_staircase).unwrap()).is_ok());
    }

    #[test]
    fn moves() {
        let n = neighbours(&[1, 2, 1, 3]);
        assert!(n.contains(&vec![2, 1, 2, 3]));
        assert!(n.contains(&vec![2, 1, 3, 1]));
        assert!(n.contains(&vec![1, 2, 3, 1]));
        assert!(!n.contains(&vec![2, 1, 1, 3]));
    }
}
