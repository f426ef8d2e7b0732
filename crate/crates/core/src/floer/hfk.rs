use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foxcalc::GroupRingElem;
use crate::intlinalg::LaurentPoly;
use crate::scalar::Scalar;

/// Ranks of knot Floer homology of the lifted axis, per structure `s`
/// and Alexander grading `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfkTable {
    pub genus: i64,
    /// Labels in group order; `labels[s]` is the coordinate vector of `s`.
    pub labels: Vec<Vec<u64>>,
    /// `(s, j) -> rank`, zero ranks omitted.
    #[serde(with = "entries")]
    pub ranks: BTreeMap<(usize, i64), u64>,
    pub tau: Vec<i64>,
}

impl HfkTable {
    pub fn rank(&self, s: usize, j: i64) -> u64 {
        self.ranks.get(&(s, j)).copied().unwrap_or(0)
    }

    /// Maslov grading mod 2 of the group at Alexander grading `j`.
    pub fn grading(j: i64) -> u8 {
        j.rem_euclid(2) as u8
    }

    /// Ranks of structure `s` from `j = g` down to `j = -g`.
    pub fn column(&self, s: usize) -> Vec<u64> {
        (-self.genus..=self.genus).rev().map(|j| self.rank(s, j)).collect()
    }

    pub fn total_at(&self, j: i64) -> u64 {
        self.ranks.iter().filter(|((_, jj), _)| *jj == j).map(|(_, r)| r).sum()
    }

    pub fn total(&self) -> u64 {
        self.ranks.values().sum()
    }

    /// `Σ_s Σ_j (-1)^j rank T^j`.
    pub fn euler_characteristic<T: Scalar>(&self) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (&(_, j), &r) in &self.ranks {
            let r = T::from_u64(r).expect("rank fits the scalar type");
            out.add_term(j, if j.rem_euclid(2) == 0 { r } else { -r });
        }
        out
    }

    /// Structures whose column is nonzero away from `j = 0`.
    pub fn nontrivial_structures(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.ranks.keys().filter(|(_, j)| *j != 0).map(|(s, _)| *s).collect();
        out.dedup();
        out
    }
}

/// Reads the table off a normalized torsion; each coefficient of `T^j`
/// must have sign `(-1)^j` and satisfy `|j| <= g`.
pub fn hfk_from_torsion<T: Scalar>(tor: &GroupRingElem<T>, genus: i64) -> Result<HfkTable> {
    let group = tor.group();
    let mut ranks = BTreeMap::new();
    for (s, p) in tor.support() {
        for (j, c) in p.terms() {
            if j.abs() > genus {
                return Err(Error::BeyondGenus { j, genus });
            }
            let want_positive = j.rem_euclid(2) == 0;
            if c.is_positive() != want_positive {
                return Err(Error::SignPattern { spinc: group.label(s), j, coefficient: c.to_string() });
            }
            let r = c.abs().to_u64().expect("rank fits in u64");
            ranks.insert((s, j), r);
        }
    }
    let labels = (0..group.order()).map(|h| group.decode(h)).collect();
    Ok(HfkTable { genus, labels, ranks, tau: vec![0; group.order()] })
}

mod entries {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        s: usize,
        j: i64,
        rank: u64,
        grading: u8,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, i64), u64>, s: S) -> Result<S::Ok, S::Error> {
        m.iter()
            .map(|(&(sp, j), &rank)| Entry { s: sp, j, rank, grading: super::HfkTable::grading(j) })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, i64), u64>, D::Error> {
        Ok(Vec::<Entry>::deserialize(d)?.into_iter().map(|e| ((e.s, e.j), e.rank)).collect())
    }
}
