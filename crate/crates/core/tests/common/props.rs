use braidfloer::braiddiag::{determinant, tait_graph, BraidWord, LinkDiagram};
use braidfloer::floer::{
    complement_cohomology, eftekhary_check, hfk_from_torsion, loop_cohomology, loop_multiset, staircase_parse,
};
use braidfloer::foxcalc::{fox_derivative, refined_torsion, FreeGroupRing, RefinedTorsion};
use braidfloer::freegroup::{abelianize, monodromy_of_braid, FreeWord};
use braidfloer::intlinalg::{alexander_from_monodromy, cokernel, has_alternating_signs, smith_normal_form, Matrix};
use braidfloer::restree::{leaf_census, wehrli_tree};
use braidfloer::{BigInt, Error, IntMatrix, Poly};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::{determinantal_factors, multiset};

type Check = Result<(), TestCaseError>;

/// `Σ_i ∂w/∂x_i (x_i - 1) = w - 1`.
pub fn fox_fundamental(w: &FreeWord, rank: usize) -> Check {
    let one = FreeGroupRing::<BigInt>::word(FreeWord::identity());
    let mut lhs = FreeGroupRing::zero();
    for i in 1..=rank {
        let d = fox_derivative::<BigInt>(w, i, rank).unwrap();
        lhs = lhs.add(&d.mul(&FreeGroupRing::word(FreeWord::generator(i)).sub(&one)));
    }
    prop_assert_eq!(lhs, FreeGroupRing::word(w.clone()).sub(&one));
    Ok(())
}

pub fn snf_matches_oracle(m: &IntMatrix) -> Check {
    let s = smith_normal_form(m);
    prop_assert_eq!(s.u.mul(m).mul(&s.v), s.d.clone());
    prop_assert!(s.d.is_diagonal());
    prop_assert!(s.u.det().abs() == BigInt::from(1));
    prop_assert!(s.v.det().abs() == BigInt::from(1));
    prop_assert_eq!(s.diagonal(), determinantal_factors(m));
    Ok(())
}

fn alexander(w: &BraidWord) -> Result<(IntMatrix, Poly), Error> {
    let a: IntMatrix = abelianize(&monodromy_of_braid(w));
    let d = alexander_from_monodromy(&a)?;
    Ok((a, d))
}

pub fn alexander_symmetric_with_order(w: &BraidWord) -> Check {
    let (a, d) = alexander(w).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(d.is_symmetric());
    let h = cokernel(&Matrix::identity(a.nrows()).sub(&a));
    prop_assert_eq!(Some(d.evaluate_at_one()), h.order());
    Ok(())
}

fn torsion(w: &BraidWord) -> Result<RefinedTorsion<BigInt>, TestCaseError> {
    refined_torsion(w).map_err(|e| TestCaseError::fail(format!("{w}: {e}")))
}

pub fn specialization_is_alexander(w: &BraidWord) -> Check {
    let t = torsion(w)?;
    prop_assert_eq!(t.torsion.specialize(), t.alexander.clone());
    let (_, d) = alexander(w).unwrap();
    prop_assert_eq!(t.alexander, d);
    Ok(())
}

pub fn sign_pattern(w: &BraidWord) -> Check {
    let t = torsion(w)?;
    for (h, p) in t.per_structure() {
        prop_assert!(has_alternating_signs(&p), "{:?}: {}", h, p);
        for (j, c) in p.terms() {
            prop_assert!(c.is_zero() || (c.is_positive() == (j % 2 == 0)), "{:?}: {}", h, p);
        }
    }
    let table = hfk_from_torsion(&t.torsion, w.genus() as i64).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(table.euler_characteristic::<BigInt>(), t.alexander);
    Ok(())
}

pub fn leaf_count_is_determinant(w: &BraidWord) -> Check {
    let d = LinkDiagram::closure(w);
    let det: BigInt = determinant(&d).unwrap();
    let tree = wehrli_tree::<BigInt>(&d, 12).unwrap();
    prop_assert_eq!(BigInt::from(tree.leaf_count()), det.abs());
    Ok(())
}

pub fn determinant_counts_spanning_trees(w: &BraidWord) -> Check {
    let d = LinkDiagram::closure(w);
    let det: BigInt = determinant(&d).unwrap();
    let trees: BigInt = tait_graph(&d.planar_map()).spanning_trees();
    prop_assert_eq!(det.abs(), trees);
    Ok(())
}

pub fn leaf_covers_have_zero_signature(w: &BraidWord) -> Check {
    let mut tree = wehrli_tree::<BigInt>(&LinkDiagram::closure(w), 12).unwrap();
    tree.compute_leaf_invariants().unwrap();
    for leaf in leaf_census(&tree).unwrap() {
        prop_assert_eq!(leaf.signature, 0);
        prop_assert!(leaf.alexander.is_symmetric());
    }
    Ok(())
}

pub fn staircase_euler(w: &BraidWord) -> Check {
    let f = staircase_parse(w).map_err(|e| TestCaseError::fail(format!("{w}: {e}")))?;
    let c = complement_cohomology(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(c, loop_cohomology(f.genus(), &loop_multiset(w)));
    Ok(())
}

pub fn staircase_totals(w: &BraidWord) -> Check {
    let f = staircase_parse(w).map_err(|e| TestCaseError::fail(format!("{w}: {e}")))?;
    let r = eftekhary_check(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(r.hf_plus_total, r.cohomology_total);
    prop_assert!(r.equal && r.aligned);
    Ok(())
}

/// Multiset of `p_s`, which is unchanged by relabelling `H`.
pub fn torsion_multiset(w: &BraidWord) -> Result<Option<Vec<(Poly, usize)>>, TestCaseError> {
    match refined_torsion::<BigInt>(w) {
        Ok(t) => {
            let polys: Vec<Poly> = t.per_structure().into_iter().map(|(_, p)| p).collect();
            Ok(Some(multiset(&polys).into_iter().collect()))
        }
        Err(Error::NotRationalHomologySphere | Error::ZeroDeterminant) => Ok(None),
        Err(e) => Err(TestCaseError::fail(format!("{w}: {e}"))),
    }
}

/// Cyclic rotation and a braid relation give conjugate monodromies.
pub fn torsion_invariant_under_moves(w: &BraidWord, rotate: usize, i: usize, at: usize) -> Check {
    let Some(base) = torsion_multiset(w)? else { return Ok(()) };
    let ls = w.letters();
    let k = rotate % ls.len().max(1);
    let rotated: Vec<_> = ls[k..].iter().chain(&ls[..k]).copied().collect();
    let r = BraidWord::new(w.strands(), rotated).unwrap();
    prop_assert_eq!(torsion_multiset(&r)?, Some(base));

    let at = at % (ls.len() + 1);
    let splice = |mid: &[(usize, i8)]| {
        let letters = ls[..at].iter().chain(mid).chain(&ls[at..]).copied().collect();
        BraidWord::new(w.strands(), letters).unwrap()
    };
    let x = splice(&[(i, 1), (i + 1, 1), (i, 1)]);
    let y = splice(&[(i + 1, 1), (i, 1), (i + 1, 1)]);
    prop_assert_eq!(torsion_multiset(&x)?, torsion_multiset(&y)?);
    Ok(())
}
