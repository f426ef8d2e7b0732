use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use crate::braiddiag::{LinkDiagram, PlanarMap};
use crate::error::{Error, Result};
use crate::foxcalc::{fox_derivative, push_forward, FiniteAbelian, GeneratorImages};
use crate::freegroup::FreeWord;
use crate::intlinalg::{LaurentPoly, Matrix};
use crate::scalar::Scalar;

/// Alexander polynomial of a knot diagram from its Wirtinger presentation,
/// normalized so that `Δ(1) = 1` and `Δ(T^-1) = Δ(T)`.
pub fn wirtinger_alexander<T: Scalar>(d: &LinkDiagram) -> Result<LaurentPoly<T>> {
    alexander_of_map(&d.planar_map())
}

pub fn alexander_of_map<T: Scalar>(m: &PlanarMap) -> Result<LaurentPoly<T>> {
    if m.link_components != 1 {
        return Err(Error::NotAKnot(m.link_components));
    }
    let n = m.crossing_count();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut over = UnionFind::<usize>::new(m.edge_count());
    for c in &m.crossings {
        over.union(c.edges[1], c.edges[3]);
    }
    let labels = over.into_labeling();
    let mut arc_of_root: Vec<usize> = labels.clone();
    arc_of_root.sort_unstable();
    arc_of_root.dedup();
    let arc = |e: usize| arc_of_root.binary_search(&labels[e]).expect("edge has an arc") + 1;
    let narcs = arc_of_root.len();

    let relations: Vec<FreeWord> = m
        .crossings
        .iter()
        .map(|c| {
            let (a_in, a_out) = if c.incoming[0] { (c.edges[0], c.edges[2]) } else { (c.edges[2], c.edges[0]) };
            let o = FreeWord::from_letters(&[(arc(c.edges[1]), c.sign)]);
            o.mul(&FreeWord::generator(arc(a_in))).mul(&o.inverse()).mul(&FreeWord::generator(arc(a_out)).inverse())
        })
        .collect();

    let group = Arc::new(FiniteAbelian::trivial());
    let images = GeneratorImages { group, images: vec![(0, 1); narcs] };
    let mut rows = Vec::with_capacity(relations.len());
    for r in &relations {
        let mut row = Vec::with_capacity(narcs);
        for x in 1..=narcs {
            row.push(push_forward(&fox_derivative::<T>(r, x, narcs)?, &images).coefficient(0));
        }
        rows.push(row);
    }
    let fox = Matrix::from_rows(rows);
    let det = fox.minor(0, 0).det();
    det.symmetrize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiddiag::parse_braid;

    fn alex(s: &str) -> LaurentPoly<i64> {
        wirtinger_alexander(&LinkDiagram::closure(&parse_braid(s).unwrap())).unwrap()
    }

    #[test]
    fn small_knots() {
        assert_eq!(alex("b=1:"), LaurentPoly::one());
        assert_eq!(alex("b=2: s1"), LaurentPoly::one());
        assert_eq!(alex("b=2: s1^3"), LaurentPoly::from_coeffs(-1, &[1, -1, 1]));
        assert_eq!(alex("b=2: s1^-3"), LaurentPoly::from_coeffs(-1, &[1, -1, 1]));
        assert_eq!(alex("b=3: s1 s2^-1 s1 s2^-1"), LaurentPoly::from_coeffs(-1, &[-1, 3, -1]));
        assert_eq!(alex("b=2: s1^5"), LaurentPoly::from_coeffs(-2, &[1, -1, 1, -1, 1]));
    }

    #[test]
    fn six_one() {
        // 6_1 as a 4-braid closure
        assert_eq!(alex("b=4: s1^2 s2 s1^-1 s3^-1 s2 s3^-1"), LaurentPoly::from_coeffs(-1, &[-2, 5, -2]));
    }

    #[test]
    fn links_are_rejected() {
        let d = LinkDiagram::closure(&parse_braid("b=2: s1^2").unwrap());
        assert_eq!(wirtinger_alexander::<i64>(&d), Err(Error::NotAKnot(2)));
    }
}
