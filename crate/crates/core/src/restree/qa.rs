use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::braiddiag::{determinant_of_map, LinkDiagram};
use crate::scalar::Scalar;

/// Proof that a diagram lies in the annular quasi-alternating class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub enum Certificate<T: Scalar> {
    /// An alternating twisted unknot meeting the axis disc oddly.
    Leaf,
    Branch {
        crossing: usize,
        #[serde(with = "crate::json::scalar")]
        determinant: T,
        zero: Box<Certificate<T>>,
        one: Box<Certificate<T>>,
    },
}

impl<T: Scalar> Certificate<T> {
    pub fn leaf_count(&self) -> usize {
        match self {
            Certificate::Leaf => 1,
            Certificate::Branch { zero, one, .. } => zero.leaf_count() + one.leaf_count(),
        }
    }
}

/// Searches every crossing at every node; memoized on the diagram state.
pub fn is_quasi_alternating_annular<T: Scalar>(d: &LinkDiagram) -> (bool, Option<Certificate<T>>) {
    let mut memo = HashMap::new();
    let cert = search(d, &mut memo);
    (cert.is_some(), cert)
}

fn is_base_case(d: &LinkDiagram) -> bool {
    let m = d.planar_map();
    m.is_connected()
        && m.link_components == 1
        && m.winding % 2 != 0
        && m.is_alternating()
        && m.crossings.iter().all(|c| c.is_nugatory())
}

fn search<T: Scalar>(
    d: &LinkDiagram,
    memo: &mut HashMap<LinkDiagram, Option<Certificate<T>>>,
) -> Option<Certificate<T>> {
    if let Some(hit) = memo.get(d) {
        return hit.clone();
    }
    let out = search_uncached(d, memo);
    memo.insert(d.clone(), out.clone());
    out
}

fn search_uncached<T: Scalar>(
    d: &LinkDiagram,
    memo: &mut HashMap<LinkDiagram, Option<Certificate<T>>>,
) -> Option<Certificate<T>> {
    let m = d.planar_map();
    if !m.is_connected() || m.winding % 2 == 0 {
        return None;
    }
    if is_base_case(d) {
        return Some(Certificate::Leaf);
    }
    let det: T = determinant_of_map(&m).ok()?;
    if !det.is_positive() {
        return None;
    }
    for c in d.unresolved() {
        let (d0, d1) = (d.resolve(c, 0).ok()?, d.resolve(c, 1).ok()?);
        let (m0, m1) = (d0.planar_map(), d1.planar_map());
        if !m0.is_connected() || !m1.is_connected() {
            continue;
        }
        let (Ok(e0), Ok(e1)) = (determinant_of_map::<T>(&m0), determinant_of_map::<T>(&m1)) else {
            continue;
        };
        if !e0.is_positive() || !e1.is_positive() || e0.clone() + e1.clone() != det {
            continue;
        }
        let Some(zero) = search(&d0, memo) else { continue };
        let Some(one) = search(&d1, memo) else { continue };
        return Some(Certificate::Branch { crossing: c, determinant: det, zero: Box::new(zero), one: Box::new(one) });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiddiag::parse_braid;

    fn diag(s: &str) -> LinkDiagram {
        LinkDiagram::closure(&parse_braid(s).unwrap())
    }

    #[test]
    fn alternating_closure_is_certified() {
        let (ok, cert) = is_quasi_alternating_annular::<i64>(&diag("b=3: s1 s2^-1 s1 s2^-1"));
        assert!(ok);
        assert_eq!(cert.unwrap().leaf_count(), 5);
    }

    #[test]
    fn twisted_unknot_is_a_leaf() {
        let (ok, cert) = is_quasi_alternating_annular::<i64>(&diag("b=3: s1 s2^-1"));
        assert!(ok);
        assert_eq!(cert, Some(Certificate::Leaf));
    }

    #[test]
    fn split_diagram_fails() {
        assert_eq!(is_quasi_alternating_annular::<i64>(&diag("b=3: s1^2")), (false, None));
    }
}
