use serde::{Deserialize, Serialize};

use super::diagram::{Crossing, LinkDiagram, PlanarMap};
use crate::error::{Error, Result};
use crate::intlinalg::Matrix;
use crate::scalar::Scalar;

/// Checkerboard graph on the black faces; one edge per crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaitGraph {
    pub vertices: usize,
    /// `(u, v, sign)`, with sign `+1` when the black corners are A-corners.
    pub edges: Vec<(usize, usize, i8)>,
    /// The outer face is white in this colouring.
    pub outer_white: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct DiagramInvariants<T: Scalar> {
    #[serde(with = "crate::json::scalar")]
    pub determinant: T,
    /// Present for knots only.
    pub signature: Option<i64>,
    pub black_regions: usize,
    pub positive_crossings: usize,
}

/// `+1` when the white corners of `c` are A-corners.
fn eta(m: &PlanarMap, c: &Crossing) -> i64 {
    if m.face_color[c.corners[1]] {
        -1
    } else {
        1
    }
}

fn white_corners(m: &PlanarMap, c: &Crossing) -> (usize, usize) {
    if m.face_color[c.corners[1]] {
        (c.corners[0], c.corners[2])
    } else {
        (c.corners[1], c.corners[3])
    }
}

fn black_corner(m: &PlanarMap, c: &Crossing) -> usize {
    if m.face_color[c.corners[1]] {
        1
    } else {
        0
    }
}

/// Goeritz matrix on the white faces, numbered in face order; the black
/// faces span the surface.
pub fn goeritz_matrix<T: Scalar>(m: &PlanarMap) -> (Matrix<T>, Vec<usize>) {
    let white: Vec<usize> = (0..m.faces).filter(|&f| !m.face_color[f]).collect();
    let mut index = vec![usize::MAX; m.faces];
    for (k, &f) in white.iter().enumerate() {
        index[f] = k;
    }
    let n = white.len();
    let mut g = vec![vec![0i64; n]; n];
    for c in &m.crossings {
        let (a, b) = white_corners(m, c);
        if a == b {
            continue;
        }
        let (i, j) = (index[a], index[b]);
        let e = eta(m, c);
        g[i][j] += e;
        g[j][i] += e;
        g[i][i] -= e;
        g[j][j] -= e;
    }
    (Matrix::from_fn(n, n, |i, j| T::from_i64_exact(g[i][j])), white)
}

fn reduced_goeritz<T: Scalar>(m: &PlanarMap) -> Matrix<T> {
    let (g, white) = goeritz_matrix::<T>(m);
    let drop = white.iter().position(|&f| f == m.outer_face).unwrap_or(0);
    if g.nrows() == 0 {
        return g;
    }
    g.minor(drop, drop)
}

fn require_connected(m: &PlanarMap) -> Result<()> {
    if m.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn determinant<T: Scalar>(d: &LinkDiagram) -> Result<T> {
    determinant_of_map(&d.planar_map())
}

pub fn determinant_of_map<T: Scalar>(m: &PlanarMap) -> Result<T> {
    require_connected(m)?;
    Ok(reduced_goeritz::<T>(m).det().abs())
}

/// Knot signature from the Goeritz form with the Gordon–Litherland
/// correction; positive knots have negative signature.
pub fn signature(d: &LinkDiagram) -> Result<i64> {
    signature_of_map(&d.planar_map())
}

pub fn signature_of_map(m: &PlanarMap) -> Result<i64> {
    require_connected(m)?;
    if m.link_components != 1 {
        return Err(Error::NotAKnot(m.link_components));
    }
    let g = reduced_goeritz::<i64>(m);
    let correction: i64 =
        m.crossings.iter().filter(|c| !c.is_mixed_corner(black_corner(m, c))).map(|c| eta(m, c)).sum();
    Ok(g.signature() + correction)
}

/// `O(D) - 1 - n₊` for an alternating diagram whose black corners are
/// B-corners; otherwise the same count on the mirror, negated.
pub fn alternating_signature(m: &PlanarMap) -> Option<i64> {
    if !m.is_alternating() {
        return None;
    }
    let o = m.black_faces() as i64;
    let black_is_a = m.crossings.first().is_some_and(|c| m.face_color[c.corners[1]]);
    Some(if black_is_a { -(o - 1 - m.negative_crossings() as i64) } else { o - 1 - m.positive_crossings() as i64 })
}

pub fn tait_graph(m: &PlanarMap) -> TaitGraph {
    let black: Vec<usize> = (0..m.faces).filter(|&f| m.face_color[f]).collect();
    let mut index = vec![usize::MAX; m.faces];
    for (k, &f) in black.iter().enumerate() {
        index[f] = k;
    }
    let edges = m
        .crossings
        .iter()
        .map(|c| {
            let q = black_corner(m, c);
            let s = if Crossing::is_a_corner(q) { 1 } else { -1 };
            (index[c.corners[q]], index[c.corners[q + 2]], s)
        })
        .collect();
    TaitGraph { vertices: black.len(), edges, outer_white: true }
}

impl TaitGraph {
    /// Spanning-tree count by the matrix-tree theorem.
    pub fn spanning_trees<T: Scalar>(&self) -> T {
        let n = self.vertices;
        if n <= 1 {
            return T::one();
        }
        let mut l = vec![vec![0i64; n]; n];
        for &(u, v, _) in &self.edges {
            if u != v {
                l[u][v] -= 1;
                l[v][u] -= 1;
                l[u][u] += 1;
                l[v][v] += 1;
            }
        }
        Matrix::from_fn(n - 1, n - 1, |i, j| T::from_i64_exact(l[i + 1][j + 1])).det()
    }
}

pub fn diagram_invariants<T: Scalar>(d: &LinkDiagram) -> Result<DiagramInvariants<T>> {
    let m = d.planar_map();
    Ok(DiagramInvariants {
        determinant: determinant_of_map(&m)?,
        signature: if m.link_components == 1 { Some(signature_of_map(&m)?) } else { None },
        black_regions: m.black_faces(),
        positive_crossings: m.positive_crossings(),
    })
}

/// Diagram of the lift of the axis to the branched double cover of an
/// unknotted leaf, drawn as two stacked copies of the annular tangle.
pub fn doubled_cover_diagram(leaf: &LinkDiagram) -> Result<LinkDiagram> {
    let m = leaf.planar_map();
    if !m.is_connected() {
        return Err(Error::NotTwistedUnknot("diagram is disconnected".into()));
    }
    if m.link_components != 1 {
        return Err(Error::NotTwistedUnknot(format!("{} components", m.link_components)));
    }
    if m.crossings.iter().any(|c| !c.is_nugatory()) {
        return Err(Error::NotTwistedUnknot("a crossing is not nugatory".into()));
    }
    if m.winding % 2 == 0 {
        return Err(Error::NotTwistedUnknot(format!("even winding number {}", m.winding)));
    }
    Ok(leaf.doubled())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiddiag::parse_braid;

    fn diag(s: &str) -> LinkDiagram {
        LinkDiagram::closure(&parse_braid(s).unwrap())
    }

    #[test]
    fn trefoils() {
        let d = diag("b=2: s1^3");
        assert_eq!(determinant::<i64>(&d).unwrap(), 3);
        assert_eq!(signature(&d).unwrap(), -2);
        assert_eq!(signature(&d.mirror()).unwrap(), 2);
        assert_eq!(alternating_signature(&d.planar_map()), Some(-2));
    }

    #[test]
    fn figure_eight() {
        let d = diag("b=3: s1 s2^-1 s1 s2^-1");
        assert_eq!(determinant::<i64>(&d).unwrap(), 5);
        assert_eq!(signature(&d).unwrap(), 0);
        let m = d.planar_map();
        assert_eq!(tait_graph(&m).spanning_trees::<i64>(), 5);
    }

    #[test]
    fn unknot_and_split_link() {
        let d = diag("b=1:");
        assert_eq!(determinant::<i64>(&d).unwrap(), 1);
        assert_eq!(signature(&d).unwrap(), 0);
        assert_eq!(determinant::<i64>(&diag("b=2:")), Err(Error::Disconnected));
    }

    #[test]
    fn torus_knot_signatures() {
        assert_eq!(signature(&diag("b=2: s1^5")).unwrap(), -4);
        assert_eq!(signature(&diag("b=3: s1 s2 s1 s2 s1 s2 s1 s2")).unwrap(), -6);
        assert_eq!(signature(&diag("b=3: s1 s2 s1 s2 s1 s2 s1 s2 s1 s2")).unwrap(), -8);
        assert_eq!(determinant::<i64>(&diag("b=3: s1 s2 s1 s2 s1 s2 s1 s2")).unwrap(), 3);
        assert_eq!(determinant::<i64>(&diag("b=3: s1 s2 s1 s2 s1 s2 s1 s2 s1 s2")).unwrap(), 1);
    }

    #[test]
    fn pseudo_anosov_and_two_bridge_determinants() {
        assert_eq!(determinant::<i64>(&diag("b=5: s1^-2 s3^-1 s2^2 s4 s3^-1")).unwrap(), 8);
        for n in 1..4i64 {
            for m in -3..0i64 {
                let w = crate::braiddiag::BraidWord::from_powers(3, &[(1, n), (2, m)]).unwrap();
                let d = LinkDiagram::closure(&w);
                assert_eq!(determinant::<i64>(&d).unwrap(), (n * m).abs());
            }
        }
    }

    #[test]
    fn leaf_cover_of_single_twist() {
        let leaf = diag("b=1:");
        assert_eq!(doubled_cover_diagram(&leaf).unwrap().crossing_count(), 0);

        let cover = doubled_cover_diagram(&diag("b=3: s1 s2^-1")).unwrap();
        assert_eq!(cover, diag("b=3: s1 s2^-1 s1 s2^-1"));
        assert_eq!(determinant::<i64>(&cover).unwrap(), 5);
        assert_eq!(signature(&cover).unwrap(), 0);

        assert!(doubled_cover_diagram(&diag("b=2: s1")).is_err());
        assert!(doubled_cover_diagram(&diag("b=3: s1 s2^-1 s1 s2^-1")).is_err());
        assert!(doubled_cover_diagram(&diag("b=3: s1^2")).is_err());
    }
}
