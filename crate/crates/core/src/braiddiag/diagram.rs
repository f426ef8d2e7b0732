use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use crate::error::{Error, Result};

/// Resolution state of one letter of an annular diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossingState {
    Unresolved,
    /// Vertical smoothing, the identity braid on the two strands.
    Zero,
    /// Horizontal smoothing, a cap below and a cup above.
    One,
}

/// A partially resolved annular braid closure.
///
/// Letter `k` sits at height `k` in the braid box, strands flow upward and
/// are closed around the axis, which lies to the right of strand `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkDiagram {
    strands: usize,
    letters: Vec<(usize, i8)>,
    states: Vec<CrossingState>,
}

/// Planar-map data of one unresolved crossing.
///
/// Slots run counterclockwise; odd slots carry the over strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub letter: usize,
    pub edges: [usize; 4],
    pub incoming: [bool; 4],
    /// Face at corner `q`, between slots `q` and `q + 1`.
    pub corners: [usize; 4],
    pub sign: i8,
    pub component_over: usize,
    pub component_under: usize,
}

impl Crossing {
    fn under_in(&self) -> usize {
        if self.incoming[0] {
            0
        } else {
            2
        }
    }

    /// Slots in PD order: under-incoming first, then counterclockwise.
    pub fn pd(&self) -> [usize; 4] {
        let s = self.under_in();
        [0, 1, 2, 3].map(|k| self.edges[(s + k) % 4])
    }

    pub fn is_mixed_corner(&self, q: usize) -> bool {
        self.incoming[q] != self.incoming[(q + 1) % 4]
    }

    /// A corner is an A-corner when the over strand sweeps it turning
    /// counterclockwise.
    pub fn is_a_corner(q: usize) -> bool {
        q % 2 == 1
    }

    pub fn is_nugatory(&self) -> bool {
        self.corners[0] == self.corners[2] || self.corners[1] == self.corners[3]
    }
}

/// Combinatorial planar map of a [`LinkDiagram`] on the sphere.
#[derive(Debug, Clone)]
pub struct PlanarMap {
    pub crossings: Vec<Crossing>,
    /// The two `(crossing, slot)` ends of every edge.
    pub edge_ends: Vec<[(usize, usize); 2]>,
    pub free_loops: usize,
    pub faces: usize,
    pub outer_face: usize,
    pub axis_face: usize,
    /// `true` for black; the outer face is white.
    pub face_color: Vec<bool>,
    pub link_components: usize,
    pub graph_components: usize,
    /// Algebraic intersection number of the link with a spanning disc of
    /// the axis.
    pub winding: i64,
}

const DOWN: usize = 0;
const UP: usize = 1;

impl LinkDiagram {
    pub fn closure(w: &BraidWord) -> Self {
        LinkDiagram {
            strands: w.strands(),
            letters: w.letters().to_vec(),
            states: vec![CrossingState::Unresolved; w.len()],
        }
    }

    pub fn from_parts(strands: usize, letters: Vec<(usize, i8)>, states: Vec<CrossingState>) -> Result<Self> {
        let w = BraidWord::new(strands, letters)?;
        if states.len() != w.len() {
            return Err(Error::RankMismatch(states.len(), w.len()));
        }
        Ok(LinkDiagram { strands, letters: w.letters().to_vec(), states })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn states(&self) -> &[CrossingState] {
        &self.states
    }

    /// Letters still carrying a crossing.
    pub fn unresolved(&self) -> Vec<usize> {
        (0..self.letters.len()).filter(|&k| self.states[k] == CrossingState::Unresolved).collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.states.iter().filter(|s| **s == CrossingState::Unresolved).count()
    }

    /// Replaces crossing `c` by its `r`-smoothing.
    pub fn resolve(&self, c: usize, r: u8) -> Result<Self> {
        let st = *self.states.get(c).ok_or(Error::NoSuchCrossing(c))?;
        if st != CrossingState::Unresolved {
            return Err(Error::AlreadyResolved(c));
        }
        let mut out = self.clone();
        out.states[c] = if r == 0 { CrossingState::Zero } else { CrossingState::One };
        Ok(out)
    }

    /// Mirror image: every crossing changes sign.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for l in &mut out.letters {
            l.1 = -l.1;
        }
        out
    }

    /// Two copies of the annular tangle stacked and closed up.
    pub fn doubled(&self) -> Self {
        let mut out = self.clone();
        out.letters.extend_from_slice(&self.letters);
        out.states.extend_from_slice(&self.states);
        out
    }

    pub fn planar_map(&self) -> PlanarMap {
        build_planar_map(self)
    }

    pub fn is_connected(&self) -> bool {
        self.planar_map().graph_components == 1
    }

    pub fn link_components(&self) -> usize {
        self.planar_map().link_components
    }
}

pub fn closure_diagram(w: &BraidWord) -> LinkDiagram {
    LinkDiagram::closure(w)
}

fn build_planar_map(d: &LinkDiagram) -> PlanarMap {
    let b = d.strands;
    let len = d.letters.len();
    let levels = len.max(1);
    let point = |k: usize, p: usize| k * b + (p - 1);
    let npoints = levels * b;
    let end = |pt: usize, side: usize| 2 * pt + side;

    // partner[e] joins ends along edges; through[e] continues a strand
    // across a crossing
    let mut partner = vec![usize::MAX; 2 * npoints];
    let mut through = vec![usize::MAX; 2 * npoints];
    let link = |a: usize, c: usize, v: &mut Vec<usize>| {
        v[a] = c;
        v[c] = a;
    };
    // (letter, [BL, BR, TL, TR])
    let mut crossing_ends: Vec<(usize, [usize; 4])> = Vec::new();

    let ncells = levels * (b + 1);
    let cell = |k: usize, g: usize| k * (b + 1) + g;
    let mut regions = UnionFind::<usize>::new(ncells);

    if len == 0 {
        for p in 1..=b {
            link(end(point(0, p), UP), end(point(0, p), DOWN), &mut partner);
        }
    }
    for (k, (&(i, _), &st)) in d.letters.iter().zip(&d.states).enumerate() {
        let kt = (k + 1) % levels;
        for p in (1..=b).filter(|&p| p != i && p != i + 1) {
            link(end(point(k, p), UP), end(point(kt, p), DOWN), &mut partner);
        }
        for g in (0..=b).filter(|&g| g != i) {
            regions.union(cell(k, g), cell(kt, g));
        }
        let bl = end(point(k, i), UP);
        let br = end(point(k, i + 1), UP);
        let tl = end(point(kt, i), DOWN);
        let tr = end(point(kt, i + 1), DOWN);
        match st {
            CrossingState::Unresolved => {
                link(bl, tr, &mut through);
                link(br, tl, &mut through);
                crossing_ends.push((k, [bl, br, tl, tr]));
            }
            CrossingState::Zero => {
                link(bl, tl, &mut partner);
                link(br, tr, &mut partner);
                regions.union(cell(k, i), cell(kt, i));
            }
            CrossingState::One => {
                link(bl, br, &mut partner);
                link(tl, tr, &mut partner);
                regions.union(cell(k, i - 1), cell(k, i + 1));
            }
        }
    }

    // edges: points joined by partner links
    let mut edges_uf = UnionFind::<usize>::new(npoints);
    for (e, &p) in partner.iter().enumerate().take(2 * npoints) {
        if p != usize::MAX {
            edges_uf.union(e / 2, p / 2);
        }
    }
    let mut edge_id: BTreeMap<usize, usize> = BTreeMap::new();
    let mut point_edge = vec![0usize; npoints];
    for (pt, slot) in point_edge.iter_mut().enumerate() {
        let root = edges_uf.find(pt);
        let next = edge_id.len();
        *slot = *edge_id.entry(root).or_insert(next);
    }
    let nclasses = edge_id.len();

    // orientation and link components by traversal
    let mut dir = vec![0i8; npoints];
    let mut comp = vec![usize::MAX; npoints];
    let mut ncomp = 0;
    for start in 0..npoints {
        if comp[start] != usize::MAX {
            continue;
        }
        let (mut pt, mut up) = (start, true);
        loop {
            comp[pt] = ncomp;
            dir[pt] = if up { 1 } else { -1 };
            let exit = end(pt, if up { UP } else { DOWN });
            let next = if partner[exit] != usize::MAX { partner[exit] } else { through[exit] };
            pt = next / 2;
            up = next % 2 == DOWN;
            if pt == start {
                break;
            }
        }
        ncomp += 1;
    }

    let slot_ends = |sign: i8, [bl, br, tl, tr]: [usize; 4]| {
        if sign > 0 {
            [br, tr, tl, bl]
        } else {
            [bl, br, tr, tl]
        }
    };
    // faces numbered in cell order so ids are canonical
    let mut face_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let cell_face: Vec<usize> = (0..ncells)
        .map(|c| {
            let next = face_of_root.len();
            *face_of_root.entry(regions.find(c)).or_insert(next)
        })
        .collect();
    let face = |c: usize| cell_face[c];

    let mut edge_ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nclasses];
    let mut crossings = Vec::with_capacity(crossing_ends.len());
    for (ci, &(k, bltr)) in crossing_ends.iter().enumerate() {
        let (i, sign) = d.letters[k];
        let ends = slot_ends(sign, bltr);
        let kt = (k + 1) % levels;
        let (s, n, w, e) = (cell(k, i), cell(kt, i), cell(k, i - 1), cell(k, i + 1));
        let cells = if sign > 0 { [e, n, w, s] } else { [s, e, n, w] };
        let corners = cells.map(&face);
        let mut edges = [0; 4];
        let mut incoming = [false; 4];
        for q in 0..4 {
            let (pt, side) = (ends[q] / 2, ends[q] % 2);
            edges[q] = point_edge[pt];
            incoming[q] = (side == UP) == (dir[pt] > 0);
            edge_ends[edges[q]].push((ci, q));
        }
        let under_in = if incoming[0] { 0 } else { 2 };
        let sign = if incoming[(under_in + 3) % 4] { 1 } else { -1 };
        crossings.push(Crossing {
            letter: k,
            edges,
            incoming,
            corners,
            sign,
            component_over: comp[ends[1] / 2],
            component_under: comp[ends[0] / 2],
        });
    }

    // free loops carry no crossing ends; renumber crossing edges first
    let mut renumber = vec![usize::MAX; nclasses];
    let mut ends_out = Vec::new();
    for (cls, list) in edge_ends.iter().enumerate() {
        if !list.is_empty() {
            debug_assert_eq!(list.len(), 2);
            renumber[cls] = ends_out.len();
            ends_out.push([list[0], list[1]]);
        }
    }
    let free_loops = nclasses - ends_out.len();
    for c in &mut crossings {
        c.edges = c.edges.map(|e| renumber[e]);
    }

    // connectivity of the 4-valent graph plus free loops
    let mut graph = UnionFind::<usize>::new(nclasses);
    for &(_, bltr) in &crossing_ends {
        let e0 = point_edge[bltr[0] / 2];
        for x in &bltr[1..] {
            graph.union(e0, point_edge[x / 2]);
        }
    }
    let graph_components = {
        let mut roots: Vec<usize> = (0..nclasses).map(|c| graph.find(c)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    };

    // checkerboard colouring from the outer face
    let nfaces = face_of_root.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nfaces];
    for k in 0..levels {
        for p in 1..=b {
            let (wf, ef) = (face(cell(k, p - 1)), face(cell(k, p)));
            adj[wf].push(ef);
            adj[ef].push(wf);
        }
    }
    let outer_face = face(cell(0, 0));
    let axis_face = face(cell(0, b));
    let mut color: Vec<Option<bool>> = vec![None; nfaces];
    for s in std::iter::once(outer_face).chain(0..nfaces) {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            let cf = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!cf);
                        stack.push(g);
                    }
                    Some(cg) => debug_assert_ne!(cg, cf, "faces {f} and {g} share an edge"),
                }
            }
        }
    }

    let winding = (1..=b).map(|p| i64::from(dir[point(0, p)])).sum();

    PlanarMap {
        crossings,
        edge_ends: ends_out,
        free_loops,
        faces: nfaces,
        outer_face,
        axis_face,
        face_color: color.into_iter().map(|c| c.unwrap_or(false)).collect(),
        link_components: ncomp,
        graph_components,
        winding,
    }
}

impl PlanarMap {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ends.len()
    }

    pub fn is_connected(&self) -> bool {
        self.graph_components == 1
    }

    pub fn black_faces(&self) -> usize {
        self.face_color.iter().filter(|c| **c).count()
    }

    pub fn positive_crossings(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign > 0).count()
    }

    pub fn negative_crossings(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    /// Faces counted as orbits of darts, independent of the region model.
    pub fn faces_from_darts(&self) -> usize {
        let n = self.crossings.len();
        let mut other = vec![(0usize, 0usize); 4 * n];
        for &[a, b] in &self.edge_ends {
            other[4 * a.0 + a.1] = b;
            other[4 * b.0 + b.1] = a;
        }
        let mut seen = vec![false; 4 * n];
        let mut orbits = 0;
        for s in 0..4 * n {
            if seen[s] {
                continue;
            }
            orbits += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                let (c, p) = other[d];
                d = 4 * c + (p + 3) % 4;
            }
        }
        orbits
    }

    /// Every crossing has its A-corners on faces of one colour.
    pub fn is_alternating(&self) -> bool {
        let mut a_black = None;
        self.crossings.iter().all(|c| {
            let black = self.face_color[c.corners[1]];
            *a_black.get_or_insert(black) == black
        })
    }

    /// PD code with edges numbered from 1.
    pub fn pd_code(&self) -> Vec<[usize; 4]> {
        self.crossings.iter().map(|c| c.pd().map(|e| e + 1)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiddiag::parse_braid;

    fn map(s: &str) -> PlanarMap {
        LinkDiagram::closure(&parse_braid(s).unwrap()).planar_map()
    }

    #[test]
    fn identity_braid_is_nested_circles() {
        let m = map("b=3:");
        assert_eq!((m.crossing_count(), m.free_loops, m.faces, m.link_components), (0, 3, 4, 3));
        assert!(!m.is_connected());
        assert_eq!(m.winding, 3);
    }

    #[test]
    fn figure_eight_planar_data() {
        let m = map("b=3: s1 s2^-1 s1 s2^-1");
        assert_eq!(m.crossing_count(), 4);
        assert_eq!(m.edge_count(), 8);
        assert_eq!(m.faces, 6);
        assert_eq!(m.faces_from_darts(), 6);
        assert_eq!(m.link_components, 1);
        assert!(m.is_connected());
        assert!(m.is_alternating());
        assert_eq!(m.positive_crossings(), 2);
    }

    #[test]
    fn trefoil_signs_and_colours() {
        let m = map("b=2: s1^3");
        assert_eq!(m.positive_crossings(), 3);
        assert!(!m.face_color[m.outer_face]);
        assert!(!m.face_color[m.axis_face]);
        assert_eq!(m.black_faces(), 3);
        assert!(m.crossings.iter().all(|c| !c.is_nugatory()));
    }

    #[test]
    fn one_smoothing_of_single_crossing() {
        let d = LinkDiagram::closure(&parse_braid("b=2: s1").unwrap());
        let m = d.planar_map();
        assert_eq!(m.link_components, 1);
        assert!(m.crossings[0].is_nugatory());
        let z = d.resolve(0, 0).unwrap().planar_map();
        assert_eq!((z.link_components, z.graph_components), (2, 2));
        let o = d.resolve(0, 1).unwrap().planar_map();
        assert_eq!((o.link_components, o.graph_components), (1, 1));
        assert_eq!(o.winding, 0);
        assert_eq!(d.resolve(0, 1).unwrap().resolve(0, 0), Err(Error::AlreadyResolved(0)));
    }

    #[test]
    fn pd_code_of_hopf_link() {
        let m = map("b=2: s1^2");
        let pd = m.pd_code();
        assert_eq!(pd.len(), 2);
        assert_eq!(m.link_components, 2);
        let mut all: Vec<usize> = pd.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, vec![1, 1, 2, 2, 3, 3, 4, 4]);
    }
}
