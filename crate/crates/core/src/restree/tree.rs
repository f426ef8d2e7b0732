use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::wirtinger::alexander_of_map;
use crate::braiddiag::{determinant_of_map, doubled_cover_diagram, signature_of_map, CrossingState, LinkDiagram};
use crate::error::{Error, Result};
use crate::intlinalg::LaurentPoly;
use crate::scalar::Scalar;

pub const DEFAULT_CROSSING_CAP: usize = 24;

/// Invariants of the lift of the axis over one leaf.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct LeafData<T: Scalar> {
    #[serde(with = "crate::json::scalar")]
    pub determinant: T,
    pub alexander: LaurentPoly<T>,
    pub signature: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionNode<T: Scalar> {
    pub diagram: LinkDiagram,
    /// Crossing resolved to produce the children, in `0, 1` order.
    pub branched: Option<usize>,
    pub children: Vec<ResolutionNode<T>>,
    pub leaf: Option<LeafData<T>>,
}

/// Replaces crossing `c` by its `r`-smoothing.
pub fn resolve(d: &LinkDiagram, c: usize, r: u8) -> Result<LinkDiagram> {
    d.resolve(c, r)
}

/// Whether both smoothings of `c` keep the diagram connected in the annulus.
pub fn is_branchable(d: &LinkDiagram, c: usize) -> Result<bool> {
    Ok(d.resolve(c, 0)?.is_connected() && d.resolve(c, 1)?.is_connected())
}

/// Full resolution tree, scanning crossings in letter order.
pub fn wehrli_tree<T: Scalar>(d: &LinkDiagram, cap: usize) -> Result<ResolutionNode<T>> {
    check_input(d, cap)?;
    Ok(expand(d.clone(), 0))
}

fn check_input(d: &LinkDiagram, cap: usize) -> Result<()> {
    if d.strands().is_multiple_of(2) {
        return Err(Error::EvenStrandCount(d.strands()));
    }
    let count = d.crossing_count();
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn expand<T: Scalar>(d: LinkDiagram, from: usize) -> ResolutionNode<T> {
    let next = (from..d.letters().len())
        .find(|&c| d.states()[c] == CrossingState::Unresolved && is_branchable(&d, c).expect("crossing is unresolved"));
    match next {
        None => ResolutionNode { diagram: d, branched: None, children: Vec::new(), leaf: None },
        Some(c) => {
            let (d0, d1) = (d.resolve(c, 0).unwrap(), d.resolve(c, 1).unwrap());
            let (n0, n1) = rayon::join(|| expand(d0, c + 1), || expand(d1, c + 1));
            ResolutionNode { diagram: d, branched: Some(c), children: vec![n0, n1], leaf: None }
        }
    }
}

/// Determinant, Alexander polynomial and signature of a leaf's cover knot.
pub fn leaf_invariants<T: Scalar>(leaf: &LinkDiagram) -> Result<LeafData<T>> {
    let m = doubled_cover_diagram(leaf)?.planar_map();
    Ok(LeafData {
        determinant: determinant_of_map(&m)?,
        alexander: alexander_of_map(&m)?,
        signature: signature_of_map(&m)?,
    })
}

impl<T: Scalar> ResolutionNode<T> {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Self::node_count).sum::<usize>()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(Self::leaf_count).sum()
        }
    }

    /// Leaves in depth-first order, `0`-child first.
    pub fn leaves(&self) -> Vec<&ResolutionNode<T>> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(n) = stack.pop() {
            if n.is_leaf() {
                out.push(n);
            }
            stack.extend(n.children.iter().rev());
        }
        out
    }

    /// Fills in leaf data on every leaf.
    pub fn compute_leaf_invariants(&mut self) -> Result<()> {
        use rayon::prelude::*;
        if self.is_leaf() {
            self.leaf = Some(leaf_invariants(&self.diagram)?);
            return Ok(());
        }
        self.children.par_iter_mut().map(Self::compute_leaf_invariants).collect()
    }

    /// Nodes in preorder; ids are positions in this list.
    pub fn export(&self) -> Vec<NodeExport<T>> {
        let mut out = Vec::new();
        self.export_into(&mut out);
        out
    }

    fn export_into(&self, out: &mut Vec<NodeExport<T>>) -> usize {
        let id = out.len();
        out.push(NodeExport {
            id,
            states: self.diagram.states().to_vec(),
            branched: self.branched,
            children: Vec::new(),
            leaf: self.leaf.clone(),
        });
        let kids: Vec<usize> = self.children.iter().map(|c| c.export_into(out)).collect();
        out[id].children = kids;
        id
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "strands": self.diagram.strands(),
            "letters": self.diagram.letters(),
            "nodes": self.export(),
        })
    }

    pub fn to_dot(&self) -> String {
        let nodes = self.export();
        let mut s = String::from("digraph resolution_tree {\n  node [shape=box, fontname=monospace];\n");
        for n in &nodes {
            let states: String = n
                .states
                .iter()
                .map(|st| match st {
                    CrossingState::Unresolved => 'x',
                    CrossingState::Zero => '0',
                    CrossingState::One => '1',
                })
                .collect();
            let label = match &n.leaf {
                Some(l) => format!("{states}\\ndet {} | {}", l.determinant, l.alexander),
                None => states,
            };
            let _ = writeln!(s, "  n{} [label=\"{label}\"];", n.id);
        }
        for n in &nodes {
            for (r, c) in n.children.iter().enumerate() {
                let _ = writeln!(s, "  n{} -> n{c} [label=\"{}:{r}\"];", n.id, n.branched.unwrap_or(0));
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct NodeExport<T: Scalar> {
    pub id: usize,
    pub states: Vec<CrossingState>,
    pub branched: Option<usize>,
    pub children: Vec<usize>,
    pub leaf: Option<LeafData<T>>,
}

/// Leaf invariants of the full tree, sorted.
pub fn leaf_census<T: Scalar>(root: &ResolutionNode<T>) -> Result<Vec<LeafData<T>>> {
    use rayon::prelude::*;
    let leaves = root.leaves();
    let mut out: Vec<LeafData<T>> = leaves
        .par_iter()
        .map(|n| match &n.leaf {
            Some(l) => Ok(l.clone()),
            None => leaf_invariants(&n.diagram),
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}
