//! Leaf-splitting and leaf-coinciding, uncolored and colored.
//!
//! Splitting an edge `uv` (both ends of degree at least 2) removes it and
//! hangs a new leaf `v'` on `u` and a new leaf `u'` on `v`. Coinciding is the
//! inverse: two leaf-edges `uv'` and `vu'` on distinct, non-adjacent
//! supports become the single edge `uv`, and both leaves disappear.

use std::collections::BTreeSet;

use crate::coloring::{is_proper_total, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Renumbering, Vertex};

/// An edge from a support vertex (degree at least 2) to a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeafEdge {
    pub support: Vertex,
    pub leaf: Vertex,
}

impl LeafEdge {
    pub fn new(support: Vertex, leaf: Vertex) -> Self {
        LeafEdge { support, leaf }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        let ok = g.has_edge(self.support, self.leaf)
            && g.degree(self.leaf) == 1
            && g.degree(self.support) >= 2;
        if ok {
            Ok(())
        } else {
            Err(Error::NotLeafEdge {
                support: self.support,
                leaf: self.leaf,
            })
        }
    }

    fn shifted(self, by: usize) -> Self {
        LeafEdge::new(self.support + by, self.leaf + by)
    }
}

/// All leaf-edges of `g`, ordered by (support, leaf).
pub fn leaf_edges(g: &Graph) -> Vec<LeafEdge> {
    let mut out: Vec<LeafEdge> = g
        .leaves()
        .into_iter()
        .filter_map(|leaf| {
            let support = g.neighbors(leaf).next()?;
            (g.degree(support) >= 2).then_some(LeafEdge::new(support, leaf))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Result of splitting `uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub graph: Graph,
    /// The new leaf `v'` hanging on `u` (id `p + 1`).
    pub leaf_of_u: LeafEdge,
    /// The new leaf `u'` hanging on `v` (id `p + 2`).
    pub leaf_of_v: LeafEdge,
}

/// `G ∧ uv`. New ids: `p + 1` for the leaf on `u`, `p + 2` for the leaf on `v`.
pub fn leaf_split(g: &Graph, u: Vertex, v: Vertex) -> Result<Split> {
    if !g.has_edge(u, v) {
        return Err(Error::EdgeAbsent(Edge::new(u, v)));
    }
    for x in [u, v] {
        if g.degree(x) < 2 {
            return Err(Error::DegreeTooSmall {
                vertex: x,
                degree: g.degree(x),
            });
        }
    }
    let mut h = g.clone();
    h.remove_edge(u, v)?;
    let v_prime = h.add_vertex();
    let u_prime = h.add_vertex();
    h.add_edge(u, v_prime)?;
    h.add_edge(v, u_prime)?;
    assert_eq!((h.order(), h.size()), (g.order() + 2, g.size() + 1));
    Ok(Split {
        graph: h,
        leaf_of_u: LeafEdge::new(u, v_prime),
        leaf_of_v: LeafEdge::new(v, u_prime),
    })
}

/// Result of a coinciding step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coincided {
    pub graph: Graph,
    /// Maps ids of the input graph (or of the disjoint union, for
    /// [`leaf_coincide_across`]) to ids of `graph`.
    pub renumbering: Renumbering,
    /// The new edge between the two supports, in new ids.
    pub edge: (Vertex, Vertex),
}

/// `H(uv' ⊖ u'v)`: deletes both leaves and joins the supports.
pub fn leaf_coincide(h: &Graph, e1: LeafEdge, e2: LeafEdge) -> Result<Coincided> {
    e1.check(h)?;
    e2.check(h)?;
    if e1.support == e2.support {
        return Err(Error::SharedSupport(e1.support));
    }
    if h.has_edge(e1.support, e2.support) {
        return Err(Error::SupportsAdjacent(e1.support, e2.support));
    }
    let mut joined = h.clone();
    joined.add_edge(e1.support, e2.support)?;
    let (graph, renumbering) = joined.remove_vertices(&BTreeSet::from([e1.leaf, e2.leaf]))?;
    assert_eq!((graph.order() + 2, graph.size() + 1), (h.order(), h.size()));
    let edge = (
        renumbering.get(e1.support).expect("support survives"),
        renumbering.get(e2.support).expect("support survives"),
    );
    Ok(Coincided {
        graph,
        renumbering,
        edge,
    })
}

/// `H1 ⊖ H2`: `e2` is given in `h2`'s ids; `h2` is shifted by `h1.order()`
/// in the union the renumbering refers to.
pub fn leaf_coincide_across(h1: &Graph, e1: LeafEdge, h2: &Graph, e2: LeafEdge) -> Result<Coincided> {
    e1.check(h1)?;
    e2.check(h2)?;
    let union = h1.disjoint_union(h2);
    leaf_coincide(&union, e1, e2.shifted(h1.order()))
}

/// Splits `uv` and colors the new leaves per the colored rule: the leaf on
/// `u` copies `f(v)`, the leaf on `v` copies `f(u)`, both new edges copy
/// `f(uv)`.
pub fn colored_leaf_split(
    g: &Graph,
    f: &TotalColoring,
    u: Vertex,
    v: Vertex,
) -> Result<(Split, TotalColoring)> {
    if !is_proper_total(g, f)? {
        return Err(Error::NotProperTotal);
    }
    let split = leaf_split(g, u, v)?;
    let mut coloring = f.clone();
    let cut = f.edge(u, v).expect("total coloring");
    coloring.clear_edge(u, v);
    coloring.set_vertex(split.leaf_of_u.leaf, f.vertex(v).expect("total coloring"));
    coloring.set_vertex(split.leaf_of_v.leaf, f.vertex(u).expect("total coloring"));
    coloring.set_edge(u, split.leaf_of_u.leaf, cut);
    coloring.set_edge(v, split.leaf_of_v.leaf, cut);
    assert!(is_proper_total(&split.graph, &coloring)?);
    Ok((split, coloring))
}

/// `θ(u1) = θ(v2)`, `θ(u2) = θ(v1)` and `θ(u1v1) = θ(u2v2)`, where `u_i` are
/// the supports and `v_i` the leaves.
pub fn colored_compatible(l: &Graph, theta: &TotalColoring, e1: LeafEdge, e2: LeafEdge) -> bool {
    let _ = l;
    let vc = |x: Vertex| theta.vertex(x);
    let ec = |e: LeafEdge| theta.edge(e.support, e.leaf);
    vc(e1.support).is_some()
        && vc(e1.support) == vc(e2.leaf)
        && vc(e2.support).is_some()
        && vc(e2.support) == vc(e1.leaf)
        && ec(e1).is_some()
        && ec(e1) == ec(e2)
}

/// Coincides two compatible colored leaf-edges. The merged edge keeps the
/// shared edge color; the result must again be a proper total coloring.
pub fn colored_leaf_coincide(
    l: &Graph,
    theta: &TotalColoring,
    e1: LeafEdge,
    e2: LeafEdge,
) -> Result<(Coincided, TotalColoring)> {
    if !is_proper_total(l, theta)? {
        return Err(Error::NotProperTotal);
    }
    e1.check(l)?;
    e2.check(l)?;
    if !colored_compatible(l, theta, e1, e2) {
        return Err(Error::Incompatible);
    }
    let merged = leaf_coincide(l, e1, e2)?;
    let mut psi = theta.renumber(&merged.renumbering, merged.graph.order());
    let color = theta.edge(e1.support, e1.leaf).expect("total coloring");
    psi.set_edge(merged.edge.0, merged.edge.1, color);
    if !is_proper_total(&merged.graph, &psi)? {
        return Err(Error::NotProperTotal);
    }
    Ok((merged, psi))
}
