//! Degree sequences, graphicality and the structural predicates built on
//! vertex degrees.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Graph, Vertex};

/// Vertex degrees sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `degrees` into non-increasing order.
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    DegreeSequence::new(g.degrees())
}

/// `d -> n_d(G)`, the number of vertices of each occurring degree.
pub fn degree_counts(g: &Graph) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for d in g.degrees() {
        *counts.entry(d).or_insert(0) += 1;
    }
    counts
}

/// Erdős–Gallai test on the non-increasing sort.
pub fn is_graphical(d: &DegreeSequence) -> bool {
    let d = d.as_slice();
    if d.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    let n = d.len();
    let mut prefix = 0;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Havel–Hakimi realization. Vertex `i` of the result has degree `d[i-1]`
/// of the non-increasing sequence.
pub fn realize_sequence(d: &DegreeSequence) -> Option<Graph> {
    let n = d.len();
    if n == 0 {
        return None;
    }
    let mut g = Graph::empty(n).ok()?;
    let mut residual: Vec<(usize, Vertex)> = d
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &deg)| (deg, i + 1))
        .collect();
    loop {
        // Highest residual first, ties by lowest id.
        residual.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (deg, v) = residual[0];
        if deg == 0 {
            return Some(g);
        }
        if deg >= residual.len() {
            return None;
        }
        residual[0].0 = 0;
        for slot in residual.iter_mut().skip(1).take(deg) {
            if slot.0 == 0 {
                return None;
            }
            slot.0 -= 1;
            g.add_edge(v, slot.1).ok()?;
        }
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.components().len() == 1
}

/// `n_1(T) = 2 + Σ_{d≥3} (d−2) n_d(T)`. Holds for every tree with at least
/// two vertices.
pub fn leaf_identity_holds(g: &Graph) -> bool {
    let counts = degree_counts(g);
    let leaves = counts.get(&1).copied().unwrap_or(0);
    let excess: usize = counts
        .iter()
        .filter(|(&d, _)| d >= 3)
        .map(|(&d, &n)| (d - 2) * n)
        .sum();
    leaves == 2 + excess
}

pub fn is_tree(g: &Graph) -> bool {
    let tree = g.size() + 1 == g.order() && is_connected(g);
    if tree && g.order() >= 2 {
        assert!(leaf_identity_holds(g), "leaf identity failed on a tree");
    }
    tree
}

/// Every vertex has degree 1 or Δ(G).
pub fn is_delta_saturated(g: &Graph) -> bool {
    let delta = g.max_degree();
    g.degrees().iter().all(|&d| d == 1 || d == delta)
}
