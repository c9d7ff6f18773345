//! Canonical forms by individualization and refinement.
//!
//! The ordered partition starts from degrees and is refined until
//! equitable; the search individualizes vertices of the first non-singleton
//! cell and keeps the lexicographically largest adjacency code over all
//! discrete leaves. Twin vertices (same neighborhood up to each other) are
//! tried once per cell, which keeps complete and complete bipartite graphs
//! cheap. Intended for graphs of up to a few dozen vertices.

use crate::graph::{Graph, Vertex};

/// Isomorphism-invariant code: order plus the upper-triangle adjacency bits
/// under the canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    size: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Rebuilds the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut g = Graph::empty(n).expect("canonical forms have vertices");
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits[idx / 64] >> (63 - idx % 64) & 1 == 1 {
                    g.add_edge(i + 1, j + 1).expect("canonical code is simple");
                }
                idx += 1;
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with the labeling: vertex `v` maps to
/// `labels[v - 1]`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<Vertex>) {
    let canon = Canonizer::new(g);
    let initial = initial_partition(&canon.adj);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    canon.search(canon.refine(initial), &mut best);
    let (bits, order) = best.expect("search visits at least one leaf");
    let mut labels = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        labels[v] = pos + 1;
    }
    (
        CanonicalForm {
            order: g.order(),
            size: g.size(),
            bits,
        },
        labels,
    )
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, labels) = canonical_labeling(g);
    g.relabel(&labels)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

type Partition = Vec<Vec<usize>>;

fn initial_partition(adj: &[Vec<bool>]) -> Partition {
    let n = adj.len();
    let mut by_degree: Vec<(usize, usize)> = (0..n)
        .map(|v| (adj[v].iter().filter(|&&b| b).count(), v))
        .collect();
    by_degree.sort_unstable();
    let mut cells: Partition = Vec::new();
    let mut last = None;
    for (d, v) in by_degree {
        if last != Some(d) {
            cells.push(Vec::new());
            last = Some(d);
        }
        cells.last_mut().expect("cell pushed").push(v);
    }
    cells
}

struct Canonizer {
    adj: Vec<Vec<bool>>,
}

impl Canonizer {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for e in g.edges() {
            adj[e.lo() - 1][e.hi() - 1] = true;
            adj[e.hi() - 1][e.lo() - 1] = true;
        }
        Canonizer { adj }
    }

    /// Splits cells by neighbor counts into every cell until stable.
    fn refine(&self, mut cells: Partition) -> Partition {
        let n = self.adj.len();
        let mut cell_of = vec![0; n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let k = cells.len();
            let mut next: Partition = Vec::with_capacity(k);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut counts = vec![0; k];
                        for w in 0..n {
                            if self.adj[v][w] {
                                counts[cell_of[w]] += 1;
                            }
                        }
                        (counts, v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == k {
                return next;
            }
            cells = next;
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (0..self.adj.len()).all(|w| w == u || w == v || self.adj[u][w] == self.adj[v][w])
    }

    fn code(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[order[i]][order[j]] {
                    bits[idx / 64] |= 1 << (63 - idx % 64);
                }
                idx += 1;
            }
        }
        bits
    }

    fn search(&self, cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = self.code(&order);
            if best.as_ref().is_none_or(|(b, _)| bits > *b) {
                *best = Some((bits, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut child: Partition = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..target].iter().cloned());
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend(cells[target + 1..].iter().cloned());
            self.search(self.refine(child), best);
        }
    }
}
