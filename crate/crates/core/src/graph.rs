//! Simple undirected graphs on dense 1-based vertex ids.
//!
//! A [`Graph`] never holds loops or parallel edges; every constructor and
//! mutator checks this. Operations that delete vertices compact the id range
//! and hand back a [`Renumbering`] so callers can keep following vertices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(&self) -> Vertex {
        self.0
    }

    pub fn hi(&self) -> Vertex {
        self.1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: Vertex) -> Option<Vertex> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Old-id to new-id map produced when vertices are deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Renumbering {
    map: Vec<Option<Vertex>>,
}

impl Renumbering {
    pub fn identity(order: usize) -> Self {
        Renumbering {
            map: (1..=order).map(Some).collect(),
        }
    }

    /// New id of `old`, or `None` if it was deleted.
    pub fn get(&self, old: Vertex) -> Option<Vertex> {
        self.map.get(old.checked_sub(1)?).copied().flatten()
    }

    pub fn old_order(&self) -> usize {
        self.map.len()
    }

    /// Composes `self` followed by `next`.
    pub fn then(&self, next: &Renumbering) -> Renumbering {
        Renumbering {
            map: self
                .map
                .iter()
                .map(|v| v.and_then(|v| next.get(v)))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<BTreeSet<Vertex>>,
}

impl Graph {
    /// Builds a graph on vertices `1..=order`. Rejects loops, repeated
    /// edges and out-of-range endpoints.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Graph {
            order,
            edges: BTreeSet::new(),
            adj: vec![BTreeSet::new(); order],
        })
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs 3 vertices");
        Graph::new(n, (1..=n).map(|i| (i, i % n + 1))).expect("cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph")
    }

    /// Parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("complete bipartite graph")
    }

    /// `K_{1,m}` with center 1 and leaves `2..=m+1`.
    pub fn star(m: usize) -> Self {
        Graph::new(m + 1, (2..=m + 1).map(|v| (1, v))).expect("star")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.order
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (1..=self.order).contains(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v - 1].iter().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains_vertex(u) && self.adj[u - 1].contains(&v)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Vertices of degree 1, ascending.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = Edge::new(u, v);
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(e));
        }
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let e = Edge::new(u, v);
        if !self.edges.remove(&e) {
            return Err(Error::EdgeAbsent(e));
        }
        self.adj[u - 1].remove(&v);
        self.adj[v - 1].remove(&u);
        Ok(())
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.order += 1;
        self.adj.push(BTreeSet::new());
        self.order
    }

    /// Deletes `removed` and compacts ids, keeping relative order.
    pub fn remove_vertices(&self, removed: &BTreeSet<Vertex>) -> Result<(Graph, Renumbering)> {
        for &v in removed {
            self.check_vertex(v)?;
        }
        let mut map = Vec::with_capacity(self.order);
        let mut next = 0;
        for v in self.vertices() {
            if removed.contains(&v) {
                map.push(None);
            } else {
                next += 1;
                map.push(Some(next));
            }
        }
        let renumber = Renumbering { map };
        let mut g = Graph::empty(next)?;
        for e in &self.edges {
            if let (Some(a), Some(b)) = (renumber.get(e.0), renumber.get(e.1)) {
                g.add_edge(a, b)?;
            }
        }
        Ok((g, renumber))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let mut g = self.clone();
        for _ in other.vertices() {
            g.add_vertex();
        }
        for e in other.edges() {
            g.add_edge(e.0 + shift, e.1 + shift)
                .expect("shifted edges stay simple");
        }
        g
    }

    /// Relabels vertex `v` as `perm[v - 1]`. `perm` must be a permutation of
    /// `1..=order`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order).expect("non-empty");
        for e in &self.edges {
            g.add_edge(perm[e.0 - 1], perm[e.1 - 1])
                .expect("relabeling by a permutation stays simple");
        }
        g
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order + 1];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Re-checks every structural invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::NoVertices);
        }
        if self.adj.len() != self.order {
            return Err(Error::Inconsistent("adjacency length mismatch"));
        }
        let mut rebuilt = vec![BTreeSet::new(); self.order];
        for e in &self.edges {
            self.check_vertex(e.1)?;
            if e.0 == e.1 {
                return Err(Error::SelfLoop(e.0));
            }
            if e.0 == 0 || e.0 > e.1 {
                return Err(Error::VertexOutOfRange {
                    vertex: e.0,
                    order: self.order,
                });
            }
            rebuilt[e.0 - 1].insert(e.1);
            rebuilt[e.1 - 1].insert(e.0);
        }
        if rebuilt != self.adj {
            return Err(Error::Inconsistent("adjacency out of sync with edge set"));
        }
        Ok(())
    }

    /// Text form: `p q` followed by one `u v` line per edge, ascending.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        text.parse()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.order, self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{} {}", e.0, e.1)?;
        }
        Ok(())
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_fields<T: FromStr>(line_no: usize, line: &str, count: usize) -> Result<Vec<T>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != count {
        return Err(parse_err(
            line_no,
            format!("expected {count} fields, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| parse_err(line_no, format!("invalid number `{f}`")))
        })
        .collect()
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let pq: Vec<usize> = parse_fields(line_no, header, 2)?;
        let mut g = Graph::empty(pq[0]).map_err(|e| parse_err(line_no, e.to_string()))?;
        let mut count = 0;
        for (line_no, line) in lines {
            let uv: Vec<usize> = parse_fields(line_no, line, 2)?;
            g.add_edge(uv[0], uv[1])
                .map_err(|e| parse_err(line_no, e.to_string()))?;
            count += 1;
        }
        if count != pq[1] {
            return Err(parse_err(
                line_no,
                format!("header announces {} edges, found {count}", pq[1]),
            ));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(Edge::new(1, 2)))
        );
        assert!(matches!(
            Graph::new(2, [(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 2 })
        ));
        assert_eq!(Graph::empty(0), Err(Error::NoVertices));
    }

    #[test]
    fn text_round_trip_normalizes() {
        let g: Graph = "4 3\n2 1\n3 2\n# comment\n4 3\n".parse().unwrap();
        assert_eq!(g.to_text(), "4 3\n1 2\n2 3\n3 4\n");
        assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn text_edge_count_mismatch() {
        assert!(matches!(
            "3 2\n1 2\n".parse::<Graph>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!("3 x\n".parse::<Graph>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn remove_vertices_compacts() {
        let g = Graph::path(5);
        let (h, map) = g.remove_vertices(&BTreeSet::from([1, 3])).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(map.get(2), Some(1));
        assert_eq!(map.get(3), None);
        assert_eq!(map.get(5), Some(3));
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![Edge::new(2, 3)]);
        h.validate().unwrap();
    }

    #[test]
    fn components_and_union() {
        let g = Graph::cycle(3).disjoint_union(&Graph::path(2));
        assert_eq!(g.components(), vec![vec![1, 2, 3], vec![4, 5]]);
        g.validate().unwrap();
    }
}
