//! Proper total colorings, the felicitous-difference parameter and an exact
//! solver for the felicitous-difference total chromatic number.
//!
//! An edge `uv` has weight `c_f(uv) = |f(u) + f(v) - f(uv)|`; a coloring is
//! felicitous-difference when every edge has the same weight `k`. The
//! solver exploits that once `k` is known, each edge has at most two
//! admissible colors, `f(u) + f(v) ± k`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::textio::{join, with_line, Lines};

/// Largest palette the exact solver accepts.
pub const MAX_PALETTE: u32 = 127;

/// Vertex and edge colors over the palette `[1, palette]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalColoring {
    palette: u32,
    vertex: Vec<u32>,
    edge: BTreeMap<Edge, u32>,
}

impl TotalColoring {
    /// `vertex_colors[v - 1]` colors vertex `v`.
    pub fn new(palette: u32, vertex_colors: Vec<u32>, edge_colors: BTreeMap<Edge, u32>) -> Self {
        TotalColoring {
            palette,
            vertex: vertex_colors,
            edge: edge_colors,
        }
    }

    pub fn from_triples(
        palette: u32,
        vertex_colors: Vec<u32>,
        edge_colors: impl IntoIterator<Item = (Vertex, Vertex, u32)>,
    ) -> Self {
        let edge = edge_colors
            .into_iter()
            .map(|(u, v, c)| (Edge::new(u, v), c))
            .collect();
        TotalColoring::new(palette, vertex_colors, edge)
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn set_palette(&mut self, palette: u32) {
        self.palette = palette;
    }

    pub fn vertex(&self, v: Vertex) -> Option<u32> {
        self.vertex.get(v.checked_sub(1)?).copied().filter(|&c| c != 0)
    }

    pub fn edge(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.edge.get(&Edge::new(u, v)).copied()
    }

    pub fn vertex_colors(&self) -> &[u32] {
        &self.vertex
    }

    pub fn edge_colors(&self) -> &BTreeMap<Edge, u32> {
        &self.edge
    }

    pub fn set_vertex(&mut self, v: Vertex, color: u32) {
        if self.vertex.len() < v {
            self.vertex.resize(v, 0);
        }
        self.vertex[v - 1] = color;
    }

    pub fn set_edge(&mut self, u: Vertex, v: Vertex, color: u32) {
        self.edge.insert(Edge::new(u, v), color);
    }

    pub fn clear_edge(&mut self, u: Vertex, v: Vertex) -> Option<u32> {
        self.edge.remove(&Edge::new(u, v))
    }

    /// Largest color in use, 0 when nothing is colored.
    pub fn max_color(&self) -> u32 {
        self.vertex
            .iter()
            .chain(self.edge.values())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Every vertex and edge of `g` colored from `[1, palette]`, nothing else.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        let check = |c: u32| {
            if (1..=self.palette).contains(&c) {
                Ok(())
            } else {
                Err(Error::ColorOutOfRange {
                    color: c,
                    palette: self.palette,
                })
            }
        };
        for v in g.vertices() {
            match self.vertex.get(v - 1) {
                Some(&c) if c != 0 => check(c)?,
                _ => return Err(Error::UncoloredVertex(v)),
            }
        }
        if self.vertex.len() > g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: self.vertex.len(),
                order: g.order(),
            });
        }
        for e in g.edges() {
            check(*self.edge.get(&e).ok_or(Error::UncoloredEdge(e))?)?;
        }
        if let Some(e) = self.edge.keys().find(|e| !g.edge_set().contains(e)) {
            return Err(Error::StrayEdgeColor(*e));
        }
        Ok(())
    }

    /// Renames vertices through `map` (old id to new id); entries mapped to
    /// `None` are dropped along with their edges.
    pub(crate) fn renumber(&self, map: &crate::graph::Renumbering, new_order: usize) -> Self {
        let mut vertex = vec![0; new_order];
        for (i, &c) in self.vertex.iter().enumerate() {
            if let Some(v) = map.get(i + 1) {
                vertex[v - 1] = c;
            }
        }
        let edge = self
            .edge
            .iter()
            .filter_map(|(e, &c)| Some((Edge::new(map.get(e.lo())?, map.get(e.hi())?), c)))
            .collect();
        TotalColoring::new(self.palette, vertex, edge)
    }
}

/// Adjacent vertices differ, incident edges differ, and every edge differs
/// from both of its endpoints.
pub fn is_proper_total(g: &Graph, f: &TotalColoring) -> Result<bool> {
    f.check_total(g)?;
    let vc = |v: Vertex| f.vertex[v - 1];
    for e in g.edges() {
        let c = f.edge[&e];
        if vc(e.lo()) == vc(e.hi()) || c == vc(e.lo()) || c == vc(e.hi()) {
            return Ok(false);
        }
    }
    for v in g.vertices() {
        let mut seen = Vec::with_capacity(g.degree(v));
        for w in g.neighbors(v) {
            let c = f.edge[&Edge::new(v, w)];
            if seen.contains(&c) {
                return Ok(false);
            }
            seen.push(c);
        }
    }
    Ok(true)
}

/// `|a + b - c|` for endpoint colors `a`, `b` and edge color `c`.
pub fn weight_of_colors(a: u32, b: u32, c: u32) -> u32 {
    (i64::from(a) + i64::from(b) - i64::from(c)).unsigned_abs() as u32
}

pub fn edge_weight(f: &TotalColoring, e: Edge) -> Result<u32> {
    let a = f.vertex(e.lo()).ok_or(Error::UncoloredVertex(e.lo()))?;
    let b = f.vertex(e.hi()).ok_or(Error::UncoloredVertex(e.hi()))?;
    let c = f.edge(e.lo(), e.hi()).ok_or(Error::UncoloredEdge(e))?;
    Ok(weight_of_colors(a, b, c))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FdtReport {
    pub weights: BTreeMap<Edge, u32>,
    pub max_weight: u32,
    pub min_weight: u32,
    /// `max_weight - min_weight`.
    pub bfdt: u32,
    /// The common weight when `bfdt == 0`.
    pub constant: Option<u32>,
}

impl fmt::Display for FdtReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bfdt {}", self.bfdt)?;
        writeln!(f, "weights {}..{}", self.min_weight, self.max_weight)?;
        match self.constant {
            Some(k) => writeln!(f, "felicitous-difference k={k}"),
            None => writeln!(f, "not felicitous-difference"),
        }
    }
}

pub fn bfdt(g: &Graph, f: &TotalColoring) -> Result<FdtReport> {
    if !is_proper_total(g, f)? {
        return Err(Error::NotProperTotal);
    }
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let weights: BTreeMap<Edge, u32> = g
        .edges()
        .map(|e| edge_weight(f, e).map(|w| (e, w)))
        .collect::<Result<_>>()?;
    let max_weight = *weights.values().max().expect("non-empty");
    let min_weight = *weights.values().min().expect("non-empty");
    let bfdt = max_weight - min_weight;
    Ok(FdtReport {
        weights,
        max_weight,
        min_weight,
        bfdt,
        constant: (bfdt == 0).then_some(max_weight),
    })
}

/// `Δ(G) + 1`: a vertex of maximum degree needs that many distinct colors on
/// itself and its edges.
pub fn chi_lower_bound(g: &Graph) -> u32 {
    g.max_degree() as u32 + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(TotalColoring),
    /// The whole space was searched; no coloring exists.
    Exhausted,
    /// A time or node limit stopped the search.
    Aborted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiOutcome {
    Exact { palette: u32, coloring: TotalColoring },
    /// Every palette up to `budget` was exhausted.
    NoneUpTo { budget: u32 },
    /// Palettes below `palette` were exhausted; the search at `palette`
    /// hit a limit, so nothing is known from there on.
    Unknown { palette: u32 },
}

/// Limits for the exact felicitous-difference search.
#[derive(Debug, Clone, Default)]
pub struct FdtSearch {
    /// Per-palette wall-clock limit.
    pub time_limit: Option<Duration>,
    /// Per-palette limit on search nodes.
    pub node_limit: Option<u64>,
}

impl FdtSearch {
    pub fn unlimited() -> Self {
        FdtSearch::default()
    }

    /// Looks for a felicitous-difference proper total coloring with palette
    /// `[1, palette]`.
    pub fn find(&self, g: &Graph, palette: u32) -> SearchOutcome {
        assert!(palette <= MAX_PALETTE, "palette above {MAX_PALETTE}");
        if palette == 0 {
            return SearchOutcome::Exhausted;
        }
        let mut solver = Solver::new(g, palette, self);
        match solver.place_vertex(0) {
            Step::Found => SearchOutcome::Found(solver.coloring(g)),
            Step::Failed => SearchOutcome::Exhausted,
            Step::Abort => SearchOutcome::Aborted,
        }
    }

    /// Smallest palette in `[Δ+1, budget]` admitting a witness.
    pub fn chi(&self, g: &Graph, budget: u32) -> ChiOutcome {
        let budget = budget.min(MAX_PALETTE);
        for palette in chi_lower_bound(g)..=budget {
            match self.find(g, palette) {
                SearchOutcome::Found(coloring) => return ChiOutcome::Exact { palette, coloring },
                SearchOutcome::Exhausted => {}
                SearchOutcome::Aborted => return ChiOutcome::Unknown { palette },
            }
        }
        ChiOutcome::NoneUpTo { budget }
    }
}

pub fn find_fdt_coloring(g: &Graph, palette: u32) -> Option<TotalColoring> {
    match FdtSearch::unlimited().find(g, palette) {
        SearchOutcome::Found(f) => Some(f),
        _ => None,
    }
}

/// Exact `χ''_fdt(G)` if it is at most `max_budget`.
pub fn chi_fdt(g: &Graph, max_budget: u32) -> Option<(u32, TotalColoring)> {
    match FdtSearch::unlimited().chi(g, max_budget) {
        ChiOutcome::Exact { palette, coloring } => Some((palette, coloring)),
        _ => None,
    }
}

enum Step {
    Found,
    Failed,
    Abort,
}

struct Solver {
    palette: u32,
    /// Vertices (0-based) in search order.
    order: Vec<usize>,
    /// Per order position: (edge index, earlier endpoint).
    back: Vec<Vec<(usize, usize)>>,
    /// Per order position of a twin leaf: edge index of the previous leaf on
    /// the same support, whose color must be smaller.
    twin_prev: Vec<Option<usize>>,
    edges: Vec<Edge>,
    vcol: Vec<u32>,
    ecol: Vec<u32>,
    /// Bit `c` set when an edge at the vertex already has color `c`.
    used: Vec<u128>,
    k: Option<u32>,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
}

impl Solver {
    fn new(g: &Graph, palette: u32, limits: &FdtSearch) -> Self {
        let n = g.order();
        let order = search_order(g);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<Edge> = g.edges().collect();
        let mut back = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            let (a, b) = (e.lo() - 1, e.hi() - 1);
            let (early, late) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
            back[pos[late]].push((i, early));
        }
        for list in &mut back {
            list.sort_by_key(|&(_, w)| pos[w]);
        }
        let mut twin_prev = vec![None; n];
        let mut last_leaf_edge: BTreeMap<usize, usize> = BTreeMap::new();
        for (p, &v) in order.iter().enumerate() {
            if g.degree(v + 1) == 1 && back[p].len() == 1 {
                let (e, support) = back[p][0];
                twin_prev[p] = last_leaf_edge.insert(support, e);
            }
        }
        Solver {
            palette,
            order,
            back,
            twin_prev,
            vcol: vec![0; n],
            ecol: vec![0; edges.len()],
            edges,
            used: vec![0; n],
            k: None,
            nodes: 0,
            node_limit: limits.node_limit,
            deadline: limits.time_limit.map(|d| Instant::now() + d),
        }
    }

    fn coloring(&self, g: &Graph) -> TotalColoring {
        let edge = self
            .edges
            .iter()
            .zip(&self.ecol)
            .map(|(e, &c)| (*e, c))
            .collect();
        let f = TotalColoring::new(self.palette, self.vcol.clone(), edge);
        debug_assert!(is_proper_total(g, &f).unwrap_or(false));
        f
    }

    fn over_limit(&mut self) -> bool {
        self.nodes += 1;
        if self.node_limit.is_some_and(|limit| self.nodes > limit) {
            return true;
        }
        self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn place_vertex(&mut self, p: usize) -> Step {
        if p == self.order.len() {
            return Step::Found;
        }
        if self.over_limit() {
            return Step::Abort;
        }
        let v = self.order[p];
        for c in 1..=self.palette {
            if self.back[p].iter().any(|&(_, w)| self.vcol[w] == c) {
                continue;
            }
            self.vcol[v] = c;
            match self.place_edge(p, 0) {
                Step::Failed => {}
                other => return other,
            }
        }
        self.vcol[v] = 0;
        Step::Failed
    }

    fn place_edge(&mut self, p: usize, i: usize) -> Step {
        let Some(&(e, w)) = self.back[p].get(i) else {
            return self.place_vertex(p + 1);
        };
        let v = self.order[p];
        let (a, b) = (self.vcol[v], self.vcol[w]);
        let floor = match self.twin_prev[p] {
            Some(prev) => self.ecol[prev] + 1,
            None => 1,
        };
        let fixed_k = self.k;
        for x in floor..=self.palette {
            if x == a || x == b || fixed_k.is_some_and(|k| weight_of_colors(a, b, x) != k) {
                continue;
            }
            let bit = 1u128 << x;
            if (self.used[v] | self.used[w]) & bit != 0 {
                continue;
            }
            self.ecol[e] = x;
            self.used[v] |= bit;
            self.used[w] |= bit;
            if fixed_k.is_none() {
                self.k = Some(weight_of_colors(a, b, x));
            }
            let step = self.place_edge(p, i + 1);
            self.used[v] &= !bit;
            self.used[w] &= !bit;
            if fixed_k.is_none() {
                self.k = None;
            }
            match step {
                Step::Failed => {}
                other => return other,
            }
        }
        self.ecol[e] = 0;
        Step::Failed
    }
}

/// Maximum-cardinality order: start at a vertex of maximum degree, then
/// always take the vertex with the most already-ordered neighbors (ties by
/// degree, then id). Returns 0-based vertices.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], g.degree(v + 1), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for w in g.neighbors(next + 1) {
            weight[w - 1] += 1;
        }
    }
    order
}

/// A graph together with a total coloring of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub coloring: TotalColoring,
}

impl ColoredGraph {
    /// Checks that `coloring` is total on `graph`.
    pub fn new(graph: Graph, coloring: TotalColoring) -> Result<Self> {
        coloring.check_total(&graph)?;
        Ok(ColoredGraph { graph, coloring })
    }

    /// Document form:
    ///
    /// ```text
    /// colored-graph
    /// p 3
    /// q 2
    /// M 5
    /// vertex-colors 1 2 1
    /// edge 1 2 3
    /// edge 2 3 4
    /// end
    /// ```
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str("colored-graph\n");
        s.push_str(&format!("p {}\n", self.graph.order()));
        s.push_str(&format!("q {}\n", self.graph.size()));
        s.push_str(&format!("M {}\n", self.coloring.palette()));
        s.push_str(&format!(
            "vertex-colors {}\n",
            join(self.coloring.vertex_colors(), " ")
        ));
        for (e, c) in self.coloring.edge_colors() {
            s.push_str(&format!("edge {} {} {}\n", e.lo(), e.hi(), c));
        }
        s.push_str("end\n");
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        let doc = ColoredGraph::read(&mut lines)?;
        lines.expect_end()?;
        Ok(doc)
    }

    pub(crate) fn read(lines: &mut Lines<'_>) -> Result<Self> {
        lines.expect_line("colored-graph")?;
        let start = lines.line_no();
        let p: usize = lines.value("p")?;
        let q: usize = lines.value("q")?;
        let palette: u32 = lines.value("M")?;
        let (n, vertex_colors) = lines.values::<u32>("vertex-colors")?;
        if vertex_colors.len() != p {
            return Err(crate::error::parse_err(
                n,
                format!("expected {p} vertex colors, found {}", vertex_colors.len()),
            ));
        }
        let mut graph = Graph::empty(p).map_err(with_line(start))?;
        let mut edges = BTreeMap::new();
        for _ in 0..q {
            let (n, fields) = lines.values::<usize>("edge")?;
            let [u, v, c] = fields[..] else {
                return Err(crate::error::parse_err(n, "edge takes `u v color`"));
            };
            graph.add_edge(u, v).map_err(with_line(n))?;
            edges.insert(Edge::new(u, v), c as u32);
        }
        let end = lines.line_no();
        lines.expect_line("end")?;
        ColoredGraph::new(graph, TotalColoring::new(palette, vertex_colors, edges))
            .map_err(with_line(end))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2(a: u32, b: u32, e: u32, palette: u32) -> (Graph, TotalColoring) {
        (
            Graph::path(2),
            TotalColoring::from_triples(palette, vec![a, b], [(1, 2, e)]),
        )
    }

    #[test]
    fn properness() {
        let (g, f) = k2(1, 2, 3, 3);
        assert_eq!(is_proper_total(&g, &f), Ok(true));
        let (g, f) = k2(1, 2, 1, 3);
        assert_eq!(is_proper_total(&g, &f), Ok(false));
        let p3 = Graph::path(3);
        let f = TotalColoring::from_triples(3, vec![1, 2, 1], [(1, 2, 3), (2, 3, 3)]);
        assert_eq!(is_proper_total(&p3, &f), Ok(false));
    }

    #[test]
    fn uncolored_elements_are_errors() {
        let g = Graph::path(3);
        let f = TotalColoring::from_triples(5, vec![1, 2, 1], [(1, 2, 3)]);
        assert_eq!(
            is_proper_total(&g, &f),
            Err(Error::UncoloredEdge(Edge::new(2, 3)))
        );
        let f = TotalColoring::from_triples(5, vec![1, 2], [(1, 2, 3), (2, 3, 4)]);
        assert_eq!(is_proper_total(&g, &f), Err(Error::UncoloredVertex(3)));
        let f = TotalColoring::from_triples(3, vec![1, 2, 1], [(1, 2, 3), (2, 3, 4)]);
        assert!(matches!(
            is_proper_total(&g, &f),
            Err(Error::ColorOutOfRange { color: 4, palette: 3 })
        ));
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of_colors(1, 2, 3), 0);
        assert_eq!(weight_of_colors(1, 2, 4), 1);
        assert_eq!(weight_of_colors(5, 5, 2), 8);
    }

    #[test]
    fn bfdt_reports() {
        let (g, f) = k2(1, 2, 3, 3);
        let r = bfdt(&g, &f).unwrap();
        assert_eq!((r.bfdt, r.constant), (0, Some(0)));

        let p3 = Graph::path(3);
        let f = TotalColoring::from_triples(4, vec![1, 2, 1], [(1, 2, 3), (2, 3, 4)]);
        let r = bfdt(&p3, &f).unwrap();
        assert_eq!(r.weights.values().copied().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!((r.bfdt, r.constant), (1, None));

        let f = TotalColoring::from_triples(4, vec![1, 2, 1], [(1, 2, 3), (2, 3, 3)]);
        assert_eq!(bfdt(&p3, &f), Err(Error::NotProperTotal));
    }

    #[test]
    fn solver_small_cases() {
        let k2 = Graph::path(2);
        let f = find_fdt_coloring(&k2, 3).unwrap();
        assert_eq!(f.vertex_colors(), &[1, 2]);
        assert_eq!(f.edge(1, 2), Some(3));
        assert_eq!(bfdt(&k2, &f).unwrap().constant, Some(0));
        assert!(find_fdt_coloring(&k2, 2).is_none());
        assert_eq!(chi_fdt(&k2, 10).map(|(m, _)| m), Some(3));

        // Exhaustive search over all total colorings of C4 finds this
        // witness at five colors and none at four.
        let c4 = Graph::cycle(4);
        let w = TotalColoring::from_triples(5, vec![1, 4, 2, 5], [(1, 2, 2), (2, 3, 3), (3, 4, 4), (1, 4, 3)]);
        assert_eq!(bfdt(&c4, &w).unwrap().constant, Some(3));
        assert!(find_fdt_coloring(&c4, 4).is_none());
        assert_eq!(chi_fdt(&c4, 10).map(|(m, _)| m), Some(5));
    }

    #[test]
    fn solver_limits() {
        let g = Graph::complete_bipartite(3, 3);
        let limited = FdtSearch {
            node_limit: Some(10),
            ..FdtSearch::default()
        };
        assert_eq!(limited.find(&g, 8), SearchOutcome::Aborted);
        assert_eq!(limited.chi(&g, 9), ChiOutcome::Unknown { palette: 4 });
        assert_eq!(
            FdtSearch::unlimited().chi(&Graph::path(2), 2),
            ChiOutcome::NoneUpTo { budget: 2 }
        );
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::empty(3).unwrap();
        let (m, f) = chi_fdt(&g, 5).unwrap();
        assert_eq!(m, 1);
        assert_eq!(is_proper_total(&g, &f), Ok(true));
        assert_eq!(bfdt(&g, &f), Err(Error::NoEdges));
    }

    #[test]
    fn colored_graph_text() {
        let g = Graph::path(3);
        let f = TotalColoring::from_triples(5, vec![1, 2, 1], [(1, 2, 3), (2, 3, 4)]);
        let doc = ColoredGraph::new(g, f).unwrap();
        let text = doc.to_text();
        assert_eq!(
            text,
            "colored-graph\np 3\nq 2\nM 5\nvertex-colors 1 2 1\nedge 1 2 3\nedge 2 3 4\nend\n"
        );
        assert_eq!(ColoredGraph::from_text(&text).unwrap(), doc);
        assert!(ColoredGraph::from_text(&text.replace("M 5", "M 3")).is_err());
        assert!(ColoredGraph::from_text(&text.replace("edge 2 3 4\n", "")).is_err());
    }
}
