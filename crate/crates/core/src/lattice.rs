//! Star-graphic lattices: star decompositions of connected graphs, replay
//! of coinciding scripts, and membership tests for the uncolored,
//! hamiltonian, planar, spanning, Euler and colored lattices.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::coloring::{is_proper_total, ColoredGraph, TotalColoring};
use crate::degree::is_connected;
use crate::error::{parse_err, Error, Result};
use crate::graph::{Edge, Graph, Renumbering, Vertex};
use crate::hamilton::{find_hamilton_cycle, HamiltonCycle};
use crate::ice_flower::{ColoredIceFlowerSystem, IceFlowerSystem};
use crate::iso::{canonical_form, CanonicalForm};
use crate::leaf_ops::{colored_leaf_coincide, leaf_coincide, leaf_split, LeafEdge};
use crate::planar::is_planar;
use crate::textio::{join, parse_token, Lines};
use crate::vcolor::find_proper_vertex_coloring;

/// A leaf of one star instance: `instance` counts copies across the base in
/// order (all copies of base star 1 first), `leaf` indexes the star's
/// leaves. Both are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarLeaf {
    pub instance: usize,
    pub leaf: usize,
}

impl StarLeaf {
    pub fn new(instance: usize, leaf: usize) -> Self {
        StarLeaf { instance, leaf }
    }
}

/// `⊖ a_j K_{1,m_j}` with an explicit, replayable order of coincidings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincideScript {
    base: IceFlowerSystem,
    coefficients: Vec<usize>,
    steps: Vec<(StarLeaf, StarLeaf)>,
}

impl CoincideScript {
    pub fn new(
        base: IceFlowerSystem,
        coefficients: Vec<usize>,
        steps: Vec<(StarLeaf, StarLeaf)>,
    ) -> Result<Self> {
        if coefficients.len() != base.stars().len() {
            return Err(Error::InvalidScript(format!(
                "{} coefficients for {} base stars",
                coefficients.len(),
                base.stars().len()
            )));
        }
        if coefficients.iter().sum::<usize>() == 0 {
            return Err(Error::InvalidScript("coefficients sum to zero".into()));
        }
        let script = CoincideScript {
            base,
            coefficients,
            steps,
        };
        let sizes = script.instances();
        for s in script.steps.iter().flat_map(|(a, b)| [a, b]) {
            let Some(&m) = s.instance.checked_sub(1).and_then(|i| sizes.get(i)) else {
                return Err(Error::InvalidScript(format!("no star instance {}", s.instance)));
            };
            if !(1..=m).contains(&s.leaf) {
                return Err(Error::InvalidScript(format!(
                    "instance {} has no leaf {}",
                    s.instance, s.leaf
                )));
            }
        }
        Ok(script)
    }

    pub fn base(&self) -> &IceFlowerSystem {
        &self.base
    }

    pub fn coefficients(&self) -> &[usize] {
        &self.coefficients
    }

    pub fn steps(&self) -> &[(StarLeaf, StarLeaf)] {
        &self.steps
    }

    /// Leaf count of every star instance, in instance order.
    pub fn instances(&self) -> Vec<usize> {
        self.base
            .stars()
            .iter()
            .zip(&self.coefficients)
            .flat_map(|(s, &a)| std::iter::repeat_n(s.leaves(), a))
            .collect()
    }

    pub fn star_count(&self) -> usize {
        self.coefficients.iter().sum()
    }

    /// `Σ a_j m_j`, the edge count before any coinciding.
    pub fn total_leaves(&self) -> usize {
        self.instances().iter().sum()
    }

    /// ```text
    /// coincide-script
    /// base 2 3
    /// coefficients 0 4
    /// steps 1
    /// 1 1 2 1
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "coincide-script\nbase {}\ncoefficients {}\nsteps {}\n",
            join(&self.base.leaf_counts(), " "),
            join(&self.coefficients, " "),
            self.steps.len()
        );
        for (a, b) in &self.steps {
            out.push_str(&format!("{} {} {} {}\n", a.instance, a.leaf, b.instance, b.leaf));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        lines.expect_line("coincide-script")?;
        let (base_line, counts) = lines.values::<usize>("base")?;
        let base = IceFlowerSystem::new(&counts).map_err(|e| parse_err(base_line, e.to_string()))?;
        let (_, coefficients) = lines.values::<usize>("coefficients")?;
        let t: usize = lines.value("steps")?;
        let mut steps = Vec::with_capacity(t);
        for _ in 0..t {
            let (n, fields) = lines.fields()?;
            let [a, b, c, d] = fields[..] else {
                return Err(parse_err(n, "step takes `instance leaf instance leaf`"));
            };
            let parse = |s: &str| parse_token::<usize>(n, s);
            steps.push((
                StarLeaf::new(parse(a)?, parse(b)?),
                StarLeaf::new(parse(c)?, parse(d)?),
            ));
        }
        lines.expect_end()?;
        CoincideScript::new(base, coefficients, steps).map_err(|e| parse_err(base_line, e.to_string()))
    }
}

impl fmt::Display for CoincideScript {
    /// `a_1 K_{1,m_1} + ...` followed by the step count.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .base
            .stars()
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, &a)| a > 0)
            .map(|(s, a)| format!("{a} x {s}"))
            .collect();
        write!(f, "{} with {} coinciding steps", terms.join(" + "), self.steps.len())
    }
}

/// Disjoint stars being coincided step by step, with the original ids of
/// every instance tracked through the renumberings.
struct Replay {
    graph: Graph,
    coloring: Option<TotalColoring>,
    /// Original union id to current id.
    current: Vec<Option<Vertex>>,
    /// Original id of each instance's center.
    offsets: Vec<usize>,
    sizes: Vec<usize>,
}

impl Replay {
    fn new(sizes: &[usize]) -> Result<Self> {
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut edges = Vec::new();
        let mut next = 1;
        for &m in sizes {
            offsets.push(next);
            edges.extend((1..=m).map(|i| (next, next + i)));
            next += m + 1;
        }
        let graph = Graph::new(next - 1, edges).map_err(|_| Error::InvalidScript("no stars".into()))?;
        Ok(Replay {
            current: (1..=graph.order()).map(Some).collect(),
            graph,
            coloring: None,
            offsets,
            sizes: sizes.to_vec(),
        })
    }

    fn new_colored(stars: &[&ColoredGraph]) -> Result<Self> {
        let sizes: Vec<usize> = stars.iter().map(|s| s.graph.order() - 1).collect();
        let mut replay = Replay::new(&sizes)?;
        let palette = stars.iter().map(|s| s.coloring.palette()).max().unwrap_or(1);
        let mut f = TotalColoring::new(palette, vec![0; replay.graph.order()], Default::default());
        for (s, &offset) in stars.iter().zip(&replay.offsets) {
            for v in s.graph.vertices() {
                f.set_vertex(offset + v - 1, s.coloring.vertex(v).expect("total coloring"));
            }
            for (e, &c) in s.coloring.edge_colors() {
                f.set_edge(offset + e.lo() - 1, offset + e.hi() - 1, c);
            }
        }
        replay.coloring = Some(f);
        Ok(replay)
    }

    fn leaf_edge(&self, s: StarLeaf) -> Result<LeafEdge> {
        let offset = *s
            .instance
            .checked_sub(1)
            .and_then(|i| self.offsets.get(i))
            .ok_or_else(|| Error::InvalidScript(format!("no star instance {}", s.instance)))?;
        if !(1..=self.sizes[s.instance - 1]).contains(&s.leaf) {
            return Err(Error::InvalidScript(format!(
                "instance {} has no leaf {}",
                s.instance, s.leaf
            )));
        }
        let center = self.current[offset - 1].expect("centers are never deleted");
        let leaf = self.current[offset + s.leaf - 1].ok_or_else(|| {
            Error::InvalidScript(format!("leaf {} of instance {} is already used", s.leaf, s.instance))
        })?;
        Ok(LeafEdge::new(center, leaf))
    }

    fn step(&mut self, a: StarLeaf, b: StarLeaf) -> Result<()> {
        let (e1, e2) = (self.leaf_edge(a)?, self.leaf_edge(b)?);
        let renumbering = match &self.coloring {
            Some(f) => {
                let (merged, psi) = colored_leaf_coincide(&self.graph, f, e1, e2)?;
                self.coloring = Some(psi);
                self.graph = merged.graph;
                merged.renumbering
            }
            None => {
                let merged = leaf_coincide(&self.graph, e1, e2)?;
                self.graph = merged.graph;
                merged.renumbering
            }
        };
        self.track(&renumbering);
        Ok(())
    }

    fn track(&mut self, r: &Renumbering) {
        for slot in &mut self.current {
            *slot = slot.and_then(|v| r.get(v));
        }
    }

    fn center(&self, instance: usize) -> Vertex {
        self.current[self.offsets[instance] - 1].expect("centers are never deleted")
    }
}

/// Replays the script from the disjoint union of its star instances.
pub fn recompose(s: &CoincideScript) -> Result<Graph> {
    let mut replay = Replay::new(&s.instances())?;
    for &(a, b) in &s.steps {
        replay.step(a, b)?;
    }
    Ok(replay.graph)
}

/// Colored replay: instance `i` copies the colored base star it belongs to,
/// and each step is a colored coinciding.
pub fn recompose_colored(s: &CoincideScript, base: &ColoredIceFlowerSystem) -> Result<(Graph, TotalColoring)> {
    if base.uncolored() != s.base {
        return Err(Error::InvalidScript("colored base does not match the script".into()));
    }
    let stars: Vec<&ColoredGraph> = base
        .stars()
        .iter()
        .zip(&s.coefficients)
        .flat_map(|(star, &a)| std::iter::repeat_n(star, a))
        .collect();
    let mut replay = Replay::new_colored(&stars)?;
    for &(a, b) in &s.steps {
        replay.step(a, b)?;
    }
    let f = replay.coloring.expect("colored replay");
    Ok((replay.graph, f))
}

fn non_leaf_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) >= 2).collect()
}

/// Builds the script of `g` over `base`, where `star_of(w)` picks the base
/// index for non-leaf vertex `w` and `leaf_of(w, u)` the leaf of that star
/// facing neighbor `u`.
fn script_from(
    g: &Graph,
    base: IceFlowerSystem,
    star_of: impl Fn(Vertex) -> usize,
    leaf_of: impl Fn(Vertex, Vertex) -> usize,
) -> CoincideScript {
    let inner = non_leaf_vertices(g);
    let mut coefficients = vec![0; base.stars().len()];
    for &w in &inner {
        coefficients[star_of(w)] += 1;
    }
    let mut by_instance: Vec<Vertex> = inner.clone();
    by_instance.sort_by_key(|&w| (star_of(w), w));
    let mut instance = vec![0; g.order() + 1];
    for (i, &w) in by_instance.iter().enumerate() {
        instance[w] = i + 1;
    }
    // Peel non-leaf vertices by ascending id; each edge between two of them
    // is recorded once, from its lower end.
    let mut steps = Vec::new();
    for &w in &inner {
        for u in g.neighbors(w).filter(|&u| u > w && g.degree(u) >= 2) {
            steps.push((
                StarLeaf::new(instance[w], leaf_of(w, u)),
                StarLeaf::new(instance[u], leaf_of(u, w)),
            ));
        }
    }
    CoincideScript::new(base, coefficients, steps).expect("script built from a graph is valid")
}

fn neighbor_rank(g: &Graph, w: Vertex, u: Vertex) -> usize {
    g.neighbors(w).position(|x| x == u).expect("u is a neighbor of w") + 1
}

fn check_decomposable(g: &Graph) -> Result<()> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.max_degree() < 2 {
        return Err(Error::NoNonLeafVertex);
    }
    Ok(())
}

/// One `K_{1,deg(w)}` per non-leaf vertex `w`; the base lists the distinct
/// non-leaf degrees in ascending order.
pub fn decompose_to_stars(g: &Graph) -> Result<CoincideScript> {
    check_decomposable(g)?;
    let degrees: Vec<usize> = non_leaf_vertices(g)
        .iter()
        .map(|&w| g.degree(w))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let base = IceFlowerSystem::new(&degrees)?;
    Ok(script_from(
        g,
        base,
        |w| degrees.binary_search(&g.degree(w)).expect("degree listed"),
        |w, u| neighbor_rank(g, w, u),
    ))
}

/// A script over `base` when every non-leaf degree of `g` is available.
pub fn uncolored_lattice_member(g: &Graph, base: &IceFlowerSystem) -> Option<CoincideScript> {
    check_decomposable(g).ok()?;
    let counts = base.leaf_counts();
    let star_of = |w: Vertex| counts.iter().position(|&m| m == g.degree(w));
    if non_leaf_vertices(g).iter().any(|&w| star_of(w).is_none()) {
        return None;
    }
    Some(script_from(
        g,
        base.clone(),
        |w| star_of(w).expect("checked above"),
        |w, u| neighbor_rank(g, w, u),
    ))
}

/// The Lemma-style script, for connected graphs whose degrees are all even.
pub fn euler_expression(g: &Graph) -> Option<CoincideScript> {
    if g.degrees().iter().any(|d| d % 2 == 1) {
        return None;
    }
    decompose_to_stars(g).ok()
}

/// A cycle `x_1 .. x_n` with pendant leaves hanging on its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HairedCycle {
    pub graph: Graph,
    pub spine: Vec<Vertex>,
    /// `pendants[i]` are the leaves on `spine[i]`.
    pub pendants: Vec<Vec<Vertex>>,
}

impl HairedCycle {
    pub fn pendant_count(&self) -> usize {
        self.pendants.iter().map(Vec::len).sum()
    }

    /// Checks that removing the pendants leaves exactly the spine cycle.
    pub fn is_valid(&self) -> bool {
        let n = self.spine.len();
        if n < 3 || self.pendants.len() != n {
            return false;
        }
        let cycle = (0..n).all(|i| self.graph.has_edge(self.spine[i], self.spine[(i + 1) % n]));
        let hair = self.spine.iter().zip(&self.pendants).all(|(&x, ps)| {
            ps.iter().all(|&l| self.graph.degree(l) == 1 && self.graph.has_edge(x, l))
        });
        let accounted = n + self.pendant_count() == self.graph.order() && n + self.pendant_count() == self.graph.size();
        cycle && hair && accounted
    }
}

/// Chains `K_{1,m_i}` along the path `x_1 .. x_n` (last leaf of star `i`
/// with first leaf of star `i + 1`), then closes `x_n x_1`.
pub fn build_haired_cycle(degrees: &[usize]) -> Result<HairedCycle> {
    let n = degrees.len();
    if n < 3 {
        return Err(Error::SpineTooShort(n));
    }
    let system = IceFlowerSystem::new(degrees)?;
    let sizes = system.leaf_counts();
    let mut replay = Replay::new(&sizes)?;
    for i in 1..n {
        replay.step(StarLeaf::new(i, sizes[i - 1]), StarLeaf::new(i + 1, 1))?;
    }
    replay.step(StarLeaf::new(n, sizes[n - 1]), StarLeaf::new(1, 1))?;
    let spine: Vec<Vertex> = (0..n).map(|i| replay.center(i)).collect();
    let pendants = (0..n)
        .map(|i| {
            (2..sizes[i])
                .map(|leaf| replay.current[replay.offsets[i] + leaf - 1].expect("pendant kept"))
                .collect()
        })
        .collect();
    let haired = HairedCycle {
        graph: replay.graph,
        spine,
        pendants,
    };
    debug_assert!(haired.is_valid());
    Ok(haired)
}

/// Simple graphs on the spine positions with degree `need[i]` avoiding the
/// cycle edges, each as a list of position pairs.
fn extra_edge_sets(n: usize, need: &mut [usize]) -> Vec<Vec<(usize, usize)>> {
    fn cycle_edge(n: usize, i: usize, j: usize) -> bool {
        (i + 1) % n == j || (j + 1) % n == i
    }
    fn rec(
        n: usize,
        need: &mut [usize],
        chosen: &mut Vec<(usize, usize)>,
        all: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(i) = need.iter().position(|&r| r > 0) else {
            all.push(chosen.clone());
            return;
        };
        let candidates: Vec<usize> = (i + 1..n)
            .filter(|&j| need[j] > 0 && !cycle_edge(n, i, j))
            .collect();
        let r = need[i];
        if candidates.len() < r {
            return;
        }
        need[i] = 0;
        combinations(&candidates, r, &mut |partners| {
            for &j in partners {
                need[j] -= 1;
                chosen.push((i, j));
            }
            rec(n, need, chosen, all);
            for &j in partners {
                need[j] += 1;
                chosen.pop();
            }
        });
        need[i] = r;
    }
    let mut all = Vec::new();
    rec(n, need, &mut Vec::new(), &mut all);
    all
}

fn combinations(items: &[usize], r: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], r: usize, start: usize, picked: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if picked.len() == r {
            f(picked);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - picked.len() {
                break;
            }
            picked.push(items[i]);
            go(items, r, i + 1, picked, f);
            picked.pop();
        }
    }
    go(items, r, 0, &mut Vec::with_capacity(r), f);
}

/// Every graph obtained by coinciding all pendant leaves of `t` in pairs
/// without creating multi-edges, one per isomorphism class, ordered by
/// canonical form.
///
/// Pendants on one spine vertex are interchangeable, so a pairing is
/// determined by the simple graph of extra edges it adds between spine
/// vertices; all such graphs are enumerated and realized by actual
/// coinciding steps.
pub fn close_to_hamiltonian(t: &HairedCycle) -> Result<Vec<Graph>> {
    let total = t.pendant_count();
    if total % 2 == 1 {
        return Err(Error::OddPendantCount(total));
    }
    let n = t.spine.len();
    let mut need: Vec<usize> = t.pendants.iter().map(Vec::len).collect();
    let sets = extra_edge_sets(n, &mut need);
    if sets.is_empty() {
        return Err(Error::NoValidPairing);
    }
    let mut closed: Vec<(CanonicalForm, Graph)> = sets
        .par_iter()
        .map(|set| {
            let g = close_with(t, set).expect("extra edges avoid existing ones");
            (canonical_form(&g), g)
        })
        .collect();
    closed.sort_by(|a, b| a.0.cmp(&b.0));
    closed.dedup_by(|a, b| a.0 == b.0);
    Ok(closed.into_iter().map(|(_, g)| g).collect())
}

fn close_with(t: &HairedCycle, set: &[(usize, usize)]) -> Result<Graph> {
    let mut g = t.graph.clone();
    let mut current: Vec<Option<Vertex>> = (1..=g.order()).map(Some).collect();
    let mut next_pendant = vec![0; t.spine.len()];
    let mut take = |i: usize, current: &[Option<Vertex>]| {
        let leaf = t.pendants[i][next_pendant[i]];
        next_pendant[i] += 1;
        LeafEdge::new(
            current[t.spine[i] - 1].expect("spine kept"),
            current[leaf - 1].expect("pendant unused"),
        )
    };
    for &(i, j) in set {
        let e1 = take(i, &current);
        let e2 = take(j, &current);
        let merged = leaf_coincide(&g, e1, e2)?;
        for slot in &mut current {
            *slot = slot.and_then(|v| merged.renumbering.get(v));
        }
        g = merged.graph;
    }
    Ok(g)
}

/// A Hamilton cycle of the graph and the haired cycle obtained by
/// leaf-splitting every edge off that cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonWitness {
    pub cycle: HamiltonCycle,
    pub haired: HairedCycle,
}

/// Some when `g` is connected, has minimum degree 2, and is hamiltonian.
pub fn hamiltonian_lattice_member(g: &Graph) -> Option<HamiltonWitness> {
    if !is_connected(g) || g.min_degree() < 2 {
        return None;
    }
    let cycle = find_hamilton_cycle(g)?;
    let on_cycle: BTreeSet<Edge> = cycle.edges().map(|(u, v)| Edge::new(u, v)).collect();
    let mut h = g.clone();
    let spine = cycle.vertices().to_vec();
    let mut pendants = vec![Vec::new(); spine.len()];
    let position = |v: Vertex| spine.iter().position(|&x| x == v).expect("spanning cycle");
    for e in g.edges().filter(|e| !on_cycle.contains(e)) {
        let split = leaf_split(&h, e.lo(), e.hi()).expect("cycle keeps degrees at least 2");
        pendants[position(e.lo())].push(split.leaf_of_u.leaf);
        pendants[position(e.hi())].push(split.leaf_of_v.leaf);
        h = split.graph;
    }
    let haired = HairedCycle {
        graph: h,
        spine,
        pendants,
    };
    debug_assert!(haired.is_valid());
    Some(HamiltonWitness { cycle, haired })
}

/// A proper vertex coloring from `[1, 4]` when `g` is connected, planar and
/// leafless (and has at least one edge).
pub fn planar_lattice_member(g: &Graph) -> Option<Vec<u32>> {
    if g.size() == 0 || g.min_degree() < 2 || !is_connected(g) || !is_planar(g) {
        return None;
    }
    find_proper_vertex_coloring(g, 4)
}

/// Decodes a Prüfer sequence over `[1, m]` of length `m - 2`.
pub fn prufer_decode(m: usize, code: &[usize]) -> Result<Graph> {
    if m < 2 {
        return Err(Error::OrderTooSmall { order: m, min: 2 });
    }
    if code.len() != m - 2 || code.iter().any(|&c| !(1..=m).contains(&c)) {
        return Err(Error::InvalidScript(format!("not a Prüfer sequence for {m} vertices")));
    }
    let mut degree = vec![1; m + 1];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (1..=m).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(m - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let u = leaves.pop_first().expect("two vertices remain");
    let v = leaves.pop_first().expect("two vertices remain");
    edges.push((u, v));
    Graph::new(m, edges)
}

/// The Prüfer sequence of a labeled tree, or `None` if `g` is not a tree.
pub fn prufer_code(g: &Graph) -> Option<Vec<usize>> {
    if g.order() < 2 || !crate::degree::is_tree(g) {
        return None;
    }
    let mut h = g.clone();
    let mut alive: BTreeSet<Vertex> = g.vertices().collect();
    let mut code = Vec::with_capacity(g.order() - 2);
    while alive.len() > 2 {
        let leaf = *alive.iter().find(|&&v| h.degree(v) == 1)?;
        let support = h.neighbors(leaf).next()?;
        code.push(support);
        h.remove_edge(leaf, support).ok()?;
        alive.remove(&leaf);
    }
    Some(code)
}

/// All labeled trees on `m` vertices in Prüfer order, each with the rainbow
/// coloring `f(v) = v`.
pub fn spanning_lattice_enumerate(m: usize) -> Result<Vec<(Graph, Vec<u32>)>> {
    if m < 2 {
        return Err(Error::OrderTooSmall { order: m, min: 2 });
    }
    let len = m - 2;
    let total = u64::try_from(m)
        .ok()
        .and_then(|b| b.checked_pow(u32::try_from(len).ok()?))
        .ok_or_else(|| Error::TooLarge(format!("the tree set on {m} vertices")))?;
    let rainbow: Vec<u32> = (1..=m as u32).collect();
    let trees = (0..total)
        .into_par_iter()
        .map(|mut index| {
            let mut code = vec![0; len];
            for slot in code.iter_mut().rev() {
                *slot = (index % m as u64) as usize + 1;
                index /= m as u64;
            }
            let tree = prufer_decode(m, &code).expect("every sequence decodes");
            (tree, rainbow.clone())
        })
        .collect();
    Ok(trees)
}

/// `m^(m-2)`.
pub fn spanning_lattice_count(m: usize) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::OrderTooSmall { order: m, min: 2 });
    }
    Ok(BigUint::from(m).pow(u32::try_from(m - 2).expect("order fits in u32")))
}

/// Colored leaf-splits every edge of `g` between non-leaf vertices and
/// matches each resulting colored star against `base` under a
/// color-preserving isomorphism (same center color, same multiset of
/// (leaf color, edge color) pairs). The returned script replays with
/// [`recompose_colored`].
pub fn colored_lattice_member(
    g: &Graph,
    f: &TotalColoring,
    base: &ColoredIceFlowerSystem,
) -> Result<Option<CoincideScript>> {
    if !is_proper_total(g, f)? {
        return Err(Error::NotProperTotal);
    }
    if check_decomposable(g).is_err() {
        return Ok(None);
    }
    let vc = |v: Vertex| f.vertex(v).expect("total coloring");
    let signature = |star: &ColoredGraph| -> (u32, Vec<(u32, u32)>) {
        let mut leaves: Vec<(u32, u32)> = (2..=star.graph.order())
            .map(|l| {
                (
                    star.coloring.vertex(l).expect("total coloring"),
                    star.coloring.edge(1, l).expect("total coloring"),
                )
            })
            .collect();
        leaves.sort_unstable();
        (star.coloring.vertex(1).expect("total coloring"), leaves)
    };
    let base_signatures: Vec<_> = base.stars().iter().map(signature).collect();
    let inner = non_leaf_vertices(g);
    let mut star_of = vec![0; g.order() + 1];
    for &w in &inner {
        let mut leaves: Vec<(u32, u32)> = g
            .neighbors(w)
            .map(|u| (vc(u), f.edge(w, u).expect("total coloring")))
            .collect();
        leaves.sort_unstable();
        let sig = (vc(w), leaves);
        match base_signatures.iter().position(|b| *b == sig) {
            Some(j) => star_of[w] = j,
            None => return Ok(None),
        }
    }
    // Edge colors around a center are distinct, so the edge color names the
    // base leaf facing each neighbor.
    let leaf_of = |w: Vertex, u: Vertex| {
        let star = &base.stars()[star_of[w]];
        let c = f.edge(w, u).expect("total coloring");
        (2..=star.graph.order())
            .position(|l| star.coloring.edge(1, l) == Some(c))
            .expect("signature matched")
            + 1
    };
    Ok(Some(script_from(g, base.uncolored(), |w| star_of[w], leaf_of)))
}
