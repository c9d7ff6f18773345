//! Ice-flower systems: ordered collections of stars, optionally colored,
//! and the coinciding algebra between them.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::coloring::{bfdt, is_proper_total, ColoredGraph, TotalColoring};
use crate::degree::{is_connected, is_delta_saturated};
use crate::error::{parse_err, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::leaf_ops::{colored_leaf_coincide, leaf_coincide_across, leaf_edges, LeafEdge};
use crate::textio::{with_line, Lines};

/// The star `K_{1,m}`: center 1, leaves `2..=m+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Star {
    m: usize,
}

impl Star {
    pub fn leaves(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> Graph {
        Graph::star(self.m)
    }

    /// The leaf-edge to leaf `index` (1-based).
    pub fn leaf_edge(&self, index: usize) -> LeafEdge {
        LeafEdge::new(1, index + 1)
    }
}

impl fmt::Display for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{{1,{}}}", self.m)
    }
}

pub fn make_star(m: usize) -> Result<Star> {
    if m < 2 {
        return Err(Error::StarTooSmall(m));
    }
    Ok(Star { m })
}

/// Deletes the first leaf of each star and joins the centers.
pub fn star_coincide(a: Star, b: Star) -> Graph {
    leaf_coincide_across(&a.graph(), a.leaf_edge(1), &b.graph(), b.leaf_edge(1))
        .expect("canonical stars with at least two leaves always coincide")
        .graph
}

/// An ordered, non-empty list of stars with at least two leaves each.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IceFlowerSystem {
    stars: Vec<Star>,
}

impl IceFlowerSystem {
    pub fn new(leaf_counts: &[usize]) -> Result<Self> {
        if leaf_counts.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let stars = leaf_counts
            .iter()
            .map(|&m| make_star(m))
            .collect::<Result<_>>()?;
        Ok(IceFlowerSystem { stars })
    }

    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    pub fn leaf_counts(&self) -> Vec<usize> {
        self.stars.iter().map(Star::leaves).collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.stars.windows(2).all(|w| w[0] == w[1])
    }
}

/// Colored stars in canonical layout, each with a proper total coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredIceFlowerSystem {
    stars: Vec<ColoredGraph>,
    fdt_constant: Option<u32>,
}

impl ColoredIceFlowerSystem {
    /// Every member must be a canonical star with a proper total coloring;
    /// with `fdt_constant` set, every edge weight must equal it.
    pub fn new(stars: Vec<ColoredGraph>, fdt_constant: Option<u32>) -> Result<Self> {
        if stars.is_empty() {
            return Err(Error::EmptyBasis);
        }
        for s in &stars {
            let m = s.graph.order() - 1;
            make_star(m)?;
            if s.graph != Graph::star(m) {
                return Err(Error::InvalidUniformParameters(
                    "system members must be stars with center 1".into(),
                ));
            }
            if !is_proper_total(&s.graph, &s.coloring)? {
                return Err(Error::NotProperTotal);
            }
            if let Some(k) = fdt_constant {
                if bfdt(&s.graph, &s.coloring)?.constant != Some(k) {
                    return Err(Error::InvalidUniformParameters(format!(
                        "a star has edge weights other than {k}"
                    )));
                }
            }
        }
        Ok(ColoredIceFlowerSystem {
            stars,
            fdt_constant,
        })
    }

    pub fn stars(&self) -> &[ColoredGraph] {
        &self.stars
    }

    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    pub fn fdt_constant(&self) -> Option<u32> {
        self.fdt_constant
    }

    pub fn uncolored(&self) -> IceFlowerSystem {
        let counts: Vec<usize> = self.stars.iter().map(|s| s.graph.order() - 1).collect();
        IceFlowerSystem::new(&counts).expect("validated on construction")
    }

    pub fn is_uniform(&self) -> bool {
        self.uncolored().is_uniform()
    }

    /// ```text
    /// ice-flower-system
    /// n 3
    /// uniform yes
    /// k 0
    /// colored-graph
    /// ...
    /// end
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "ice-flower-system\nn {}\nuniform {}\nk {}\n",
            self.stars.len(),
            if self.is_uniform() { "yes" } else { "no" },
            self.fdt_constant
                .map_or_else(|| "none".to_string(), |k| k.to_string()),
        );
        for s in &self.stars {
            out.push_str(&s.to_text());
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        lines.expect_line("ice-flower-system")?;
        let n: usize = lines.value("n")?;
        let uniform_line = lines.line_no();
        let uniform = match lines.value::<String>("uniform")?.as_str() {
            "yes" => true,
            "no" => false,
            other => return Err(parse_err(uniform_line, format!("invalid uniform flag `{other}`"))),
        };
        let k_line = lines.line_no();
        let k = match lines.value::<String>("k")?.as_str() {
            "none" => None,
            v => Some(
                v.parse()
                    .map_err(|_| parse_err(k_line, format!("invalid constant `{v}`")))?,
            ),
        };
        let mut stars = Vec::with_capacity(n);
        for _ in 0..n {
            stars.push(ColoredGraph::read(&mut lines)?);
        }
        lines.expect_end()?;
        let system = ColoredIceFlowerSystem::new(stars, k).map_err(with_line(1))?;
        if system.is_uniform() != uniform {
            return Err(parse_err(uniform_line, "uniform flag disagrees with the stars"));
        }
        Ok(system)
    }
}

fn union_of(a: &ColoredGraph, b: &ColoredGraph) -> (Graph, TotalColoring) {
    let g = a.graph.disjoint_union(&b.graph);
    let mut f = a.coloring.clone();
    f.set_palette(a.coloring.palette().max(b.coloring.palette()));
    let shift = a.graph.order();
    for v in b.graph.vertices() {
        f.set_vertex(v + shift, b.coloring.vertex(v).expect("total coloring"));
    }
    for (e, &c) in b.coloring.edge_colors() {
        f.set_edge(e.lo() + shift, e.hi() + shift, c);
    }
    (g, f)
}

fn pair_coincidable(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    let (g, f) = union_of(a, b);
    let shift = a.graph.order();
    (2..=a.graph.order()).any(|la| {
        (2..=b.graph.order()).any(|lb| {
            colored_leaf_coincide(&g, &f, LeafEdge::new(1, la), LeafEdge::new(1 + shift, lb + shift))
                .is_ok()
        })
    })
}

/// Every pair of distinct stars has a compatible pair of leaf-edges whose
/// coinciding stays proper. Compatibility is symmetric, so unordered pairs
/// are enough; a single star is vacuously strong.
pub fn is_strongly_colored(s: &ColoredIceFlowerSystem) -> bool {
    let n = s.stars.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .all(|&(i, j)| pair_coincidable(&s.stars[i], &s.stars[j]))
}

/// `n` stars `K_{1,n-1}`: star `j` has center color `j`, leaves colored
/// `[1,n] \ {j}` in ascending order, and the edge to the leaf colored `l`
/// colored `j + l - k`.
pub fn build_uniform_fdt_system(n: usize, k: u32) -> Result<ColoredIceFlowerSystem> {
    if n < 3 {
        return Err(Error::InvalidUniformParameters(format!("need n >= 3, got {n}")));
    }
    let n32 = u32::try_from(n)
        .map_err(|_| Error::InvalidUniformParameters(format!("n = {n} is too large")))?;
    let mut stars = Vec::with_capacity(n);
    for j in 1..=n32 {
        let leaves: Vec<u32> = (1..=n32).filter(|&l| l != j).collect();
        let mut vertex = vec![j];
        vertex.extend(&leaves);
        let mut edges = Vec::with_capacity(leaves.len());
        for (i, &l) in leaves.iter().enumerate() {
            let c = (j + l)
                .checked_sub(k)
                .filter(|&c| c >= 1)
                .ok_or_else(|| {
                    Error::InvalidUniformParameters(format!("edge color {j}+{l}-{k} is below 1"))
                })?;
            if c == j || c == l {
                return Err(Error::InvalidUniformParameters(format!(
                    "edge color {c} repeats an endpoint color (center {j}, leaf {l})"
                )));
            }
            edges.push((1, i + 2, c));
        }
        let palette = edges.iter().map(|e| e.2).chain(vertex.iter().copied()).max().unwrap_or(1);
        let coloring = TotalColoring::from_triples(palette, vertex, edges);
        stars.push(ColoredGraph::new(Graph::star(n - 1), coloring)?);
    }
    ColoredIceFlowerSystem::new(stars, Some(k))
}

/// Result of [`saturate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub graph: Graph,
    pub coloring: TotalColoring,
    /// Coinciding steps applied.
    pub steps: usize,
    /// Connected and every degree is 1 or Δ.
    pub saturated: bool,
}

/// Takes `copies[j]` copies of star `j` and greedily coincides compatible
/// leaf-edges across components until the graph is connected. Candidates are
/// ordered by (instance of the support, leaf color); the first pair whose
/// colored coinciding succeeds is applied.
pub fn saturate(s: &ColoredIceFlowerSystem, copies: &[usize]) -> Result<Saturation> {
    if copies.len() != s.stars.len() {
        return Err(Error::InvalidUniformParameters(format!(
            "{} multiplicities for {} stars",
            copies.len(),
            s.stars.len()
        )));
    }
    let instances: Vec<&ColoredGraph> = s
        .stars
        .iter()
        .zip(copies)
        .flat_map(|(star, &c)| std::iter::repeat_n(star, c))
        .collect();
    let Some((first, rest)) = instances.split_first() else {
        return Err(Error::EmptyBasis);
    };
    let mut current: ColoredGraph = (*first).clone();
    let mut instance_of: Vec<usize> = vec![0; first.graph.order()];
    for (idx, star) in rest.iter().enumerate() {
        let (g, f) = union_of(&current, star);
        current = ColoredGraph {
            graph: g,
            coloring: f,
        };
        instance_of.extend(std::iter::repeat_n(idx + 1, star.graph.order()));
    }

    let mut steps = 0;
    'outer: while !is_connected(&current.graph) {
        let component = component_ids(&current.graph);
        let mut candidates: Vec<(usize, u32, LeafEdge)> = leaf_edges(&current.graph)
            .into_iter()
            .map(|e| {
                let color = current.coloring.vertex(e.leaf).expect("total coloring");
                (instance_of[e.support - 1], color, e)
            })
            .collect();
        candidates.sort_unstable();
        for (i, &(_, _, e1)) in candidates.iter().enumerate() {
            for &(_, _, e2) in &candidates[i + 1..] {
                if component[e1.support - 1] == component[e2.support - 1] {
                    continue;
                }
                if let Ok((merged, psi)) =
                    colored_leaf_coincide(&current.graph, &current.coloring, e1, e2)
                {
                    let mut next_instance = vec![0; merged.graph.order()];
                    for (old, &inst) in instance_of.iter().enumerate() {
                        if let Some(v) = merged.renumbering.get(old + 1) {
                            next_instance[v - 1] = inst;
                        }
                    }
                    instance_of = next_instance;
                    current = ColoredGraph {
                        graph: merged.graph,
                        coloring: psi,
                    };
                    steps += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    let saturated = is_connected(&current.graph) && is_delta_saturated(&current.graph);
    Ok(Saturation {
        graph: current.graph,
        coloring: current.coloring,
        steps,
        saturated,
    })
}

fn component_ids(g: &Graph) -> Vec<usize> {
    let mut id = vec![0; g.order()];
    for (i, comp) in g.components().iter().enumerate() {
        for &v in comp {
            id[v - 1] = i;
        }
    }
    id
}

/// Colors carried by the leaves of a colored star.
pub fn leaf_colors(s: &ColoredGraph) -> BTreeSet<u32> {
    (2..=s.graph.order())
        .filter_map(|v: Vertex| s.coloring.vertex(v))
        .collect()
}
