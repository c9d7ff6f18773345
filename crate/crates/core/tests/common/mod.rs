//! Independent oracles and random generators shared by the integration tests.
//! Nothing here calls into the algorithms under test beyond `Graph` basics.

#![allow(dead_code)]

use std::collections::BTreeSet;

use iceflower::{Graph, TotalColoring, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi G(p, prob).
pub fn random_graph(rng: &mut impl Rng, p: usize, prob: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=p {
        for v in u + 1..=p {
            if rng.random_bool(prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(p, edges).unwrap()
}

/// Uniform labeled tree from a random Prüfer sequence, decoded here.
pub fn random_tree(rng: &mut impl Rng, p: usize) -> Graph {
    if p <= 2 {
        return Graph::path(p);
    }
    let code: Vec<usize> = (0..p - 2).map(|_| rng.random_range(1..=p)).collect();
    tree_from_code(p, &code)
}

pub fn tree_from_code(p: usize, code: &[usize]) -> Graph {
    let mut degree = vec![1usize; p + 1];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (1..=p).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (1..=p).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(p, edges).unwrap()
}

/// Random tree plus random extra edges: connected by construction.
pub fn random_connected_graph(rng: &mut impl Rng, p: usize, extra: f64) -> Graph {
    let mut g = random_tree(rng, p);
    for u in 1..=p {
        for v in u + 1..=p {
            if !g.has_edge(u, v) && rng.random_bool(extra) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn is_connected_bfs(g: &Graph) -> bool {
    if g.order() == 0 {
        return true;
    }
    let mut seen = vec![false; g.order() + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// Havel–Hakimi test.
pub fn havel_hakimi(d: &[usize]) -> bool {
    let mut d: Vec<usize> = d.to_vec();
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        while d.last() == Some(&0) {
            d.pop();
        }
        let Some(&first) = d.first() else {
            return true;
        };
        d.remove(0);
        if first > d.len() {
            return false;
        }
        for x in d.iter_mut().take(first) {
            if *x == 0 {
                return false;
            }
            *x -= 1;
        }
    }
}

/// Calls `f` on every permutation of `items` (Heap's algorithm).
pub fn for_each_permutation<T: Clone>(items: &[T], mut f: impl FnMut(&[T]) -> bool) -> bool {
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    if f(&a) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            if f(&a) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Hamiltonicity by trying every ordering of vertices 2..p after vertex 1.
pub fn brute_hamiltonian(g: &Graph) -> bool {
    let p = g.order();
    if p < 3 {
        return false;
    }
    let rest: Vec<Vertex> = (2..=p).collect();
    for_each_permutation(&rest, |perm| {
        g.has_edge(1, perm[0])
            && g.has_edge(perm[p - 2], 1)
            && perm.windows(2).all(|w| g.has_edge(w[0], w[1]))
    })
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let ids: Vec<Vertex> = (1..=g.order()).collect();
    for_each_permutation(&ids, |perm| g.edges().all(|e| h.has_edge(perm[e.lo() - 1], perm[e.hi() - 1])))
}

fn subsets(p: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, p: usize, k: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=p {
            cur.push(v);
            go(v + 1, p, k, cur, out);
            cur.pop();
        }
    }
    go(1, p, k, &mut cur, &mut out);
    out
}

/// Kuratowski test for graphs on at most 6 vertices. A subdivision of K5 or
/// K3,3 on at most 6 vertices is one of: K5 on 5 vertices, K5 with one edge
/// subdivided (6 vertices), or K3,3 as a subgraph.
pub fn kuratowski_nonplanar_small(g: &Graph) -> bool {
    let p = g.order();
    assert!(p <= 6, "oracle limited to 6 vertices");
    let complete_on = |s: &[Vertex], skip: Option<(Vertex, Vertex)>| {
        s.iter().enumerate().all(|(i, &a)| {
            s[i + 1..].iter().all(|&b| {
                skip == Some((a, b)) || skip == Some((b, a)) || g.has_edge(a, b)
            })
        })
    };
    for s in subsets(p, 5) {
        if complete_on(&s, None) {
            return true;
        }
    }
    if p == 6 {
        for sub in 1..=6 {
            let branch: Vec<Vertex> = (1..=6).filter(|&v| v != sub).collect();
            let nbrs: Vec<Vertex> = g.neighbors(sub).collect();
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if complete_on(&branch, Some((a, b))) {
                        return true;
                    }
                }
            }
        }
        for side in subsets(6, 3) {
            if !side.contains(&1) {
                continue;
            }
            let other: Vec<Vertex> = (1..=6).filter(|v| !side.contains(v)).collect();
            if side.iter().all(|&a| other.iter().all(|&b| g.has_edge(a, b))) {
                return true;
            }
        }
    }
    false
}

/// Planar by construction: stacked triangulation (each new vertex joins the
/// corners of a random face), then random edge deletions that keep minimum
/// degree 2 and connectivity.
pub fn random_leafless_planar(rng: &mut impl Rng, p: usize) -> Graph {
    assert!(p >= 3);
    let mut g = Graph::cycle(3);
    let mut faces: Vec<[Vertex; 3]> = vec![[1, 2, 3], [1, 2, 3]];
    while g.order() < p {
        let i = rng.random_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        let v = g.add_vertex();
        for x in [a, b, c] {
            g.add_edge(v, x).unwrap();
        }
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().map(|e| (e.lo(), e.hi())).collect();
    edges.shuffle(rng);
    for (u, v) in edges {
        if rng.random_bool(0.4) && g.degree(u) > 2 && g.degree(v) > 2 {
            g.remove_edge(u, v).unwrap();
            if !is_connected_bfs(&g) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Proper total coloring check written out from the definition.
pub fn proper_total(g: &Graph, f: &TotalColoring, palette: u32) -> bool {
    let in_range = |c: Option<u32>| matches!(c, Some(c) if (1..=palette).contains(&c));
    for v in g.vertices() {
        if !in_range(f.vertex(v)) {
            return false;
        }
        let around: Vec<u32> = g.neighbors(v).map(|w| f.edge(v, w).unwrap_or(0)).collect();
        let distinct: BTreeSet<u32> = around.iter().copied().collect();
        if distinct.len() != around.len() {
            return false;
        }
    }
    g.edges().all(|e| {
        let c = f.edge(e.lo(), e.hi());
        in_range(c) && f.vertex(e.lo()) != f.vertex(e.hi()) && c != f.vertex(e.lo()) && c != f.vertex(e.hi())
    })
}

/// Constant |f(u) + f(v) - f(uv)| over all edges.
pub fn fdt_constant(g: &Graph, f: &TotalColoring) -> Option<u32> {
    let weights: BTreeSet<u32> = g
        .edges()
        .map(|e| {
            let s = f.vertex(e.lo()).unwrap() + f.vertex(e.hi()).unwrap();
            s.abs_diff(f.edge(e.lo(), e.hi()).unwrap())
        })
        .collect();
    (weights.len() == 1).then(|| *weights.iter().next().unwrap())
}

/// Exhaustive search over every assignment of `[1, palette]` to vertices and
/// edges. Only for tiny graphs.
pub fn brute_fdt_exists(g: &Graph, palette: u32) -> bool {
    let edges: Vec<(Vertex, Vertex)> = g.edges().map(|e| (e.lo(), e.hi())).collect();
    let p = g.order();
    let n = p + edges.len();
    let mut values = vec![1u32; n];
    loop {
        let f = TotalColoring::from_triples(
            palette,
            values[..p].to_vec(),
            edges.iter().zip(&values[p..]).map(|(&(u, v), &c)| (u, v, c)),
        );
        if proper_total(g, &f, palette) && fdt_constant(g, &f).is_some() {
            return true;
        }
        let mut i = 0;
        while i < n && values[i] == palette {
            values[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
        values[i] += 1;
    }
}

/// All coefficient tuples in `[0, bound]^k` with `Σ a_k base_k = v` and
/// `Σ a_k ≥ 1`, in lexicographic order. Vectors are padded with zeros.
pub fn brute_vector_lattice(v: &[u32], bases: &[Vec<u32>], bound: u32) -> Vec<Vec<u32>> {
    let len = bases.iter().map(Vec::len).chain([v.len()]).max().unwrap();
    let pad = |x: &[u32]| {
        let mut y = x.to_vec();
        y.resize(len, 0);
        y
    };
    let v = pad(v);
    let bases: Vec<Vec<u32>> = bases.iter().map(|b| pad(b)).collect();
    let k = bases.len();
    let mut out = Vec::new();
    let mut a = vec![0u32; k];
    loop {
        if a.iter().sum::<u32>() >= 1 {
            let sum: Vec<u32> = (0..len)
                .map(|i| (0..k).map(|j| a[j] * bases[j][i]).sum())
                .collect();
            if sum == v {
                out.push(a.clone());
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if a[i] < bound {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// All labeled graphs on `p` vertices (2^(p choose 2) of them).
pub fn all_labeled_graphs(p: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (1..=p).flat_map(|u| (u + 1..=p).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::new(
            p,
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Random proper total coloring with distinct colors on all elements, so
/// any two vertex or edge colors differ.
pub fn random_distinct_coloring(rng: &mut impl Rng, g: &Graph, palette: u32) -> TotalColoring {
    let n = g.order() + g.size();
    assert!(palette as usize >= n);
    let mut colors: Vec<u32> = (1..=palette).collect();
    colors.shuffle(rng);
    let vertex = colors[..g.order()].to_vec();
    let edges: Vec<(Vertex, Vertex, u32)> = g
        .edges()
        .zip(&colors[g.order()..n])
        .map(|(e, &c)| (e.lo(), e.hi(), c))
        .collect();
    TotalColoring::from_triples(palette, vertex, edges)
}
