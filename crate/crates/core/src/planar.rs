//! Exact planarity test.
//!
//! Splits the graph into biconnected blocks and runs the
//! Demoucron–Malgrange–Pertuiset path-addition procedure on each: start from
//! a cycle, repeatedly pick a fragment (bridge) of the unembedded part, and
//! route a path of it through a face that holds all of its attachment
//! vertices. The graph is planar iff no fragment ever runs out of faces.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{Edge, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let (p, q) = (g.order(), g.size());
    if p >= 3 && q > 3 * p - 6 {
        return false;
    }
    biconnected_blocks(g)
        .iter()
        .all(|block| block_is_planar(block))
}

/// Edge sets of the biconnected components (bridges come out as single-edge
/// blocks).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.order();
    let adj: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).map(|w| w - 1).collect())
        .collect();
    let mut state = Tarjan {
        adj: &adj,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for s in 0..n {
        if state.disc[s] == usize::MAX {
            state.visit(s, usize::MAX);
        }
    }
    state.blocks
}

struct Tarjan<'a> {
    adj: &'a [Vec<usize>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<Edge>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &w in &self.adj[u] {
            if self.disc[w] == usize::MAX {
                self.stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = self.stack.pop() {
                        block.push(Edge::new(a + 1, b + 1));
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

fn block_is_planar(block: &[Edge]) -> bool {
    let vertices: BTreeSet<usize> = block.iter().flat_map(|e| [e.lo(), e.hi()]).collect();
    let n = vertices.len();
    let m = block.len();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let index: Vec<usize> = vertices.iter().copied().collect();
    let local = |v: usize| index.binary_search(&v).expect("block vertex");
    let mut adj = vec![Vec::new(); n];
    for e in block {
        let (a, b) = (local(e.lo()), local(e.hi()));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Embedding::new(adj).run()
}

struct Fragment {
    /// Vertices not yet embedded; empty for a chord.
    inner: Vec<usize>,
    /// Embedded vertices the fragment touches.
    attachments: BTreeSet<usize>,
    /// The single edge of a chord fragment.
    chord: Option<(usize, usize)>,
}

struct Embedding {
    adj: Vec<Vec<usize>>,
    embedded: Vec<bool>,
    edges: BTreeSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Embedding {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Embedding {
            adj,
            embedded: vec![false; n],
            edges: BTreeSet::new(),
            faces: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        let cycle = self.initial_cycle();
        for i in 0..cycle.len() {
            self.embedded[cycle[i]] = true;
            self.edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
        self.faces = vec![cycle.clone(), cycle];
        loop {
            let fragments = self.fragments();
            if fragments.is_empty() {
                return true;
            }
            let mut choice = None;
            for (i, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| frag.attachments.iter().all(|a| self.faces[f].contains(a)))
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        choice = Some((i, admissible[0]));
                        break;
                    }
                    _ => {
                        choice.get_or_insert((i, admissible[0]));
                    }
                }
            }
            let (frag, face) = choice.expect("at least one fragment");
            let path = self.fragment_path(&fragments[frag]);
            self.embed_path(face, &path);
        }
    }

    /// Any cycle of the block: an edge plus a shortest path closing it.
    fn initial_cycle(&self) -> Vec<usize> {
        let a = 0;
        let b = self.adj[0][0];
        let mut prev = vec![usize::MAX; self.adj.len()];
        prev[b] = b;
        let mut queue = VecDeque::from([b]);
        while let Some(x) = queue.pop_front() {
            if x == a {
                break;
            }
            for &y in &self.adj[x] {
                if prev[y] == usize::MAX && !(x == b && y == a) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut cycle = vec![a];
        let mut x = a;
        while x != b {
            x = prev[x];
            cycle.push(x);
        }
        cycle
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.embedded[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && self.embedded[v] && !self.edges.contains(&(u, v)) {
                    out.push(Fragment {
                        inner: Vec::new(),
                        attachments: BTreeSet::from([u, v]),
                        chord: Some((u, v)),
                    });
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.embedded[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut inner = vec![s];
            let mut attachments = BTreeSet::new();
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if self.embedded[y] {
                        attachments.insert(y);
                    } else if !seen[y] {
                        seen[y] = true;
                        inner.push(y);
                        stack.push(y);
                    }
                }
            }
            inner.sort_unstable();
            out.push(Fragment {
                inner,
                attachments,
                chord: None,
            });
        }
        out
    }

    /// A path through the fragment between two distinct attachments.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if let Some((u, v)) = frag.chord {
            return vec![u, v];
        }
        let start = *frag
            .attachments
            .iter()
            .next()
            .expect("fragment of a block has attachments");
        let in_frag = |x: usize| frag.inner.binary_search(&x).is_ok();
        let entry = *self.adj[start]
            .iter()
            .find(|&&x| in_frag(x))
            .expect("attachment touches the fragment");
        let mut prev = vec![usize::MAX; self.adj.len()];
        prev[entry] = entry;
        let mut queue = VecDeque::from([entry]);
        while let Some(x) = queue.pop_front() {
            if let Some(&end) = self.adj[x]
                .iter()
                .find(|&&y| self.embedded[y] && y != start)
            {
                let mut path = vec![end, x];
                let mut cur = x;
                while cur != entry {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            for &y in &self.adj[x] {
                if in_frag(y) && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        unreachable!("a fragment of a 2-connected block has two attachments")
    }

    fn embed_path(&mut self, face: usize, path: &[usize]) {
        let boundary = self.faces.swap_remove(face);
        let (a, b) = (path[0], path[path.len() - 1]);
        let len = boundary.len();
        let i = boundary.iter().position(|&x| x == a).expect("a on face");
        let j = boundary.iter().position(|&x| x == b).expect("b on face");
        let interior = &path[1..path.len() - 1];

        let mut first: Vec<usize> = Vec::new();
        let mut k = i;
        loop {
            first.push(boundary[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        first.extend(interior.iter().rev());

        let mut second: Vec<usize> = Vec::new();
        let mut k = j;
        loop {
            second.push(boundary[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        second.extend(interior.iter());

        self.faces.push(first);
        self.faces.push(second);
        for w in path.windows(2) {
            self.edges.insert(key(w[0], w[1]));
        }
        for &x in interior {
            self.embedded[x] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1));
        let spokes = (0..5).map(|i| (i + 1, i + 6));
        let inner = (0..5).map(|i| (i + 6, (i + 2) % 5 + 6));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete_bipartite(2, 7)));
    }

    #[test]
    fn petersen_is_not_planar() {
        // 15 edges on 10 vertices passes the edge-count bound.
        assert!(!is_planar(&petersen()));
    }

    #[test]
    fn k5_minus_edge_and_subdivisions() {
        let mut g = Graph::complete(5);
        g.remove_edge(1, 2).unwrap();
        assert!(is_planar(&g));

        // K_{3,3} with one edge subdivided.
        let mut h = Graph::complete_bipartite(3, 3);
        h.remove_edge(1, 4).unwrap();
        let x = h.add_vertex();
        h.add_edge(1, x).unwrap();
        h.add_edge(x, 4).unwrap();
        assert!(!is_planar(&h));
    }

    #[test]
    fn cube_and_octahedron() {
        let cube = Graph::new(
            8,
            [
                (1, 2), (2, 3), (3, 4), (4, 1),
                (5, 6), (6, 7), (7, 8), (8, 5),
                (1, 5), (2, 6), (3, 7), (4, 8),
            ],
        )
        .unwrap();
        assert!(is_planar(&cube));
        let mut octa = Graph::complete(6);
        for (a, b) in [(1, 2), (3, 4), (5, 6)] {
            octa.remove_edge(a, b).unwrap();
        }
        assert!(is_planar(&octa));
    }

    #[test]
    fn blocks_of_bowtie() {
        let bowtie = Graph::new(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let blocks = biconnected_blocks(&bowtie);
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 3));
    }

    #[test]
    fn disconnected_union_of_planar_and_not() {
        let g = Graph::cycle(3).disjoint_union(&Graph::complete(5));
        assert!(!is_planar(&g));
    }
}
