//! Exact Hamilton cycle search.

use crate::graph::{Graph, Vertex};

/// A cyclic ordering of all vertices in which consecutive vertices are
/// adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle(Vec<Vertex>);

impl HamiltonCycle {
    /// Wraps `order` after checking it against `host`.
    pub fn new(host: &Graph, order: Vec<Vertex>) -> Option<Self> {
        let cycle = HamiltonCycle(order);
        cycle.is_valid_in(host).then_some(cycle)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Cycle edges as `(x_i, x_{i+1})`, wrapping around.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    pub fn is_valid_in(&self, host: &Graph) -> bool {
        let n = host.order();
        if n < 3 || self.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n + 1];
        for &v in &self.0 {
            if !host.contains_vertex(v) || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.edges().all(|(a, b)| host.has_edge(a, b))
    }
}

/// Backtracking from vertex 1 over neighbors in ascending order. Prunes
/// when an unvisited vertex can no longer get two path neighbors or the
/// unvisited part falls apart.
pub fn find_hamilton_cycle(g: &Graph) -> Option<HamiltonCycle> {
    let n = g.order();
    if n < 3 || g.min_degree() < 2 {
        return None;
    }
    let adj: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let mut search = Search {
        adj: &adj,
        n,
        visited: vec![false; n + 1],
        path: Vec::with_capacity(n),
    };
    search.visited[1] = true;
    search.path.push(1);
    if search.extend() {
        Some(HamiltonCycle(search.path))
    } else {
        None
    }
}

struct Search<'a> {
    adj: &'a [Vec<Vertex>],
    n: usize,
    visited: Vec<bool>,
    path: Vec<Vertex>,
}

impl Search<'_> {
    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    fn extend(&mut self) -> bool {
        let tail = *self.path.last().expect("path starts at vertex 1");
        if self.path.len() == self.n {
            return self.neighbors(tail).contains(&1);
        }
        if !self.feasible(tail) {
            return false;
        }
        for i in 0..self.neighbors(tail).len() {
            let next = self.neighbors(tail)[i];
            if self.visited[next] {
                continue;
            }
            self.visited[next] = true;
            self.path.push(next);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[next] = false;
        }
        false
    }

    /// Every unvisited vertex needs two usable neighbors (unvisited, the
    /// tail, or the start), and the unvisited vertices plus the tail must be
    /// connected.
    fn feasible(&self, tail: Vertex) -> bool {
        let mut remaining = 0;
        for v in 1..=self.n {
            if self.visited[v] {
                continue;
            }
            remaining += 1;
            let usable = self
                .neighbors(v)
                .iter()
                .filter(|&&w| !self.visited[w] || w == tail || w == 1)
                .count();
            if usable < 2 {
                return false;
            }
        }
        if remaining == 0 {
            return true;
        }
        let mut reached = vec![false; self.n + 1];
        let mut stack = vec![tail];
        reached[tail] = true;
        let mut count = 0;
        while let Some(x) = stack.pop() {
            for &y in self.neighbors(x) {
                if !reached[y] && !self.visited[y] {
                    reached[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == remaining
    }
}
