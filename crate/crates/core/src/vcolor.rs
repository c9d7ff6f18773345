//! Exact proper vertex coloring by backtracking.

use crate::graph::{Graph, Vertex};

/// Colors `1..=colors` with adjacent vertices distinct, or `None`. Result
/// index `v - 1` holds the color of `v`.
pub fn find_proper_vertex_coloring(g: &Graph, colors: u32) -> Option<Vec<u32>> {
    if colors == 0 {
        return None;
    }
    let n = g.order();
    // Highest degree first, ties by id.
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut assigned = vec![0u32; n + 1];
    if color_from(g, &order, 0, colors, 0, &mut assigned) {
        Some(assigned[1..].to_vec())
    } else {
        None
    }
}

fn color_from(
    g: &Graph,
    order: &[Vertex],
    idx: usize,
    colors: u32,
    used_max: u32,
    assigned: &mut [u32],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // Colors above used_max + 1 are interchangeable with used_max + 1.
    for c in 1..=colors.min(used_max + 1) {
        if g.neighbors(v).any(|w| assigned[w] == c) {
            continue;
        }
        assigned[v] = c;
        if color_from(g, order, idx + 1, colors, used_max.max(c), assigned) {
            return true;
        }
    }
    assigned[v] = 0;
    false
}

pub fn is_proper_vertex_coloring(g: &Graph, colors: &[u32], palette: u32) -> bool {
    colors.len() == g.order()
        && colors.iter().all(|&c| (1..=palette).contains(&c))
        && g.edges().all(|e| colors[e.lo() - 1] != colors[e.hi() - 1])
}
