//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Classes on `p` vertices come from classes on `p - 1` vertices by adding
//! one vertex with every possible neighborhood and keeping one
//! representative per canonical form. Representatives are canonically
//! labeled and listed in canonical-form order.

use std::collections::BTreeMap;

use crate::degree::{degree_sequence, is_connected, DegreeSequence};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};

/// All graphs on `p` vertices, one per isomorphism class.
pub fn all_graphs(p: usize) -> Vec<Graph> {
    graphs_up_to(p).pop().unwrap_or_default()
}

/// `result[i]` holds the classes on `i + 1` vertices, for `i + 1 <= max_order`.
pub fn graphs_up_to(max_order: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_order == 0 {
        return levels;
    }
    levels.push(vec![Graph::empty(1).expect("one vertex")]);
    for p in 2..=max_order {
        let prev = levels.last().expect("previous level");
        let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for base in prev {
            for mask in 0u64..(1 << (p - 1)) {
                let mut g = base.clone();
                let v = g.add_vertex();
                for u in 1..p {
                    if mask >> (u - 1) & 1 == 1 {
                        g.add_edge(u, v).expect("fresh vertex");
                    }
                }
                let form = canonical_form(&g);
                classes.entry(form).or_insert_with_key(|f| f.to_graph());
            }
        }
        levels.push(classes.into_values().collect());
    }
    levels
}

pub fn connected_graphs(p: usize) -> Vec<Graph> {
    all_graphs(p).into_iter().filter(is_connected).collect()
}

/// Non-isomorphic trees on `p` vertices, grown leaf by leaf.
pub fn trees(p: usize) -> Vec<Graph> {
    if p == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for _ in 2..=p {
        let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for base in &level {
            for u in base.vertices() {
                let mut t = base.clone();
                let v = t.add_vertex();
                t.add_edge(u, v).expect("fresh vertex");
                classes.entry(canonical_form(&t)).or_insert_with_key(|f| f.to_graph());
            }
        }
        level = classes.into_values().collect();
    }
    level
}

/// Isomorphism classes realizing `d` exactly.
pub fn graphs_with_degree_sequence(d: &DegreeSequence) -> Vec<Graph> {
    all_graphs(d.len())
        .into_iter()
        .filter(|g| degree_sequence(g) == *d)
        .collect()
}

/// Connected bipartite classes on `p` vertices.
pub fn connected_bipartite_graphs(p: usize) -> Vec<Graph> {
    connected_graphs(p)
        .into_iter()
        .filter(|g| crate::vcolor::find_proper_vertex_coloring(g, 2).is_some())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_values() {
        // Graphs and connected graphs on 1..=6 vertices.
        let levels = graphs_up_to(6);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = levels
            .iter()
            .map(|l| l.iter().filter(|g| is_connected(g)).count())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|p| trees(p).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn degree_sequence_filter() {
        let d = DegreeSequence::new(vec![2, 2, 2, 2]);
        let gs = graphs_with_degree_sequence(&d);
        assert_eq!(gs.len(), 1);
        assert!(crate::iso::are_isomorphic(&gs[0], &Graph::cycle(4)));
    }
}
