//! Exhaustive generators for small rooted graphs and trees.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::structures::{RootedGraph, Tree};

fn vertex_names(v: usize) -> Vec<String> {
    (0..v).map(|i| format!("v{i}")).collect()
}

/// Every connected simple graph on vertices `v0..v{k}` with at most
/// `max_edges` edges, rooted at `v0`. Labelled, so every rooted graph up to
/// isomorphism appears at least once.
pub fn connected_rooted_graphs(max_edges: usize) -> Vec<RootedGraph> {
    let mut out = Vec::new();
    for v in 1..=max_edges + 1 {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|i| (i + 1..v).map(move |j| (i, j)))
            .collect();
        let names = vertex_names(v);
        let lo = v - 1;
        let hi = max_edges.min(pairs.len());
        if lo > hi {
            continue;
        }
        for mask in 0u64..1 << pairs.len() {
            let k = mask.count_ones() as usize;
            if k < lo || k > hi {
                continue;
            }
            let edges: Vec<(String, &str, &str)> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .enumerate()
                .map(|(label, i)| {
                    let (a, b) = pairs[i];
                    (format!("e{label}"), names[a].as_str(), names[b].as_str())
                })
                .collect();
            let vertices: Vec<&str> = names.iter().map(String::as_str).collect();
            if let Ok(rg) = RootedGraph::new(vertices, "v0", edges) {
                out.push(rg);
            }
        }
    }
    out
}

/// Canonical string of the tree rooted at `v` (AHU encoding).
fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    kids.sort();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

fn canonical(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    if n == 1 {
        return String::from("()");
    }
    // peel leaves down to the one or two centres
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut removed = alloc::vec![false; n];
    while alive > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            removed[leaf] = true;
            alive -= 1;
            for &w in &adj[leaf] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n)
        .filter(|&v| !removed[v])
        .map(|c| encode(adj, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

/// One representative of every unlabelled tree with at most `max_edges`
/// edges, smallest first. Edges are labelled `e0, e1, ...` in the order the
/// leaves were attached.
pub fn free_trees(max_edges: usize) -> Vec<Tree> {
    // each tree as parent-edge list: vertex k > 0 hangs from parents[k - 1]
    let mut layer: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    let mut all = layer.clone();
    for _ in 0..max_edges {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for parents in &layer {
            let n = parents.len() + 1;
            for attach in 0..n {
                let mut grown = parents.clone();
                grown.push(attach);
                let mut adj = alloc::vec![Vec::new(); n + 1];
                for (k, &p) in grown.iter().enumerate() {
                    adj[k + 1].push(p);
                    adj[p].push(k + 1);
                }
                if seen.insert(canonical(&adj)) {
                    next.push(grown);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter()
        .map(|parents| {
            let names = vertex_names(parents.len() + 1);
            let edges: Vec<(String, &str, &str)> = parents
                .iter()
                .enumerate()
                .map(|(k, &p)| (format!("e{k}"), names[p].as_str(), names[k + 1].as_str()))
                .collect();
            Tree::new(names.iter().map(String::as_str).collect(), edges).expect("grown tree")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_tree_counts() {
        // unlabelled trees on 1..=9 vertices
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47];
        let trees = free_trees(8);
        for (edges, &count) in expected.iter().enumerate() {
            assert_eq!(
                trees.iter().filter(|t| t.edges().len() == edges).count(),
                count,
                "trees with {edges} edges"
            );
        }
    }

    #[test]
    fn rooted_graph_counts() {
        // labelled connected graphs: 1 on one vertex, 1 on two, 4 on three
        let graphs = connected_rooted_graphs(3);
        let on = |v: usize| graphs.iter().filter(|g| g.vertices().len() == v).count();
        assert_eq!(on(1), 1);
        assert_eq!(on(2), 1);
        assert_eq!(on(3), 4);
        // labelled trees on four vertices: 4^2 = 16
        assert_eq!(on(4), 16);
        assert!(graphs.iter().all(|g| g.edges().len() <= 3));
    }
}
