//! Shared fixtures and naive reference checks for the integration suites.
#![allow(dead_code)]

use rand::Rng;
use tw_approx::generators::{gnp, partial_k_tree, random_connected, random_tree, seeded};
use tw_approx::graph::{Graph, VertexSet};
use tw_approx::TreeDecomposition;

/// `count` seeded graphs with 5 to `max_n` vertices from four families.
pub fn small_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(5..=max_n);
            match i % 4 {
                0 => random_connected(n, rng.gen_range(0.05..0.5), &mut rng),
                1 => gnp(n, rng.gen_range(0.2..0.7), &mut rng),
                2 => {
                    let k = rng.gen_range(1..=4.min(n - 1));
                    partial_k_tree(n, k, rng.gen_range(0.6..=1.0), &mut rng)
                }
                _ => random_tree(n, &mut rng),
            }
        })
        .collect()
}

/// Treewidth as the best elimination order over all `n!` permutations.
pub fn permutation_treewidth(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 9, "permutation brute force is limited to 9 vertices");
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = n.saturating_sub(1);
    permute(g, &mut order, 0, &mut best);
    best
}

fn permute(g: &Graph, order: &mut Vec<usize>, i: usize, best: &mut usize) {
    if i == order.len() {
        *best = (*best).min(elimination_width(g, order));
        return;
    }
    for j in i..order.len() {
        order.swap(i, j);
        permute(g, order, i + 1, best);
        order.swap(i, j);
    }
}

/// Largest later-neighborhood when eliminating in `order`.
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut gone = vec![false; n];
    let mut width = 0;
    for &v in order {
        let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
        width = width.max(nb.len());
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        gone[v] = true;
    }
    width
}

/// Outcome of a naive decomposition check.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct NaiveReport {
    pub is_tree: bool,
    pub uncovered_vertices: Vec<usize>,
    pub uncovered_edges: Vec<(usize, usize)>,
    /// Vertices whose bags are not connected in the tree-edge graph.
    pub broken_subtrees: Vec<usize>,
}

impl NaiveReport {
    pub fn valid(&self) -> bool {
        self.is_tree
            && self.uncovered_vertices.is_empty()
            && self.uncovered_edges.is_empty()
            && self.broken_subtrees.is_empty()
    }
}

fn reachable(nb: usize, edges: &[(usize, usize)], allowed: &[bool], start: usize) -> Vec<bool> {
    let mut seen = vec![false; nb];
    seen[start] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in edges {
            if a < nb && b < nb && allowed[a] && allowed[b] && seen[a] != seen[b] {
                seen[a] = true;
                seen[b] = true;
                changed = true;
            }
        }
    }
    seen
}

/// Decomposition check by repeated edge relaxation, written without
/// reference to the library's checker.
pub fn naive_check(g: &Graph, td: &TreeDecomposition) -> NaiveReport {
    let nb = td.bags.len();
    let all = vec![true; nb];
    let connected = nb == 0 || reachable(nb, &td.edges, &all, 0).iter().all(|&s| s);
    let is_tree = connected && td.edges.len() + 1 == nb && td.edges.iter().all(|&(a, b)| a != b);
    let mut report = NaiveReport {
        is_tree,
        ..Default::default()
    };
    for v in 0..g.n() {
        let holds: Vec<bool> = td.bags.iter().map(|b| b.contains(v)).collect();
        match holds.iter().position(|&h| h) {
            None => report.uncovered_vertices.push(v),
            Some(first) => {
                let seen = reachable(nb, &td.edges, &holds, first);
                if (0..nb).any(|i| holds[i] && !seen[i]) {
                    report.broken_subtrees.push(v);
                }
            }
        }
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            report.uncovered_edges.push((u, v));
        }
    }
    report
}

pub fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
    VertexSet::from(a)
}
