//! Seeded random graph families for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random recursive tree: each vertex joins a uniformly chosen earlier one,
/// then labels are shuffled.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges = (1..n).map(|v| (perm[v], perm[rng.gen_range(0..v)]));
    Graph::from_edges(n, edges).expect("ids in range")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("ids in range")
}

/// A random tree plus each remaining pair with probability `p`; always
/// connected.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let extra = gnp(n, p, rng);
    tree.with_edges(extra.edges()).expect("same vertex set")
}

/// Random `k`-tree on `n ≥ k + 1` vertices: a `(k+1)`-clique, then each new
/// vertex is joined to a uniformly chosen existing `k`-clique.
pub fn k_tree(n: usize, k: usize, rng: &mut impl Rng) -> Graph {
    assert!(n > k, "a k-tree needs at least k + 1 vertices");
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<Vec<usize>> = (0..=k).map(|skip| (0..=k).filter(|&v| v != skip).collect()).collect();
    for v in k + 1..n {
        let base = cliques[rng.gen_range(0..cliques.len())].clone();
        edges.extend(base.iter().map(|&u| (u, v)));
        for i in 0..base.len() {
            let mut c = base.clone();
            c[i] = v;
            cliques.push(c);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("ids in range")
}

/// Partial `k`-tree: a random `k`-tree with each edge kept with probability
/// `keep`. Treewidth at most `k`.
pub fn partial_k_tree(n: usize, k: usize, keep: f64, rng: &mut impl Rng) -> Graph {
    let full = k_tree(n, k, rng);
    let kept: Vec<_> = full.edges().filter(|_| rng.gen_bool(keep)).collect();
    Graph::from_edges(n, kept).expect("ids in range")
}

/// A named graph of the synthetic benchmark corpus.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

/// The five-graph scale corpus: partial k-trees of treewidth at most 5 with
/// 150 to 600 vertices and 400 to 4000 edges.
pub fn scale_corpus(seed: u64) -> Vec<CorpusGraph> {
    let shapes: [(&str, usize, usize, f64); 5] = [
        ("ptree3_150", 150, 3, 1.0),
        ("ptree3_300", 300, 3, 0.8),
        ("ptree5_400", 400, 5, 0.7),
        ("ptree4_500", 500, 4, 0.8),
        ("ptree3_600", 600, 3, 0.9),
    ];
    shapes
        .iter()
        .enumerate()
        .map(|(i, &(name, n, k, keep))| CorpusGraph {
            name: name.to_string(),
            graph: partial_k_tree(n, k, keep, &mut seeded(seed.wrapping_add(i as u64))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_components, VertexSet};
    use crate::validate::exact_treewidth;

    #[test]
    fn trees_are_trees() {
        let mut rng = seeded(1);
        for n in 1..30 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.m(), n - 1);
            assert_eq!(connected_components(&t, &VertexSet::new()).len(), 1);
        }
    }

    #[test]
    fn k_trees_have_exact_width() {
        let mut rng = seeded(2);
        for k in 1..4 {
            let g = k_tree(10, k, &mut rng);
            assert_eq!(g.m(), k * (k + 1) / 2 + (10 - k - 1) * k);
            assert_eq!(exact_treewidth(&g).unwrap(), k);
            assert!(exact_treewidth(&partial_k_tree(10, k, 0.6, &mut rng)).unwrap() <= k);
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        assert_eq!(gnp(20, 0.3, &mut seeded(9)), gnp(20, 0.3, &mut seeded(9)));
        let a = scale_corpus(5);
        let b = scale_corpus(5);
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph == y.graph));
    }

    #[test]
    fn corpus_sizes() {
        for c in scale_corpus(2024) {
            let (n, m) = (c.graph.n(), c.graph.m());
            assert!((100..=600).contains(&n), "{}: n = {n}", c.name);
            assert!((400..=4000).contains(&m), "{}: m = {m}", c.name);
        }
    }

    #[test]
    fn connected_variant() {
        let g = random_connected(15, 0.1, &mut seeded(3));
        assert_eq!(connected_components(&g, &VertexSet::new()).len(), 1);
    }
}
