//! Recursive separator-based triangulation, the min-degree baseline and
//! tree-decomposition assembly.
//!
//! Every recursive call receives a graph `G` and a set `W` that must end up
//! a clique. Small graphs become one clique. Otherwise `W` is padded to the
//! procedure's nominal size, a balanced separator `X` of the padded set is
//! found, each side `Sᵢ` is handled recursively on `G[Sᵢ ∪ X]` with
//! `(Sᵢ ∩ W) ∪ X`, and finally `W ∪ X` becomes a clique. The cliques made by
//! the calls are the bags of a tree decomposition whose shape is the
//! recursion tree.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::flow::FlowNetwork;
use crate::graph::{connected_components, induced_subgraph, Graph, VertexSet};
use crate::separators::{
    alpha_sum_sep_on, half_bound, try_split_on, two_thirds_vtx_sep_on, two_way_half_vtx_sep_on, Alpha, ThreeWaySep,
};
use crate::validate::{clique_number_chordal, is_chordal, Chordality, EliminationOrdering};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    /// Tree edges as pairs of bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }
}

/// A chordal supergraph of `base` on the same vertices, with a perfect
/// elimination ordering as certificate.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub base: Graph,
    pub fill_edges: Vec<(usize, usize)>,
    pub chordal: Graph,
    pub peo: EliminationOrdering,
    pub clique_number: usize,
}

impl Triangulation {
    /// Triangulation obtained by turning every bag of a valid decomposition
    /// of `base` into a clique. Panics if the result is not chordal, which
    /// can only happen for an invalid decomposition.
    pub fn from_decomposition(base: &Graph, td: &TreeDecomposition) -> Triangulation {
        let mut fill = BTreeSet::new();
        for bag in &td.bags {
            let ids = bag.as_slice();
            for (i, &u) in ids.iter().enumerate() {
                for &v in &ids[i + 1..] {
                    if !base.has_edge(u, v) {
                        fill.insert((u, v));
                    }
                }
            }
        }
        let fill_edges: Vec<_> = fill.into_iter().collect();
        let chordal = base
            .with_edges(fill_edges.iter().copied())
            .expect("bag ids within graph");
        let peo = match is_chordal(&chordal) {
            Chordality::Chordal(peo) => peo,
            Chordality::NotChordal(c) => panic!("bag cliques are not chordal: cycle {c:?}"),
        };
        let clique_number = clique_number_chordal(&chordal, &peo).expect("certified ordering");
        Triangulation {
            base: base.clone(),
            fill_edges,
            chordal,
            peo,
            clique_number,
        }
    }
}

#[derive(Clone, Debug)]
pub enum TriangOutcome {
    Success(Box<Triangulation>, TreeDecomposition),
    /// The treewidth exceeds `k - 1`.
    Exceeds(usize),
}

impl TriangOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, TriangOutcome::Success(..))
    }

    pub fn success(&self) -> Option<(&Triangulation, &TreeDecomposition)> {
        match self {
            TriangOutcome::Success(t, td) => Some((t, td)),
            TriangOutcome::Exceeds(_) => None,
        }
    }
}

/// Work counters of one or more runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub separator_calls: u64,
    pub flow_augmentations: u64,
    pub recursive_calls: u64,
}

impl std::ops::AddAssign for RunStats {
    fn add_assign(&mut self, o: RunStats) {
        self.separator_calls += o.separator_calls;
        self.flow_augmentations += o.flow_augmentations;
        self.recursive_calls += o.recursive_calls;
    }
}

/// A pluggable three-way balanced-separator procedure for
/// [`triang_generic`]. `bound` is the separator size the driver allows.
pub trait SeparatorOracle {
    fn separate(&self, net: &mut FlowNetwork<'_>, w: &VertexSet, k: usize, bound: usize) -> Option<ThreeWaySep>;
}

/// The α-sum-separator as an oracle.
#[derive(Clone, Copy, Debug, Default)]
pub struct AlphaSumOracle {
    pub alpha: Alpha,
}

impl SeparatorOracle for AlphaSumOracle {
    fn separate(&self, net: &mut FlowNetwork<'_>, w: &VertexSet, k: usize, bound: usize) -> Option<ThreeWaySep> {
        alpha_sum_sep_on(net, w, k, self.alpha, bound)
    }
}

/// Heuristic oracle: for each start vertex in `W`, the half of `W` nearest
/// to it (breadth-first distance, then id) is cut from the other half.
/// Polynomial, with no balance or size guarantee beyond `bound`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BisectionOracle;

impl SeparatorOracle for BisectionOracle {
    fn separate(&self, net: &mut FlowNetwork<'_>, w: &VertexSet, _k: usize, bound: usize) -> Option<ThreeWaySep> {
        if w.len() < 2 {
            return None;
        }
        let g = net.graph();
        let half = w.len().div_ceil(2);
        for start in w.iter() {
            let dist = bfs_distances(g, start);
            let mut order: Vec<usize> = w.iter().collect();
            order.sort_by_key(|&v| (dist[v], v));
            let w1: VertexSet = order[..half].iter().copied().collect();
            let w2: VertexSet = order[half..].iter().copied().collect();
            if let Some(sep) = try_split_on(net, &w1, &w2, bound) {
                return Some(sep.into());
            }
        }
        None
    }
}

fn bfs_distances(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Size functions of [`triang_generic`].
pub struct GenericConfig<'a> {
    /// Separator size bound handed to the oracle.
    pub bound_fn: &'a dyn Fn(usize) -> usize,
    /// Graphs with at most this many vertices become one clique.
    pub base_fn: &'a dyn Fn(usize) -> usize,
    /// Nominal size of the padded set `W′`.
    pub pad_fn: &'a dyn Fn(usize) -> usize,
}

enum Strategy<'a> {
    TwoThirds,
    Half,
    Oracle {
        oracle: &'a dyn SeparatorOracle,
        bound: usize,
    },
}

/// One recursive call: the set that had to become a clique, the separator
/// found (empty in base cases) and the parent call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceNode {
    pub w: VertexSet,
    pub x: VertexSet,
    /// Whole vertex set of a base-case call, empty otherwise.
    pub base: VertexSet,
    pub parent: Option<usize>,
}

impl TraceNode {
    pub fn bag(&self) -> VertexSet {
        if self.base.is_empty() {
            self.w.union(&self.x)
        } else {
            self.base.clone()
        }
    }
}

/// Calls of a completed recursion in creation order, ids in the input graph.
/// Top-level calls (one per connected component) have no parent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecursionTrace {
    pub nodes: Vec<TraceNode>,
}

/// One bag per call, tree edges along the recursion; the roots of separate
/// components are attached to the first root.
pub fn assemble_tree_decomposition(trace: &RecursionTrace) -> TreeDecomposition {
    let bags: Vec<VertexSet> = trace.nodes.iter().map(TraceNode::bag).collect();
    let mut edges = Vec::with_capacity(bags.len().saturating_sub(1));
    let mut first_root = None;
    for (i, node) in trace.nodes.iter().enumerate() {
        match node.parent {
            Some(p) => edges.push((p, i)),
            None => match first_root {
                None => first_root = Some(i),
                Some(r) => edges.push((r, i)),
            },
        }
    }
    if bags.is_empty() {
        return TreeDecomposition {
            bags: vec![VertexSet::new()],
            edges,
        };
    }
    TreeDecomposition { bags, edges }
}

struct Engine<'a> {
    strategy: Strategy<'a>,
    k: usize,
    base_limit: usize,
    target_w: usize,
    adaptive: bool,
    stats: RunStats,
    trace: RecursionTrace,
}

struct Exceeded;

/// `w` plus the smallest ids outside it, up to `size` vertices.
fn pad(w: &VertexSet, size: usize, n: usize) -> VertexSet {
    let mut out = w.clone();
    let mut v = 0;
    while out.len() < size && v < n {
        out.insert(v);
        v += 1;
    }
    out
}

impl Engine<'_> {
    fn split(&self, net: &mut FlowNetwork<'_>, w: &VertexSet) -> Option<(VertexSet, Vec<VertexSet>)> {
        match self.strategy {
            Strategy::TwoThirds => two_thirds_vtx_sep_on(net, w, self.k).map(|s| (s.x, vec![s.s1, s.s2])),
            Strategy::Half => two_way_half_vtx_sep_on(net, w, self.k).map(|s| (s.x, vec![s.s1, s.s2])),
            Strategy::Oracle { oracle, bound } => oracle.separate(net, w, self.k, bound).map(|s| {
                s.assert_valid(net.graph());
                let [a, b, c] = s.sides;
                (s.x, vec![a, b, c])
            }),
        }
    }

    fn find_split(&self, net: &mut FlowNetwork<'_>, w: &VertexSet) -> Option<(VertexSet, Vec<VertexSet>)> {
        let n = net.graph().n();
        let target = self.target_w.min(n);
        if !self.adaptive || w.len() >= target {
            return self.split(net, &pad(w, target, n));
        }
        // Grow W′ one vertex at a time; only a failure at the nominal size
        // certifies anything.
        let mut size = w.len().max(2).min(target);
        loop {
            if let Some(found) = self.split(net, &pad(w, size, n)) {
                return Some(found);
            }
            if size >= target {
                return None;
            }
            size += 1;
        }
    }

    fn recurse(
        &mut self,
        g: &Graph,
        to_orig: &[usize],
        w: &VertexSet,
        parent: Option<usize>,
    ) -> Result<usize, Exceeded> {
        self.stats.recursive_calls += 1;
        let n = g.n();
        let map = |s: &VertexSet| VertexSet::from_sorted_unchecked(s.iter().map(|v| to_orig[v]).collect());
        if n <= self.base_limit {
            self.trace.nodes.push(TraceNode {
                w: map(w),
                x: VertexSet::new(),
                base: VertexSet::from_sorted_unchecked(to_orig.to_vec()),
                parent,
            });
            return Ok(self.trace.nodes.len() - 1);
        }
        let mut net = FlowNetwork::new(g);
        let found = self.find_split(&mut net, w);
        self.stats.separator_calls += net.calls();
        self.stats.flow_augmentations += net.augmentations();
        let (x, sides) = found.ok_or(Exceeded)?;
        self.trace.nodes.push(TraceNode {
            w: map(w),
            x: map(&x),
            base: VertexSet::new(),
            parent,
        });
        let id = self.trace.nodes.len() - 1;
        for side in sides.iter().filter(|s| !s.is_empty()) {
            let keep = side.union(&x);
            assert!(keep.len() < n, "recursion must shrink the graph");
            let view = induced_subgraph(g, &keep).expect("side within graph");
            let child_w = view.restrict(&side.intersection(w).union(&x));
            let child_orig: Vec<usize> = keep.iter().map(|v| to_orig[v]).collect();
            self.recurse(&view.graph, &child_orig, &child_w, Some(id))?;
        }
        Ok(id)
    }
}

/// Shared driver: every connected component is decomposed on its own.
fn drive(g: &Graph, mut engine: Engine<'_>) -> (TriangOutcome, RunStats) {
    let k = engine.k;
    for comp in connected_components(g, &VertexSet::new()) {
        let view = induced_subgraph(g, &comp).expect("component within graph");
        if engine
            .recurse(&view.graph, comp.as_slice(), &VertexSet::new(), None)
            .is_err()
        {
            return (TriangOutcome::Exceeds(k), engine.stats);
        }
    }
    let td = assemble_tree_decomposition(&engine.trace);
    let tri = Triangulation::from_decomposition(g, &td);
    (TriangOutcome::Success(Box::new(tri), td), engine.stats)
}

/// Options shared by the separator-based drivers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DriverOptions {
    /// Grow `W′` gradually instead of padding it to the nominal size.
    pub adaptive: bool,
}

fn check_bound(outcome: &TriangOutcome, bound: usize, what: &str) {
    if let TriangOutcome::Success(t, _) = outcome {
        assert!(
            t.clique_number <= bound,
            "{what}: clique number {} exceeds guaranteed {bound}",
            t.clique_number
        );
    }
}

/// Clique-number guarantee of the factor-4 algorithm, `4k + 1`.
pub fn rs4_clique_bound(k: usize) -> usize {
    4 * k + 1
}

/// Clique-number guarantee of the factor-4½ algorithm, `⌊4.5k⌋ + 2`.
pub fn half45_clique_bound(k: usize) -> usize {
    9 * k / 2 + 2
}

pub fn triang_2way_23_with(g: &Graph, k: usize, opts: DriverOptions) -> (TriangOutcome, RunStats) {
    assert!(k >= 1, "k must be at least 1");
    let engine = Engine {
        strategy: Strategy::TwoThirds,
        k,
        base_limit: 4 * k,
        target_w: 3 * k + 2,
        adaptive: opts.adaptive,
        stats: RunStats::default(),
        trace: RecursionTrace::default(),
    };
    let (outcome, stats) = drive(g, engine);
    check_bound(&outcome, rs4_clique_bound(k), "factor-4");
    (outcome, stats)
}

/// Factor-4 triangulation: clique number at most `4k + 1`, or a certificate
/// that the treewidth exceeds `k - 1`.
pub fn triang_2way_23(g: &Graph, k: usize) -> TriangOutcome {
    triang_2way_23_with(g, k, DriverOptions::default()).0
}

pub fn triang_2way_half_with(g: &Graph, k: usize, opts: DriverOptions) -> (TriangOutcome, RunStats) {
    assert!(k >= 1, "k must be at least 1");
    let engine = Engine {
        strategy: Strategy::Half,
        k,
        base_limit: 4 * k,
        target_w: 3 * k + 2,
        adaptive: opts.adaptive,
        stats: RunStats::default(),
        trace: RecursionTrace::default(),
    };
    let (outcome, stats) = drive(g, engine);
    debug_assert!(half_bound(k) <= 3 * k / 2);
    check_bound(&outcome, half45_clique_bound(k), "factor-4.5");
    (outcome, stats)
}

/// Factor-4½ triangulation: clique number at most `⌊4.5k⌋ + 2`.
pub fn triang_2way_half(g: &Graph, k: usize) -> TriangOutcome {
    triang_2way_half_with(g, k, DriverOptions::default()).0
}

pub fn triang_generic_with(
    g: &Graph,
    k: usize,
    oracle: &dyn SeparatorOracle,
    cfg: &GenericConfig<'_>,
    opts: DriverOptions,
) -> (TriangOutcome, RunStats) {
    assert!(k >= 1, "k must be at least 1");
    let engine = Engine {
        strategy: Strategy::Oracle {
            oracle,
            bound: (cfg.bound_fn)(k),
        },
        k,
        base_limit: (cfg.base_fn)(k),
        target_w: (cfg.pad_fn)(k),
        adaptive: opts.adaptive,
        stats: RunStats::default(),
        trace: RecursionTrace::default(),
    };
    drive(g, engine)
}

/// Three-way recursion with a caller-supplied separator oracle. No width
/// guarantee beyond what the oracle provides.
pub fn triang_generic(g: &Graph, k: usize, oracle: &dyn SeparatorOracle, cfg: &GenericConfig<'_>) -> TriangOutcome {
    triang_generic_with(g, k, oracle, cfg, DriverOptions::default()).0
}

pub fn triang_3way_with(g: &Graph, k: usize, alpha: Alpha, opts: DriverOptions) -> (TriangOutcome, RunStats) {
    let bound = move |k| alpha.floor_times(k);
    let base = move |k| alpha.base_limit(k);
    let pad = move |k| alpha.sum_limit(k) + 1;
    let cfg = GenericConfig {
        bound_fn: &bound,
        base_fn: &base,
        pad_fn: &pad,
    };
    let (outcome, stats) = triang_generic_with(g, k, &AlphaSumOracle { alpha }, &cfg, opts);
    check_bound(&outcome, alpha.clique_bound(k), "three-way");
    (outcome, stats)
}

/// Factor-(2α+1) triangulation with three-way α-sum separators; clique
/// number at most `⌈(2α + 1)k⌉`.
pub fn triang_3way(g: &Graph, k: usize, alpha: Alpha) -> TriangOutcome {
    triang_3way_with(g, k, alpha, DriverOptions::default()).0
}

/// Elimination order picking a vertex of minimum current degree (smallest
/// id on ties), plus the bags `{v} ∪ N(v)` at elimination time.
fn min_degree_elimination(g: &Graph) -> (Vec<usize>, Vec<VertexSet>) {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (adj[v].len(), v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut bags = vec![VertexSet::new(); n];
    while let Some((_, v)) = queue.pop_first() {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &u in &nb {
            queue.remove(&(adj[u].len(), u));
        }
        for (i, &a) in nb.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &u in &nb {
            queue.insert((adj[u].len(), u));
        }
        let mut bag: VertexSet = nb.iter().copied().collect();
        bag.insert(v);
        bags[v] = bag;
        order.push(v);
        adj[v].clear();
    }
    (order, bags)
}

/// Min-degree heuristic triangulation. Always succeeds; no width guarantee.
pub fn min_degree_triang(g: &Graph) -> (Triangulation, TreeDecomposition) {
    let n = g.n();
    let (order, vertex_bags) = min_degree_elimination(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Bag i belongs to the i-th eliminated vertex; its parent is the bag of
    // the earliest-eliminated later neighbor.
    let bags: Vec<VertexSet> = order.iter().map(|&v| vertex_bags[v].clone()).collect();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let last = n.saturating_sub(1);
    for (i, &v) in order.iter().enumerate() {
        let parent = vertex_bags[v].iter().filter(|&u| u != v).map(|u| pos[u]).min();
        match parent {
            Some(p) => edges.push((p, i)),
            None if i != last => edges.push((last, i)),
            None => {}
        }
    }
    let td = if bags.is_empty() {
        TreeDecomposition {
            bags: vec![VertexSet::new()],
            edges,
        }
    } else {
        TreeDecomposition { bags, edges }
    };
    let tri = Triangulation::from_decomposition(g, &td);
    (tri, td)
}

/// Algorithms exposed by [`decompose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Factor 4, two-way 2/3-separators.
    Rs4,
    /// Factor 4½, two-way 1/2-separators.
    Half45,
    /// Factor 2α+1 (3⅔ for α = 4/3), three-way α-sum separators.
    Bg367(Alpha),
    /// Min-degree elimination heuristic.
    MinDegree,
    /// Three-way driver with the bisection heuristic as oracle.
    Generic(Alpha),
}

impl Algorithm {
    pub fn id(&self) -> &'static str {
        match self {
            Algorithm::Rs4 => "rs4",
            Algorithm::Half45 => "half45",
            Algorithm::Bg367(_) => "bg367",
            Algorithm::MinDegree => "mindeg",
            Algorithm::Generic(_) => "generic",
        }
    }

    pub fn from_id(id: &str, alpha: Alpha) -> Option<Self> {
        Some(match id {
            "rs4" => Algorithm::Rs4,
            "half45" => Algorithm::Half45,
            "bg367" => Algorithm::Bg367(alpha),
            "mindeg" => Algorithm::MinDegree,
            "generic" => Algorithm::Generic(alpha),
            _ => return None,
        })
    }

    /// Runs the algorithm at a fixed `k`.
    pub fn run(&self, g: &Graph, k: usize, opts: DriverOptions) -> (TriangOutcome, RunStats) {
        match *self {
            Algorithm::Rs4 => triang_2way_23_with(g, k, opts),
            Algorithm::Half45 => triang_2way_half_with(g, k, opts),
            Algorithm::Bg367(alpha) => triang_3way_with(g, k, alpha, opts),
            Algorithm::MinDegree => {
                let (tri, td) = min_degree_triang(g);
                (TriangOutcome::Success(Box::new(tri), td), RunStats::default())
            }
            Algorithm::Generic(alpha) => {
                let bound = move |k| alpha.floor_times(k);
                let base = move |k| alpha.base_limit(k);
                let pad = move |k| alpha.sum_limit(k) + 1;
                let cfg = GenericConfig {
                    bound_fn: &bound,
                    base_fn: &base,
                    pad_fn: &pad,
                };
                triang_generic_with(g, k, &BisectionOracle, &cfg, opts)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// One run at the given `k`.
    Fixed(usize),
    /// Smallest `k = 1, 2, …` at which the algorithm succeeds.
    Search,
    /// As `Search`, with `W′` grown one vertex at a time.
    Adaptive,
}

impl Mode {
    pub fn id(&self) -> &'static str {
        match self {
            Mode::Fixed(_) => "fixed",
            Mode::Search => "search",
            Mode::Adaptive => "adaptive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// The `k` of the reported run; for min-degree, width + 1.
    pub k_used: Option<usize>,
    pub outcome: TriangOutcome,
    pub stats: RunStats,
    pub elapsed: Duration,
}

/// Runs `algo` in the given mode. In search modes every failed trial is a
/// certificate, so the first success is at the least `k` the algorithm can
/// certify.
pub fn decompose(g: &Graph, algo: Algorithm, mode: Mode) -> Decomposition {
    let start = Instant::now();
    if algo == Algorithm::MinDegree {
        let (outcome, stats) = algo.run(g, 1, DriverOptions::default());
        let k_used = outcome.success().map(|(t, _)| t.clique_number.max(1));
        return Decomposition {
            k_used,
            outcome,
            stats,
            elapsed: start.elapsed(),
        };
    }
    let (ks, opts) = match mode {
        Mode::Fixed(k) => (k..=k, DriverOptions::default()),
        Mode::Search => (1..=g.n().max(1), DriverOptions::default()),
        Mode::Adaptive => (1..=g.n().max(1), DriverOptions { adaptive: true }),
    };
    let mut total = RunStats::default();
    let mut last = TriangOutcome::Exceeds(0);
    for k in ks {
        let (outcome, stats) = algo.run(g, k, opts);
        total += stats;
        if outcome.is_success() {
            return Decomposition {
                k_used: Some(k),
                outcome,
                stats: total,
                elapsed: start.elapsed(),
            };
        }
        last = outcome;
    }
    Decomposition {
        k_used: None,
        outcome: last,
        stats: total,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::check_tree_decomposition;

    fn assert_valid(g: &Graph, outcome: &TriangOutcome) -> usize {
        let (tri, td) = outcome.success().expect("success");
        check_tree_decomposition(g, td).unwrap();
        assert!(g.is_subgraph_of(&tri.chordal));
        assert_eq!(tri.clique_number, td.width() + 1);
        tri.clique_number
    }

    #[test]
    fn base_case_k5() {
        let g = Graph::complete(5);
        for out in [triang_2way_23(&g, 4), triang_2way_half(&g, 4)] {
            let (tri, td) = out.success().unwrap();
            assert_eq!(td.bags.len(), 1);
            assert_eq!(tri.clique_number, 5);
            assert!(tri.fill_edges.is_empty());
        }
    }

    #[test]
    fn cliques_exceed() {
        let k10 = Graph::complete(10);
        assert!(matches!(triang_2way_23(&k10, 2), TriangOutcome::Exceeds(2)));
        assert!(matches!(triang_2way_half(&k10, 2), TriangOutcome::Exceeds(2)));
        let k12 = Graph::complete(12);
        assert!(matches!(
            triang_3way(&k12, 2, Alpha::default()),
            TriangOutcome::Exceeds(2)
        ));
    }

    #[test]
    fn paths_and_cycles() {
        let p20 = Graph::path(20);
        assert!(assert_valid(&p20, &triang_2way_23(&p20, 2)) <= 9);
        assert!(assert_valid(&p20, &triang_2way_half(&p20, 2)) <= 11);
        let c20 = Graph::cycle(20);
        assert!(assert_valid(&c20, &triang_2way_23(&c20, 3)) <= 13);
        let p30 = Graph::path(30);
        assert!(assert_valid(&p30, &triang_3way(&p30, 2, Alpha::default())) <= 8);
    }

    #[test]
    fn three_way_base_case() {
        // ⌊(11/3)·3⌋ = 11 vertices fit the base case at k = 3.
        let g = Graph::complete(11);
        let (tri, td) = triang_3way(&g, 3, Alpha::default())
            .success()
            .map(|(t, d)| (t.clone(), d.clone()))
            .unwrap();
        assert_eq!(td.bags.len(), 1);
        assert_eq!(tri.clique_number, 11);
    }

    #[test]
    fn trace_assembly_on_path() {
        let g = Graph::path(5);
        // One split at vertex 2, both sides base cases.
        let trace = RecursionTrace {
            nodes: vec![
                TraceNode {
                    w: VertexSet::new(),
                    x: VertexSet::from([2]),
                    base: VertexSet::new(),
                    parent: None,
                },
                TraceNode {
                    w: VertexSet::from([2]),
                    x: VertexSet::new(),
                    base: VertexSet::from([0, 1, 2]),
                    parent: Some(0),
                },
                TraceNode {
                    w: VertexSet::from([2]),
                    x: VertexSet::new(),
                    base: VertexSet::from([2, 3, 4]),
                    parent: Some(0),
                },
            ],
        };
        let td = assemble_tree_decomposition(&trace);
        assert_eq!(td.edges, vec![(0, 1), (0, 2)]);
        check_tree_decomposition(&g, &td).unwrap();
        assert!(td.bags.iter().all(|b| b.contains(2)));
    }

    #[test]
    fn base_case_only_k4() {
        let g = Graph::complete(4);
        let (_, td) = triang_2way_23(&g, 1)
            .success()
            .map(|(t, d)| (t.clone(), d.clone()))
            .unwrap();
        assert_eq!(td.bags, vec![g.vertices()]);
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn min_degree_families() {
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(min_degree_triang(&tree).1.width(), 1);
        for n in 4..9 {
            let c = Graph::cycle(n);
            let (tri, td) = min_degree_triang(&c);
            assert_eq!(td.width(), 2);
            check_tree_decomposition(&c, &td).unwrap();
            assert_eq!(tri.fill_edges.len(), n - 3);
        }
        let k6 = Graph::complete(6);
        assert_eq!(min_degree_triang(&k6).1.width(), 5);
    }

    #[test]
    fn disconnected_inputs_join_components() {
        let g = Graph::from_edges(12, (0..5).map(|v| (v, v + 1)).chain([(7, 8), (8, 9), (9, 7)])).unwrap();
        for algo in [
            Algorithm::Rs4,
            Algorithm::Half45,
            Algorithm::Bg367(Alpha::default()),
            Algorithm::MinDegree,
        ] {
            let d = decompose(&g, algo, Mode::Search);
            let (_, td) = d.outcome.success().unwrap();
            check_tree_decomposition(&g, td).unwrap();
        }
    }

    #[test]
    fn search_modes() {
        let p10 = Graph::path(10);
        let d = decompose(&p10, Algorithm::Rs4, Mode::Search);
        assert_eq!(d.k_used, Some(1));
        assert!(d.outcome.success().unwrap().1.width() <= 5);

        let k6 = Graph::complete(6);
        for algo in [Algorithm::Rs4, Algorithm::Half45, Algorithm::Bg367(Alpha::default())] {
            let d = decompose(&k6, algo, Mode::Search);
            assert_eq!(d.k_used, Some(2), "{algo:?}");
            assert_eq!(d.outcome.success().unwrap().1.width(), 5);
        }
        let d = decompose(&k6, Algorithm::MinDegree, Mode::Search);
        assert_eq!(d.k_used, Some(6));

        let c10 = Graph::cycle(10);
        let d = decompose(&c10, Algorithm::Half45, Mode::Adaptive);
        let (_, td) = d.outcome.success().unwrap();
        check_tree_decomposition(&c10, td).unwrap();
    }

    #[test]
    fn fixed_mode_reports_exceeds() {
        let d = decompose(&Graph::complete(10), Algorithm::Rs4, Mode::Fixed(2));
        assert_eq!(d.k_used, None);
        assert!(matches!(d.outcome, TriangOutcome::Exceeds(2)));
    }

    struct Never;
    impl SeparatorOracle for Never {
        fn separate(&self, _: &mut FlowNetwork<'_>, _: &VertexSet, _: usize, _: usize) -> Option<ThreeWaySep> {
            None
        }
    }

    #[test]
    fn generic_with_failing_oracle() {
        let bound = |k| k;
        let base = |k| 2 * k;
        let pad = |k| 2 * k + 1;
        let cfg = GenericConfig {
            bound_fn: &bound,
            base_fn: &base,
            pad_fn: &pad,
        };
        let (out, stats) = triang_generic_with(&Graph::path(5), 2, &Never, &cfg, DriverOptions::default());
        assert!(matches!(out, TriangOutcome::Exceeds(2)));
        assert_eq!(stats.recursive_calls, 1);
        assert!(triang_generic(&Graph::path(4), 2, &Never, &cfg).is_success());
    }

    #[test]
    fn generic_with_bisection() {
        let g = Graph::grid(4, 5);
        let bound = |k| k;
        let base = |k| 3 * k;
        let pad = |k| 2 * k + 1;
        let cfg = GenericConfig {
            bound_fn: &bound,
            base_fn: &base,
            pad_fn: &pad,
        };
        let out = triang_generic(&g, 4, &BisectionOracle, &cfg);
        assert_valid(&g, &out);
    }
}
