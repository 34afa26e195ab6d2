//! Balanced separators of a vertex set `W`, found by exhaustive enumeration
//! of the terminal-group choices in canonical order. Each choice is checked
//! with one flow computation; the first successful choice is returned, so a
//! `None` result means no choice works at all.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::flow::{FlowNetwork, Sep3Outcome, SepOutcome, TerminalMode, TerminalSpec};
use crate::graph::{Graph, VertexSet};

/// Combinations of `k` out of `0..n` in colexicographic order, i.e. by
/// increasing combinadic rank.
#[derive(Clone, Debug)]
pub struct Colex {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Self {
        Colex {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.idx.clone();
        let k = self.idx.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k { self.idx[i + 1] } else { self.n };
            if self.idx[i] + 1 < limit {
                self.idx[i] += 1;
                for (j, slot) in self.idx[..i].iter_mut().enumerate() {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(current)
    }
}

/// Picks the elements of `items` at positions `idx`.
fn pick(items: &[usize], idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|&i| items[i]).collect()
}

fn complement(items: &[usize], idx: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(items.len() - idx.len());
    let mut j = 0;
    for (i, &x) in items.iter().enumerate() {
        if j < idx.len() && idx[j] == i {
            j += 1;
        } else {
            out.push(x);
        }
    }
    out
}

/// Separator with exactly two sides; `x`, `s1`, `s2` partition `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoWaySep {
    pub x: VertexSet,
    pub s1: VertexSet,
    pub s2: VertexSet,
}

/// Separator with three sides, at least two of them non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeWaySep {
    pub x: VertexSet,
    pub sides: [VertexSet; 3],
}

impl From<TwoWaySep> for ThreeWaySep {
    fn from(s: TwoWaySep) -> Self {
        ThreeWaySep {
            x: s.x,
            sides: [s.s1, s.s2, VertexSet::new()],
        }
    }
}

fn assert_separates(g: &Graph, x: &VertexSet, sides: &[&VertexSet]) {
    let total: usize = sides.iter().map(|s| s.len()).sum::<usize>() + x.len();
    assert_eq!(total, g.n(), "separator and sides must partition V");
    let mut side_of = vec![usize::MAX; g.n()];
    for (i, s) in sides.iter().enumerate() {
        for v in s.iter() {
            assert_eq!(side_of[v], usize::MAX, "sides overlap at {v}");
            side_of[v] = i;
        }
    }
    for v in x.iter() {
        assert_eq!(side_of[v], usize::MAX, "separator meets a side at {v}");
    }
    for (u, v) in g.edges() {
        let (a, b) = (side_of[u], side_of[v]);
        assert!(
            a == usize::MAX || b == usize::MAX || a == b,
            "edge ({u}, {v}) joins two sides"
        );
    }
}

impl TwoWaySep {
    pub fn assert_valid(&self, g: &Graph) {
        assert_separates(g, &self.x, &[&self.s1, &self.s2]);
        assert!(!self.s1.is_empty() && !self.s2.is_empty(), "empty side");
    }
}

impl ThreeWaySep {
    pub fn assert_valid(&self, g: &Graph) {
        let [a, b, c] = &self.sides;
        assert_separates(g, &self.x, &[a, b, c]);
        assert!(self.non_empty_sides() >= 2, "fewer than two non-empty sides");
    }

    pub fn non_empty_sides(&self) -> usize {
        self.sides.iter().filter(|s| !s.is_empty()).count()
    }
}

/// One split attempt: `w1` and `w2` become cliques with a super-terminal
/// each and the minimum separator between the terminals is computed.
///
/// The clique edges are not materialized: every member of a group is
/// already adjacent to the group's super-terminal, so they change neither
/// the flow value nor the residual-reachable set.
pub fn try_split_on(net: &mut FlowNetwork<'_>, w1: &VertexSet, w2: &VertexSet, bound: usize) -> Option<TwoWaySep> {
    let spec = TerminalSpec::attached(w1.clone(), w2.clone()).ok()?;
    let cut = match net.min_separator(&spec, bound).expect("sides within graph") {
        SepOutcome::Cut(c) => c,
        SepOutcome::Exceeded => return None,
    };
    if cut.side1.is_empty() || cut.side2.is_empty() {
        return None;
    }
    Some(TwoWaySep {
        x: cut.separator,
        s1: cut.side1,
        s2: cut.side2,
    })
}

pub fn try_split(g: &Graph, w1: &VertexSet, w2: &VertexSet, bound: usize) -> Option<TwoWaySep> {
    try_split_on(&mut FlowNetwork::new(g), w1, w2, bound)
}

/// Count of `s ∩ w`.
fn meet(s: &VertexSet, w: &VertexSet) -> usize {
    s.iter().filter(|&v| w.contains(v)).count()
}

/// A 2/3-vertex-separator of `w` of size at most `k`: tries every `W¹` of
/// `⌈|W|/2⌉` vertices and every `W² ⊆ W ∖ W¹` of `⌈|W|/3⌉` vertices.
pub fn two_thirds_vtx_sep_on(net: &mut FlowNetwork<'_>, w: &VertexSet, k: usize) -> Option<TwoWaySep> {
    let items = w.as_slice();
    let size1 = items.len().div_ceil(2);
    let size2 = items.len().div_ceil(3);
    for idx1 in Colex::new(items.len(), size1) {
        let w1 = VertexSet::from_sorted_unchecked(pick(items, &idx1));
        let rest = complement(items, &idx1);
        for idx2 in Colex::new(rest.len(), size2) {
            let w2 = VertexSet::from_sorted_unchecked(pick(&rest, &idx2));
            if let Some(sep) = try_split_on(net, &w1, &w2, k) {
                sep.assert_valid(net.graph());
                assert!(sep.x.len() <= k);
                for s in [&sep.s1, &sep.s2] {
                    assert!(3 * meet(s, w) <= 2 * w.len(), "2/3 balance violated");
                }
                return Some(sep);
            }
        }
    }
    None
}

pub fn two_thirds_vtx_sep(g: &Graph, w: &VertexSet, k: usize) -> Option<TwoWaySep> {
    two_thirds_vtx_sep_on(&mut FlowNetwork::new(g), w, k)
}

/// Separator bound of the half-balanced procedure, `⌊1.5k⌋`.
pub fn half_bound(k: usize) -> usize {
    3 * k / 2
}

/// A two-way 1/2-vertex-separator of `w` of size at most `⌊1.5k⌋`: tries
/// every `W¹` of `⌈|W|/2⌉` vertices against `W² = W ∖ W¹`.
pub fn two_way_half_vtx_sep_on(net: &mut FlowNetwork<'_>, w: &VertexSet, k: usize) -> Option<TwoWaySep> {
    let items = w.as_slice();
    let size1 = items.len().div_ceil(2);
    let bound = half_bound(k);
    for idx1 in Colex::new(items.len(), size1) {
        let w1 = VertexSet::from_sorted_unchecked(pick(items, &idx1));
        let w2 = VertexSet::from_sorted_unchecked(complement(items, &idx1));
        if let Some(sep) = try_split_on(net, &w1, &w2, bound) {
            sep.assert_valid(net.graph());
            assert!(sep.x.len() <= bound);
            for s in [&sep.s1, &sep.s2] {
                assert!(meet(s, w) <= size1, "1/2 balance violated");
            }
            return Some(sep);
        }
    }
    None
}

pub fn two_way_half_vtx_sep(g: &Graph, w: &VertexSet, k: usize) -> Option<TwoWaySep> {
    two_way_half_vtx_sep_on(&mut FlowNetwork::new(g), w, k)
}

/// Rational balance parameter `α ≥ 1` of the three-way algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alpha(Ratio<usize>);

impl Alpha {
    pub fn new(num: usize, den: usize) -> Option<Self> {
        if den == 0 || num < den {
            return None;
        }
        Some(Alpha(Ratio::new(num, den)))
    }

    pub fn floor_times(&self, k: usize) -> usize {
        (self.0 * k).to_integer()
    }

    pub fn ceil_times(&self, k: usize) -> usize {
        (self.0 * k).ceil().to_integer()
    }

    /// `⌊(1 + α)k⌋`, the α-sum limit.
    pub fn sum_limit(&self, k: usize) -> usize {
        k + self.floor_times(k)
    }

    /// `⌈(2α + 1)k⌉`, the guaranteed clique-number bound.
    pub fn clique_bound(&self, k: usize) -> usize {
        k + (self.0 * (2 * k)).ceil().to_integer()
    }

    /// `⌊(2α + 1)k⌋`, the base-case size.
    pub fn base_limit(&self, k: usize) -> usize {
        k + self.floor_times(2 * k)
    }
}

impl Default for Alpha {
    fn default() -> Self {
        Alpha(Ratio::new(4, 3))
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Alpha {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let r: Ratio<usize> = s.trim().parse().map_err(|e| format!("invalid alpha `{s}`: {e}"))?;
        Alpha::new(*r.numer(), *r.denom()).ok_or_else(|| format!("alpha must be a rational >= 1, got `{s}`"))
    }
}

/// Size triples `(|W¹|, |W²|, |W³|)` with `⌊|W|/2⌋ ≥ |W¹| ≥ |W²| ≥ |W³|`,
/// ordered by `(|W¹|, |W²|)` descending.
pub fn partition_sizes(w: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for s1 in (0..=w / 2).rev() {
        for s2 in (0..=s1).rev() {
            if s1 + s2 > w {
                continue;
            }
            let s3 = w - s1 - s2;
            if s3 <= s2 {
                out.push((s1, s2, s3));
            }
        }
    }
    out
}

fn alpha_sum_ok(sep: &ThreeWaySep, w: &VertexSet, limit: usize) -> bool {
    sep.non_empty_sides() >= 2 && sep.sides.iter().all(|s| meet(s, w) + sep.x.len() <= limit)
}

/// An α-sum-separator of `w`: a three-way separator `X` with
/// `|(Sᵢ ∩ W) ∪ X| ≤ (1 + α)k` for every side. Ordered three-way partitions
/// of `W` are enumerated; a partition whose largest part exceeds `k` falls
/// back to a two-way split with bound `k`, otherwise an approximate three-way
/// cut with bound `cut_bound` is tried.
pub fn alpha_sum_sep_on(
    net: &mut FlowNetwork<'_>,
    w: &VertexSet,
    k: usize,
    alpha: Alpha,
    cut_bound: usize,
) -> Option<ThreeWaySep> {
    let items = w.as_slice();
    let limit = alpha.sum_limit(k);
    let mut fallback_done = usize::MAX;
    for (s1, s2, _) in partition_sizes(items.len()) {
        if s1 > k {
            // The fallback only depends on W¹; later size triples with the
            // same |W¹| would repeat the same attempts.
            if fallback_done == s1 {
                continue;
            }
            fallback_done = s1;
            for idx1 in Colex::new(items.len(), s1) {
                let w1 = VertexSet::from_sorted_unchecked(pick(items, &idx1));
                let w23 = VertexSet::from_sorted_unchecked(complement(items, &idx1));
                if let Some(sep) = try_split_on(net, &w1, &w23, k) {
                    let sep = ThreeWaySep::from(sep);
                    if alpha_sum_ok(&sep, w, limit) {
                        sep.assert_valid(net.graph());
                        return Some(sep);
                    }
                }
            }
            continue;
        }
        for idx1 in Colex::new(items.len(), s1) {
            let w1 = VertexSet::from_sorted_unchecked(pick(items, &idx1));
            let rest = complement(items, &idx1);
            for idx2 in Colex::new(rest.len(), s2) {
                let w2 = VertexSet::from_sorted_unchecked(pick(&rest, &idx2));
                let w3 = VertexSet::from_sorted_unchecked(complement(&rest, &idx2));
                let out = net
                    .three_way_cut([&w1, &w2, &w3], TerminalMode::Attached, cut_bound)
                    .expect("groups within graph");
                if let Sep3Outcome::Cut(cut) = out {
                    let sep = ThreeWaySep {
                        x: cut.separator,
                        sides: cut.sides,
                    };
                    if alpha_sum_ok(&sep, w, limit) {
                        sep.assert_valid(net.graph());
                        return Some(sep);
                    }
                }
            }
        }
    }
    None
}

pub fn alpha_sum_sep(g: &Graph, w: &VertexSet, k: usize, alpha: Alpha) -> Option<ThreeWaySep> {
    alpha_sum_sep_on(&mut FlowNetwork::new(g), w, k, alpha, alpha.floor_times(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_clique;

    fn vs<const N: usize>(a: [usize; N]) -> VertexSet {
        VertexSet::from(a)
    }

    #[test]
    fn colex_order() {
        let all: Vec<_> = Colex::new(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(Colex::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(Colex::new(2, 3).count(), 0);
        assert_eq!(Colex::new(10, 4).count(), 210);
    }

    #[test]
    fn partition_sizes_order() {
        assert_eq!(partition_sizes(5), vec![(2, 2, 1)]);
        assert_eq!(partition_sizes(8), vec![(4, 4, 0), (4, 3, 1), (4, 2, 2), (3, 3, 2)]);
    }

    #[test]
    fn alpha_arithmetic() {
        let a = Alpha::default();
        assert_eq!(a.floor_times(3), 4);
        assert_eq!(a.sum_limit(3), 7);
        assert_eq!(a.base_limit(2), 7);
        assert_eq!(a.clique_bound(2), 8);
        assert_eq!(a.clique_bound(3), 11);
        assert_eq!("3/2".parse::<Alpha>().unwrap().floor_times(3), 4);
        assert!("1/2".parse::<Alpha>().is_err());
        assert!("x".parse::<Alpha>().is_err());
    }

    #[test]
    fn split_path_bottleneck() {
        let g = Graph::path(5);
        // Group members are cuttable, so the cut nearest W¹ is {1}.
        let sep = try_split(&g, &vs([0, 1]), &vs([3, 4]), 1).unwrap();
        assert_eq!(sep.x, vs([1]));
        assert_eq!(sep.s1, vs([0]));
        assert_eq!(sep.s2, vs([2, 3, 4]));
        assert!(try_split(&g, &vs([0, 1]), &vs([3, 4]), 0).is_none());
    }

    #[test]
    fn split_clique_fails() {
        let g = Graph::complete(6);
        assert!(try_split(&g, &vs([0, 1]), &vs([2, 3]), 5).is_none());
        assert!(try_split(&g, &vs([0, 1, 2]), &vs([3, 4, 5]), 5).is_none());
    }

    #[test]
    fn split_matches_literal_clique_construction() {
        // Materialize the cliques and both super-terminals as real vertices.
        let g = Graph::grid(3, 4);
        let (w1, w2) = (vs([0, 1, 4, 8]), vs([3, 7, 11]));
        let (h, _) = make_clique(&g, &w1).unwrap();
        let (h, _) = make_clique(&h, &w2).unwrap();
        let (s, t) = (12, 13);
        let h = Graph::from_edges(
            14,
            h.edges()
                .chain(w1.iter().map(|v| (s, v)))
                .chain(w2.iter().map(|v| (t, v))),
        )
        .unwrap();
        let literal = crate::flow::min_vertex_separator(&h, &TerminalSpec::pinned(vs([s]), vs([t])).unwrap(), 12)
            .unwrap()
            .cut()
            .unwrap();
        let sep = try_split(&g, &w1, &w2, 12).unwrap();
        assert_eq!(sep.x, literal.separator);
        assert_eq!(sep.s1, literal.side1.difference(&vs([s])));
    }

    #[test]
    fn two_thirds_on_path() {
        let g = Graph::path(5);
        let sep = two_thirds_vtx_sep(&g, &g.vertices(), 1).unwrap();
        assert_eq!(sep.x.len(), 1);
        for s in [&sep.s1, &sep.s2] {
            assert!(s.len() <= 10 / 3);
        }
    }

    #[test]
    fn two_thirds_clique_not_found() {
        for k in 1..=2 {
            let g = Graph::complete(3 * k + 3);
            assert!(two_thirds_vtx_sep(&g, &g.vertices(), k).is_none());
        }
    }

    #[test]
    fn half_on_path_and_clique() {
        let g = Graph::path(5);
        let sep = two_way_half_vtx_sep(&g, &g.vertices(), 1).unwrap();
        assert_eq!(sep.x.len(), 1);
        assert!(sep.s1.len() <= 3 && sep.s2.len() <= 3);
        let k8 = Graph::complete(8);
        assert!(two_way_half_vtx_sep(&k8, &k8.vertices(), 2).is_none());
    }

    #[test]
    fn alpha_sum_star() {
        let g = Graph::from_edges(8, (1..8).map(|v| (0, v))).unwrap();
        let sep = alpha_sum_sep(&g, &g.vertices(), 3, Alpha::default()).unwrap();
        assert_eq!(sep.x, vs([0]));
        for s in &sep.sides {
            assert!(meet(s, &g.vertices()) < 7);
        }
    }

    #[test]
    fn alpha_sum_clique_not_found() {
        let g = Graph::complete(10);
        assert!(alpha_sum_sep(&g, &g.vertices(), 2, Alpha::default()).is_none());
    }
}
