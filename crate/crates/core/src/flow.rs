//! Minimum vertex separators through unit-capacity augmenting paths.
//!
//! Every vertex `v` is split into `v_in -> v_out` with capacity one and every
//! undirected edge `{u, v}` becomes the two uncapacitated arcs `u_out -> v_in`
//! and `v_out -> u_in`. The super-source and super-sink are never
//! materialized: the breadth-first search starts from the source attachments
//! and stops at any sink attachment. Each augmenting path carries exactly one
//! unit, so the search stops after `bound + 1` augmentations at the latest.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::FlowError;
use crate::graph::{Graph, VertexSet};

/// How terminal groups connect to the super-terminals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TerminalMode {
    /// The super-terminal is a new vertex adjacent to every group member.
    /// Group members are ordinary vertices and may end up in the separator.
    Attached,
    /// Group members are the terminals themselves and can never be cut.
    /// Adjacent members of opposite groups make the instance inseparable.
    Pinned,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalSpec {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub mode: TerminalMode,
}

impl TerminalSpec {
    pub fn new(side_a: VertexSet, side_b: VertexSet, mode: TerminalMode) -> Result<Self, FlowError> {
        if side_a.is_empty() {
            return Err(FlowError::EmptySide("a"));
        }
        if side_b.is_empty() {
            return Err(FlowError::EmptySide("b"));
        }
        if let Some(v) = side_a.iter().find(|&v| side_b.contains(v)) {
            return Err(FlowError::OverlappingSides(v));
        }
        Ok(TerminalSpec { side_a, side_b, mode })
    }

    pub fn attached(side_a: VertexSet, side_b: VertexSet) -> Result<Self, FlowError> {
        Self::new(side_a, side_b, TerminalMode::Attached)
    }

    pub fn pinned(side_a: VertexSet, side_b: VertexSet) -> Result<Self, FlowError> {
        Self::new(side_a, side_b, TerminalMode::Pinned)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub separator: VertexSet,
    /// Vertices reachable from the source in the final residual network.
    pub side1: VertexSet,
    pub side2: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SepOutcome {
    Cut(CutResult),
    Exceeded,
}

impl SepOutcome {
    pub fn cut(self) -> Option<CutResult> {
        match self {
            SepOutcome::Cut(c) => Some(c),
            SepOutcome::Exceeded => None,
        }
    }
}

/// A separator of three terminal groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult3 {
    pub separator: VertexSet,
    pub sides: [VertexSet; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sep3Outcome {
    Cut(CutResult3),
    Exceeded,
}

static CALLS: AtomicU64 = AtomicU64::new(0);
static AUGMENTATIONS: AtomicU64 = AtomicU64::new(0);
static MAX_OVERSHOOT: AtomicU64 = AtomicU64::new(0);
static BOUND_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide counters over every separator computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FlowStats {
    pub calls: u64,
    pub augmentations: u64,
    /// Calls that performed more than `bound + 1` augmentations.
    pub bound_violations: u64,
    /// Largest `augmentations - bound` seen (1 means an early exit).
    pub max_overshoot: u64,
}

pub fn flow_stats() -> FlowStats {
    FlowStats {
        calls: CALLS.load(Ordering::Relaxed),
        augmentations: AUGMENTATIONS.load(Ordering::Relaxed),
        bound_violations: BOUND_VIOLATIONS.load(Ordering::Relaxed),
        max_overshoot: MAX_OVERSHOOT.load(Ordering::Relaxed),
    }
}

fn record_call(augmentations: usize, bound: usize) {
    CALLS.fetch_add(1, Ordering::Relaxed);
    AUGMENTATIONS.fetch_add(augmentations as u64, Ordering::Relaxed);
    if augmentations > bound {
        MAX_OVERSHOOT.fetch_max((augmentations - bound) as u64, Ordering::Relaxed);
    }
    if augmentations > bound + 1 {
        BOUND_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
}

const INF: u32 = u32::MAX / 2;
const NONE: u32 = u32::MAX;
const ROLE_A: u8 = 1;
const ROLE_B: u8 = 2;

/// Split-vertex residual network for one graph, reusable across many
/// separator queries on that graph.
#[derive(Clone, Debug)]
pub struct FlowNetwork<'g> {
    graph: &'g Graph,
    first: Vec<u32>,
    to: Vec<u32>,
    rev: Vec<u32>,
    base_cap: Vec<u32>,
    cap: Vec<u32>,
    touched: Vec<u32>,
    mark: Vec<u32>,
    stamp: u32,
    parent: Vec<u32>,
    role: Vec<u8>,
    queue: VecDeque<u32>,
    calls: u64,
    augmentations: u64,
}

#[inline]
fn node_in(v: usize) -> usize {
    2 * v
}

#[inline]
fn node_out(v: usize) -> usize {
    2 * v + 1
}

impl<'g> FlowNetwork<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.n();
        let nodes = 2 * n;
        let mut first = Vec::with_capacity(nodes + 1);
        let mut arcs = 0u32;
        for v in 0..n {
            // v_in: split arc + reverses of incoming edge arcs.
            first.push(arcs);
            arcs += 1 + graph.degree(v) as u32;
            // v_out: reverse of split arc + outgoing edge arcs.
            first.push(arcs);
            arcs += 1 + graph.degree(v) as u32;
        }
        first.push(arcs);
        let total = arcs as usize;
        let mut to = vec![0u32; total];
        let mut rev = vec![0u32; total];
        let mut base_cap = vec![0u32; total];

        // Position of neighbor u in v's (sorted) list gives the arc slot.
        for v in 0..n {
            let vin = first[node_in(v)] as usize;
            let vout = first[node_out(v)] as usize;
            to[vin] = node_out(v) as u32;
            rev[vin] = vout as u32;
            base_cap[vin] = 1;
            to[vout] = node_in(v) as u32;
            rev[vout] = vin as u32;
            for (i, &u) in graph.neighbors(v).iter().enumerate() {
                // v_out -> u_in, paired with the reverse slot stored at u_in.
                let fwd = vout + 1 + i;
                let j = graph.neighbors(u).binary_search(&v).expect("symmetric adjacency");
                let back = first[node_in(u)] as usize + 1 + j;
                to[fwd] = node_in(u) as u32;
                rev[fwd] = back as u32;
                base_cap[fwd] = INF;
                to[back] = node_out(v) as u32;
                rev[back] = fwd as u32;
            }
        }
        FlowNetwork {
            graph,
            first,
            to,
            rev,
            cap: base_cap.clone(),
            base_cap,
            touched: Vec::new(),
            mark: vec![0; nodes],
            stamp: 0,
            parent: vec![NONE; nodes],
            role: vec![0; n],
            queue: VecDeque::new(),
            calls: 0,
            augmentations: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Separator computations run on this network so far.
    pub fn calls(&self) -> u64 {
        self.calls
    }

    /// Augmenting paths found on this network so far.
    pub fn augmentations(&self) -> u64 {
        self.augmentations
    }

    fn reset(&mut self) {
        for &a in &self.touched {
            self.cap[a as usize] = self.base_cap[a as usize];
        }
        self.touched.clear();
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.fill(0);
            self.stamp = 1;
        }
        self.stamp
    }

    fn visit(&mut self, node: usize, via: u32, stamp: u32) {
        self.mark[node] = stamp;
        self.parent[node] = via;
        self.queue.push_back(node as u32);
    }

    fn is_sink(&self, node: usize, mode: TerminalMode) -> bool {
        let v = node / 2;
        self.role[v] == ROLE_B && (node % 2 == 1 || mode == TerminalMode::Pinned)
    }

    /// One breadth-first search from the source attachments. Returns the
    /// sink-side node where an augmenting path ends, if any. The marks of the
    /// last search describe the residual-reachable set.
    fn search(&mut self, sources: &VertexSet, mode: TerminalMode) -> Option<usize> {
        let stamp = self.next_stamp();
        self.queue.clear();
        for a in sources.iter() {
            self.visit(node_in(a), NONE, stamp);
            if mode == TerminalMode::Pinned {
                self.visit(node_out(a), NONE, stamp);
            }
        }
        while let Some(node) = self.queue.pop_front() {
            let node = node as usize;
            if self.is_sink(node, mode) {
                return Some(node);
            }
            let (lo, hi) = (self.first[node] as usize, self.first[node + 1] as usize);
            for arc in lo..hi {
                let next = self.to[arc] as usize;
                if self.cap[arc] > 0 && self.mark[next] != stamp {
                    self.visit(next, arc as u32, stamp);
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut node = end;
        while self.parent[node] != NONE {
            let arc = self.parent[node] as usize;
            let back = self.rev[arc] as usize;
            debug_assert!(self.cap[arc] > 0);
            self.cap[arc] -= 1;
            self.cap[back] += 1;
            self.touched.push(arc as u32);
            self.touched.push(back as u32);
            node = self.to[back] as usize;
        }
    }

    fn set_roles(&mut self, a: &VertexSet, b: &VertexSet) {
        for v in a.iter() {
            self.role[v] = ROLE_A;
        }
        for v in b.iter() {
            self.role[v] = ROLE_B;
        }
    }

    fn clear_roles(&mut self, a: &VertexSet, b: &VertexSet) {
        for v in a.iter().chain(b.iter()) {
            self.role[v] = 0;
        }
    }

    /// Minimum separator between the two sides of `t`, or `Exceeded` once
    /// `bound + 1` vertex-disjoint augmenting paths have been found.
    pub fn min_separator(&mut self, t: &TerminalSpec, bound: usize) -> Result<SepOutcome, FlowError> {
        self.graph.check_set(&t.side_a)?;
        self.graph.check_set(&t.side_b)?;
        let (outcome, augmentations) = self.run(&t.side_a, &t.side_b, t.mode, bound);
        record_call(augmentations, bound);
        self.calls += 1;
        self.augmentations += augmentations as u64;
        Ok(outcome)
    }

    fn run(&mut self, a: &VertexSet, b: &VertexSet, mode: TerminalMode, bound: usize) -> (SepOutcome, usize) {
        if mode == TerminalMode::Pinned && a.iter().any(|u| self.graph.neighbors(u).iter().any(|&v| b.contains(v))) {
            return (SepOutcome::Exceeded, 0);
        }
        self.reset();
        self.set_roles(a, b);
        let mut flow = 0;
        let outcome = loop {
            match self.search(a, mode) {
                Some(end) => {
                    self.augment(end);
                    flow += 1;
                    if flow > bound {
                        break SepOutcome::Exceeded;
                    }
                }
                None => break SepOutcome::Cut(self.extract_cut(flow)),
            }
        };
        self.clear_roles(a, b);
        (outcome, flow)
    }

    /// Reads the cut off the marks of the final, failed search.
    fn extract_cut(&self, flow: usize) -> CutResult {
        let n = self.graph.n();
        let stamp = self.stamp;
        let (mut separator, mut side1, mut side2) = (Vec::new(), Vec::new(), Vec::new());
        for v in 0..n {
            let reach_in = self.mark[node_in(v)] == stamp;
            let reach_out = self.mark[node_out(v)] == stamp;
            if reach_out {
                side1.push(v);
            } else if reach_in {
                separator.push(v);
            } else {
                side2.push(v);
            }
        }
        let cut = CutResult {
            separator: VertexSet::from_sorted_unchecked(separator),
            side1: VertexSet::from_sorted_unchecked(side1),
            side2: VertexSet::from_sorted_unchecked(side2),
        };
        assert_eq!(cut.separator.len(), flow, "cut size must equal flow value");
        assert_cut_invariants(self.graph, &cut);
        cut
    }

    /// Decomposes the current flow into vertex sequences from side a to
    /// side b. Only meaningful right after a `min_separator` call that
    /// returned a cut.
    pub fn flow_paths(&self) -> Vec<Vec<usize>> {
        let mut flow: Vec<u32> = (0..self.cap.len())
            .map(|a| self.base_cap[a].saturating_sub(self.cap[a]))
            .collect();
        let n = self.graph.n();
        // Net supply per node from the implicit super-source.
        let mut supply = vec![0i64; 2 * n];
        for node in 0..2 * n {
            for arc in self.first[node] as usize..self.first[node + 1] as usize {
                let f = flow[arc] as i64;
                supply[node] += f;
                supply[self.to[arc] as usize] -= f;
            }
        }
        let mut paths = Vec::new();
        for start in 0..2 * n {
            while supply[start] > 0 {
                let mut nodes = vec![start];
                let mut node = start;
                while supply[node] >= 0 || node == start {
                    let arc = (self.first[node] as usize..self.first[node + 1] as usize).find(|&a| flow[a] > 0);
                    let Some(arc) = arc else { break };
                    flow[arc] -= 1;
                    node = self.to[arc] as usize;
                    if let Some(pos) = nodes.iter().position(|&x| x == node) {
                        // Cancelled cycle.
                        nodes.truncate(pos + 1);
                    } else {
                        nodes.push(node);
                    }
                    if supply[node] < 0 {
                        break;
                    }
                }
                supply[start] -= 1;
                supply[node] += 1;
                let mut path: Vec<usize> = Vec::new();
                for x in nodes {
                    if path.last() != Some(&(x / 2)) {
                        path.push(x / 2);
                    }
                }
                paths.push(path);
            }
        }
        paths
    }
}

pub(crate) fn assert_cut_invariants(g: &Graph, cut: &CutResult) {
    let n = g.n();
    assert_eq!(
        cut.separator.len() + cut.side1.len() + cut.side2.len(),
        n,
        "cut must partition the vertex set"
    );
    for (u, v) in g.edges() {
        let crosses =
            (cut.side1.contains(u) && cut.side2.contains(v)) || (cut.side2.contains(u) && cut.side1.contains(v));
        assert!(!crosses, "edge ({u}, {v}) crosses the cut");
    }
}

/// Minimum vertex separator between the two sides of `t`. Returns `Exceeded`
/// exactly when the minimum is larger than `bound`.
pub fn min_vertex_separator(g: &Graph, t: &TerminalSpec, bound: usize) -> Result<SepOutcome, FlowError> {
    FlowNetwork::new(g).min_separator(t, bound)
}

/// Vertex-disjoint paths realizing a maximum flow between the sides of `t`
/// (at most `limit + 1` of them).
pub fn disjoint_paths(g: &Graph, t: &TerminalSpec, limit: usize) -> Result<Vec<Vec<usize>>, FlowError> {
    let mut net = FlowNetwork::new(g);
    net.min_separator(t, limit)?;
    Ok(net.flow_paths())
}

impl FlowNetwork<'_> {
    /// Multiway cut of three terminal groups from isolating cuts: each group
    /// is cut away from the union of the other two by a minimum separator, and
    /// the two cheapest isolating cuts are united. Empty groups are allowed
    /// and have an empty isolating cut.
    pub fn three_way_cut(
        &mut self,
        groups: [&VertexSet; 3],
        mode: TerminalMode,
        bound: usize,
    ) -> Result<Sep3Outcome, FlowError> {
        for (i, gi) in groups.iter().enumerate() {
            self.graph.check_set(gi)?;
            for gj in &groups[i + 1..] {
                if let Some(v) = gi.iter().find(|&v| gj.contains(v)) {
                    return Err(FlowError::OverlappingSides(v));
                }
            }
        }
        let mut isolating: Vec<(usize, Option<VertexSet>)> = Vec::with_capacity(3);
        for i in 0..3 {
            let others = groups[(i + 1) % 3].union(groups[(i + 2) % 3]);
            let cut = if groups[i].is_empty() || others.is_empty() {
                Some(VertexSet::new())
            } else {
                // Source on the other groups: the returned cut is the one
                // closest to them, leaving group i the largest region.
                let spec = TerminalSpec {
                    side_a: others,
                    side_b: groups[i].clone(),
                    mode,
                };
                self.min_separator(&spec, bound)?.cut().map(|c| c.separator)
            };
            isolating.push((i, cut));
        }
        isolating.sort_by_key(|(i, c)| (c.as_ref().map_or(usize::MAX, VertexSet::len), *i));
        let (Some(x1), Some(x2)) = (&isolating[0].1, &isolating[1].1) else {
            return Ok(Sep3Outcome::Exceeded);
        };
        let separator = x1.union(x2);
        if separator.len() > bound {
            return Ok(Sep3Outcome::Exceeded);
        }
        let sides = label_sides(self.graph, &separator, groups);
        Ok(Sep3Outcome::Cut(CutResult3 { separator, sides }))
    }
}

/// Assigns each component of `g - separator` to the group it touches;
/// components touching no group go to the last side.
fn label_sides(g: &Graph, separator: &VertexSet, groups: [&VertexSet; 3]) -> [VertexSet; 3] {
    const FREE: u8 = u8::MAX;
    let n = g.n();
    let mut label = vec![FREE; n];
    let mut blocked = vec![false; n];
    for v in separator.iter() {
        blocked[v] = true;
    }
    let mut queue = VecDeque::new();
    for (i, group) in groups.iter().enumerate() {
        let i = i as u8;
        for s in group.iter().filter(|&s| !blocked[s]) {
            if label[s] == FREE {
                label[s] = i;
                queue.push_back(s);
            }
            assert_eq!(label[s], i, "terminal groups not separated");
        }
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if blocked[u] {
                    continue;
                }
                if label[u] == FREE {
                    label[u] = i;
                    queue.push_back(u);
                }
                assert_eq!(label[u], i, "terminal groups not separated");
            }
        }
    }
    let mut sides: [Vec<usize>; 3] = Default::default();
    for v in 0..n {
        if blocked[v] {
            continue;
        }
        let side = if label[v] == FREE { 2 } else { label[v] as usize };
        sides[side].push(v);
    }
    sides.map(VertexSet::from_sorted_unchecked)
}

/// Approximate minimum vertex cut separating three terminal groups, built
/// from isolating cuts. Returns `Exceeded` when the cut is larger than
/// `bound`.
pub fn approx_3way_vertex_cut(
    g: &Graph,
    t1: &VertexSet,
    t2: &VertexSet,
    t3: &VertexSet,
    mode: TerminalMode,
    bound: usize,
) -> Result<Sep3Outcome, FlowError> {
    FlowNetwork::new(g).three_way_cut([t1, t2, t3], mode, bound)
}
