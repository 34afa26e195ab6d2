//! Independent correctness machinery: chordality certificates, tree
//! decomposition checking and exponential brute-force oracles for small
//! graphs. Nothing here shares code with the flow or separator modules.

use std::collections::VecDeque;
use std::fmt;

use crate::error::OracleError;
use crate::flow::{TerminalMode, TerminalSpec};
use crate::graph::{Graph, VertexSet};
use crate::triangulation::TreeDecomposition;

/// Vertex order in which each vertex's later neighbors form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering(pub Vec<usize>);

impl EliminationOrdering {
    pub fn positions(&self, n: usize) -> Result<Vec<usize>, OracleError> {
        if self.0.len() != n {
            return Err(OracleError::NotAPermutation);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(OracleError::NotAPermutation);
            }
            pos[v] = i;
        }
        Ok(pos)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrdering),
    /// A chordless cycle of length at least four, in cyclic order.
    NotChordal(Vec<usize>),
}

/// Maximum cardinality search; the reverse visiting order is a perfect
/// elimination ordering exactly when `g` is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    // Buckets of unnumbered vertices by weight; lazy deletion.
    let mut buckets: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
    let mut best = 0usize;
    let mut visit = Vec::with_capacity(n);
    while visit.len() < n {
        let v = loop {
            match buckets[best].pop() {
                Some(v) if !numbered[v] && weight[v] == best => break v,
                Some(_) => continue,
                None => best -= 1,
            }
        };
        numbered[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !numbered[u] {
                weight[u] += 1;
                if buckets.len() <= weight[u] {
                    buckets.push(Vec::new());
                }
                buckets[weight[u]].push(u);
                best = best.max(weight[u]);
            }
        }
    }
    visit.reverse();
    visit
}

/// First vertex whose later neighbors are not a clique, with two
/// non-adjacent later neighbors.
fn first_imperfection(g: &Graph, order: &[usize], pos: &[usize]) -> Option<(usize, usize, usize)> {
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &u in &later {
            if u != parent && !g.has_edge(parent, u) {
                return Some((v, parent, u));
            }
        }
    }
    None
}

/// Chordless cycle through `v`, `x`, `y` (with `x`, `y` non-adjacent
/// neighbors of `v`), closed by a shortest `x`–`y` path avoiding the rest of
/// `v`'s closed neighborhood.
fn chordless_cycle_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &u in g.neighbors(v) {
        blocked[u] = u != x && u != y;
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([x]);
    prev[x] = x;
    while let Some(a) = queue.pop_front() {
        if a == y {
            break;
        }
        for &b in g.neighbors(a) {
            if !blocked[b] && prev[b] == usize::MAX {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    if prev[y] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut path = vec![y];
    while *path.last().unwrap() != x {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    cycle.extend(path);
    Some(cycle)
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let Some((v, x, y)) = first_imperfection(g, &order, &pos) else {
        return Chordality::Chordal(EliminationOrdering(order));
    };
    if let Some(c) = chordless_cycle_through(g, v, x, y) {
        return Chordality::NotChordal(c);
    }
    // Any chordless cycle passes through some vertex and two of its
    // non-adjacent neighbors, so this scan always finds one.
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !g.has_edge(x, y) {
                    if let Some(c) = chordless_cycle_through(g, v, x, y) {
                        return Chordality::NotChordal(c);
                    }
                }
            }
        }
    }
    unreachable!("imperfect elimination order without a chordless cycle")
}

/// Whether `cycle` is a chordless cycle of length at least four in `g`.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 4 || VertexSet::from(cycle.to_vec()).len() != len {
        return false;
    }
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Clique number of a chordal graph from a perfect elimination ordering.
pub fn clique_number_chordal(g: &Graph, peo: &EliminationOrdering) -> Result<usize, OracleError> {
    let pos = peo.positions(g.n())?;
    if let Some((v, _, _)) = first_imperfection(g, &peo.0, &pos) {
        return Err(OracleError::NotPerfect(v));
    }
    Ok(peo
        .0
        .iter()
        .map(|&v| 1 + g.neighbors(v).iter().filter(|&&u| pos[u] > pos[v]).count())
        .max()
        .unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BagVertexOutOfRange {
        bag: usize,
        vertex: usize,
    },
    TreeEdgeOutOfRange {
        edge: (usize, usize),
    },
    TreeSelfLoop {
        bag: usize,
    },
    /// The edge closes a cycle among the tree edges.
    TreeCycle {
        edge: (usize, usize),
    },
    /// The tree edges leave `components` connected pieces.
    TreeDisconnected {
        components: usize,
    },
    /// A vertex in no bag.
    VertexUncovered {
        vertex: usize,
    },
    /// An edge in no bag.
    EdgeUncovered {
        edge: (usize, usize),
    },
    /// The bags holding `vertex` do not form a subtree.
    SubtreeDisconnected {
        vertex: usize,
        pieces: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based ids, matching the file formats.
        match *self {
            Violation::BagVertexOutOfRange { bag, vertex } => {
                write!(f, "bag {} contains out-of-range vertex {}", bag + 1, vertex + 1)
            }
            Violation::TreeEdgeOutOfRange { edge } => {
                write!(f, "tree edge {} {} references a missing bag", edge.0 + 1, edge.1 + 1)
            }
            Violation::TreeSelfLoop { bag } => write!(f, "tree edge loops at bag {}", bag + 1),
            Violation::TreeCycle { edge } => {
                write!(f, "tree edge {} {} closes a cycle", edge.0 + 1, edge.1 + 1)
            }
            Violation::TreeDisconnected { components } => {
                write!(f, "decomposition tree has {components} components")
            }
            Violation::VertexUncovered { vertex } => write!(f, "vertex {} is in no bag", vertex + 1),
            Violation::EdgeUncovered { edge } => {
                write!(f, "edge {} {} is in no bag", edge.0 + 1, edge.1 + 1)
            }
            Violation::SubtreeDisconnected { vertex, pieces } => {
                write!(
                    f,
                    "bags containing vertex {} form {pieces} disconnected pieces",
                    vertex + 1
                )
            }
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Checks the tree shape and the three decomposition conditions, reporting
/// every violation found.
pub fn check_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<(), Vec<Violation>> {
    let n = g.n();
    let nb = td.bags.len();
    let mut out = Vec::new();

    for (i, bag) in td.bags.iter().enumerate() {
        for v in bag.iter().filter(|&v| v >= n) {
            out.push(Violation::BagVertexOutOfRange { bag: i, vertex: v });
        }
    }

    let mut uf: Vec<usize> = (0..nb).collect();
    let mut tree_adj = vec![Vec::new(); nb];
    for &(a, b) in &td.edges {
        if a >= nb || b >= nb {
            out.push(Violation::TreeEdgeOutOfRange { edge: (a, b) });
            continue;
        }
        if a == b {
            out.push(Violation::TreeSelfLoop { bag: a });
            continue;
        }
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra == rb {
            out.push(Violation::TreeCycle { edge: (a, b) });
        } else {
            uf[ra] = rb;
        }
        tree_adj[a].push(b);
        tree_adj[b].push(a);
    }
    let roots = (0..nb).filter(|&i| find(&mut uf, i) == i).count();
    if roots > 1 {
        out.push(Violation::TreeDisconnected { components: roots });
    }

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for v in bag.iter().filter(|&v| v < n) {
            holders[v].push(i);
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            out.push(Violation::VertexUncovered { vertex: v });
        }
    }
    for (u, v) in g.edges() {
        let covered = holders[u].iter().any(|&i| td.bags[i].contains(v));
        if !covered {
            out.push(Violation::EdgeUncovered { edge: (u, v) });
        }
    }

    // Subtree property: count connected pieces of the tree restricted to the
    // bags holding v.
    let mut holds = vec![false; nb];
    let mut seen = vec![false; nb];
    for (v, h) in holders.iter().enumerate() {
        if h.len() <= 1 {
            continue;
        }
        for &i in h {
            holds[i] = true;
        }
        let mut pieces = 0;
        for &start in h {
            if seen[start] {
                continue;
            }
            pieces += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for &j in &tree_adj[i] {
                    if holds[j] && !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        if pieces > 1 {
            out.push(Violation::SubtreeDisconnected { vertex: v, pieces });
        }
        for &i in h {
            holds[i] = false;
            seen[i] = false;
        }
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

pub const EXACT_TREEWIDTH_MAX_N: usize = 14;
pub const BRUTE_FORCE_SEPARATOR_MAX_N: usize = 10;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect()
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`: the
/// neighborhood of `v` once every vertex of `s` has been eliminated.
fn eliminated_neighborhood(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut reached = 1u32 << v;
    let mut frontier = reached;
    let mut boundary = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        next &= !reached;
        reached |= next;
        boundary |= next & !s;
        frontier = next & s;
    }
    boundary
}

/// Exact treewidth by dynamic programming over the set of eliminated
/// vertices: `TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|)`.
pub fn exact_treewidth(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > EXACT_TREEWIDTH_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: EXACT_TREEWIDTH_MAX_N,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let full = (1usize << n) - 1;
    let mut tw = vec![u8::MAX; full + 1];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let q = eliminated_neighborhood(&adj, rest as u32, v).count_ones() as u8;
            best = best.min(tw[rest].max(q));
        }
        tw[s] = best;
    }
    Ok(tw[full] as usize)
}

fn reaches(adj: &[u32], alive: u32, from: u32, to: u32) -> bool {
    let mut reached = from & alive;
    let mut frontier = reached;
    while frontier != 0 {
        if reached & to != 0 {
            return true;
        }
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        next &= alive & !reached;
        reached |= next;
        frontier = next;
    }
    reached & to != 0
}

fn mask_of(s: &VertexSet) -> u32 {
    s.iter().fold(0u32, |m, v| m | (1 << v))
}

/// Smallest `|X|` with no path between the terminal groups in `g - X`,
/// where the groups' own vertices may be removed unless pinned. `None`
/// when no such set exists.
pub fn brute_force_min_multiway_cut(
    g: &Graph,
    groups: &[VertexSet],
    mode: TerminalMode,
) -> Result<Option<usize>, OracleError> {
    let n = g.n();
    if n > BRUTE_FORCE_SEPARATOR_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: BRUTE_FORCE_SEPARATOR_MAX_N,
        });
    }
    let adj = adjacency_masks(g);
    let masks: Vec<u32> = groups.iter().map(mask_of).collect();
    let forbidden = match mode {
        TerminalMode::Pinned => masks.iter().fold(0, |a, &m| a | m),
        TerminalMode::Attached => 0,
    };
    let full = (1u32 << n) - 1;
    let mut best: Option<usize> = None;
    for x in 0..=full {
        if x & forbidden != 0 {
            continue;
        }
        let size = x.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let alive = full & !x;
        let separated = (0..masks.len())
            .all(|i| (i + 1..masks.len()).all(|j| !reaches(&adj, alive, masks[i] & alive, masks[j] & alive)));
        if separated {
            best = Some(size);
        }
    }
    Ok(best)
}

pub fn brute_force_min_separator(g: &Graph, t: &TerminalSpec) -> Result<Option<usize>, OracleError> {
    brute_force_min_multiway_cut(g, &[t.side_a.clone(), t.side_b.clone()], t.mode)
}

/// Smallest `X` admitting two sides `S₁`, `S₂` (unions of components of
/// `g - X`) with `|Sᵢ ∩ W| ≤ ⌈|W|/2⌉`. Exponential in `n` and in the number
/// of components.
pub fn brute_force_two_way_half_separator(g: &Graph, w: &VertexSet) -> Result<Option<usize>, OracleError> {
    let n = g.n();
    if n > 16 {
        return Err(OracleError::TooLarge { n, max: 16 });
    }
    let adj = adjacency_masks(g);
    let wm = mask_of(w);
    let cap = w.len().div_ceil(2) as u32;
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut best: Option<usize> = None;
    for x in 0..=full {
        let size = x.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let alive = full & !x;
        // W-counts per component.
        let mut counts = Vec::new();
        let mut left = alive;
        while left != 0 {
            let start = 1u32 << left.trailing_zeros();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[u];
                }
                next &= alive & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            counts.push((comp & wm).count_ones());
        }
        let c = counts.len();
        if c < 2 {
            continue;
        }
        let total: u32 = counts.iter().sum();
        // Both sides must be non-empty: proper non-empty subsets.
        let ok = (1u32..(1 << c) - 1).any(|sub| {
            let a: u32 = (0..c).filter(|i| sub >> i & 1 == 1).map(|i| counts[i]).sum();
            a <= cap && total - a <= cap
        });
        if ok {
            best = Some(size);
        }
    }
    Ok(best)
}
