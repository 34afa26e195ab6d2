//! Immutable simple undirected graphs over dense vertex ids `0..n`, plus the
//! subgraph and clique surgery the triangulation drivers perform.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from already sorted, strictly increasing ids.
    pub(crate) fn from_sorted_unchecked(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Simple undirected graph. Neighbor lists are kept sorted so every traversal
/// visits vertices in a canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, silently dropping self-loops and duplicate edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Graph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("ids in range")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, edges).expect("ids in range")
    }

    /// `rows x cols` grid, vertex `(r, c)` has id `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, edges).expect("ids in range")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.max() {
            Some(v) if v >= self.n() => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let ids = s.as_slice();
        ids.iter()
            .enumerate()
            .all(|(i, &u)| ids[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Union of `self` with extra edges (loops and duplicates ignored).
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.n(), self.edges().chain(extra))
    }

    /// Whether every edge of `self` is an edge of `other` on the same vertex set.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph with local ids `0..kept.len()` in the order of `kept`.
#[derive(Clone, Debug)]
pub struct SubgraphView {
    pub graph: Graph,
    kept: VertexSet,
}

impl SubgraphView {
    /// Parent id of local vertex `local`.
    pub fn to_parent(&self, local: usize) -> usize {
        self.kept.as_slice()[local]
    }

    /// Local id of parent vertex `v`, if kept.
    pub fn to_local(&self, v: usize) -> Option<usize> {
        self.kept.as_slice().binary_search(&v).ok()
    }

    pub fn kept(&self) -> &VertexSet {
        &self.kept
    }

    pub fn lift(&self, local: &VertexSet) -> VertexSet {
        // `kept` is ascending, so the mapping is monotone.
        VertexSet(local.iter().map(|v| self.to_parent(v)).collect())
    }

    /// Maps parent ids to local ids, dropping vertices outside `kept`.
    pub fn restrict(&self, parent: &VertexSet) -> VertexSet {
        VertexSet(parent.iter().filter_map(|v| self.to_local(v)).collect())
    }
}

pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> Result<SubgraphView, GraphError> {
    g.check_set(keep)?;
    let mut local = vec![usize::MAX; g.n()];
    for (i, v) in keep.iter().enumerate() {
        local[v] = i;
    }
    let adj = keep
        .iter()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
    Ok(SubgraphView {
        graph: Graph { adj, m },
        kept: keep.clone(),
    })
}

/// Adds every missing pair inside `s`. Returns the new graph and the pairs
/// that were added, each as `(u, v)` with `u < v` in lexicographic order.
pub fn make_clique(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
    g.check_set(s)?;
    let ids = s.as_slice();
    let mut fill = Vec::new();
    for (i, &u) in ids.iter().enumerate() {
        for &v in &ids[i + 1..] {
            if !g.has_edge(u, v) {
                fill.push((u, v));
            }
        }
    }
    if fill.is_empty() {
        return Ok((g.clone(), fill));
    }
    let mut adj = g.adj.clone();
    for &(u, v) in &fill {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let graph = Graph {
        adj,
        m: g.m + fill.len(),
    };
    Ok((graph, fill))
}

/// Connected components of `g - removed`, ordered by their smallest vertex.
pub fn connected_components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    for v in removed.iter().filter(|&v| v < n) {
        seen[v] = true;
    }
    let mut comps = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comps.push(comp.into_iter().collect());
    }
    comps
}
