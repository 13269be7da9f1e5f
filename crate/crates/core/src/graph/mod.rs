//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Every other module works on [`Graph`]. Adjacency is stored as one sorted
//! neighbor list per vertex, which keeps edge lookups logarithmic and makes
//! iteration order deterministic.

pub(crate) mod canon;
pub mod io;

pub use canon::{
    canonical_key, contains_induced, is_isomorphic, CanonicalKey, CANON_MAX_N, PATTERN_MAX_N,
};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::recognition::DegreeSequence;

/// A simple undirected graph. Vertices are `0..n`.
///
/// Invariants: adjacency is symmetric, loop-free, and every neighbor index
/// is below `n`. Neighbor lists are kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g.m = n * n.saturating_sub(1) / 2;
        g
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n)
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("petersen edges are valid")
    }

    /// Complete multipartite graph with the given part sizes, parts laid out
    /// consecutively in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &a) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, a));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| part_of[v] != part_of[u]).collect();
            g.m += g.adj[u].len();
        }
        g.m /= 2;
        g
    }

    /// Disjoint union of complete graphs with the given sizes.
    pub fn clique_union(parts: &[usize]) -> Self {
        let cliques: Vec<Graph> = parts.iter().map(|&a| Graph::complete(a)).collect();
        disjoint_union(&cliques)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Inserts `{u, v}`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    /// Deletes `{u, v}`. Returns `false` if the edge was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                self.m -= 1;
                Ok(true)
            }
            Err(_) => Ok(false),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn complement(&self) -> Graph {
        complement(self)
    }

    /// Checks the structural invariants. Always true for graphs built through
    /// this type's API; exposed for tests and the FFI boundary.
    pub fn is_valid(&self) -> bool {
        let n = self.n();
        let mut count = 0;
        for (u, ns) in self.adj.iter().enumerate() {
            if ns.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in ns {
                if v >= n || v == u || self.adj[v].binary_search(&u).is_err() {
                    return false;
                }
            }
            count += ns.len();
        }
        count == 2 * self.m
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A set of vertex indices, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
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

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Errors if any member is not a vertex of `g`.
    pub fn check_in(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            }),
            _ => Ok(()),
        }
    }

    pub fn is_independent_in(&self, g: &Graph) -> bool {
        self.check_in(g).is_ok()
            && self
                .0
                .iter()
                .enumerate()
                .all(|(i, &u)| self.0[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
    }

    pub fn is_clique_in(&self, g: &Graph) -> bool {
        self.check_in(g).is_ok()
            && self
                .0
                .iter()
                .enumerate()
                .all(|(i, &u)| self.0[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut h = Graph::new(n);
    for u in 0..n {
        let ns = &g.adj[u];
        let mut it = ns.iter().peekable();
        let mut row = Vec::with_capacity(n - 1 - ns.len());
        for v in 0..n {
            if it.peek() == Some(&&v) {
                it.next();
            } else if v != u {
                row.push(v);
            }
        }
        h.m += row.len();
        h.adj[u] = row;
    }
    h.m /= 2;
    h
}

/// `G[S]` with the members of `s` relabeled `0..|s|` in ascending order.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph> {
    s.check_in(g)?;
    let mut index = vec![usize::MAX; g.n()];
    for (i, v) in s.iter().enumerate() {
        index[v] = i;
    }
    let mut h = Graph::new(s.len());
    for (i, u) in s.iter().enumerate() {
        h.adj[i] = g.adj[u]
            .iter()
            .filter_map(|&v| (index[v] != usize::MAX).then_some(index[v]))
            .collect();
        h.adj[i].sort_unstable();
        h.m += h.adj[i].len();
    }
    h.m /= 2;
    Ok(h)
}

/// Places the graphs side by side, offsetting each block of vertices by the
/// total size of the blocks before it.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut g = Graph {
        adj: Vec::with_capacity(n),
        m: 0,
    };
    let mut offset = 0;
    for part in parts {
        for ns in &part.adj {
            g.adj.push(ns.iter().map(|&v| v + offset).collect());
        }
        g.m += part.m;
        offset += part.n();
    }
    g
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        out.push(VertexSet::new(comp));
    }
    out
}
