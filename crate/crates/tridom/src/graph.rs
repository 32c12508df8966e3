//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one `u64` bitmask per vertex,
//! which keeps neighborhood and coverage computations down to a handful of
//! word operations. Graphs are immutable once constructed, so they can be
//! shared freely across worker threads.

use std::fmt;

use thiserror::Error;

/// Hard cap imposed by the `u64` bitmask representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    BadVertexCount(usize),
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
}

/// A set of vertices, backed by a single `u64` bitmask.
///
/// The set itself does not know which graph it belongs to; operations that
/// need a vertex range take the graph as an argument and check membership
/// against it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex in the set, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Ascending vertex list, the form used in JSON output.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            debug_assert!(v < MAX_VERTICES);
            s = s.with(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{self}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An undirected simple graph with vertices `0..n`, `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph { n, adj };
        g.debug_check();
        Ok(g)
    }

    /// Builds a graph directly from adjacency masks. Callers must supply a
    /// symmetric, irreflexive relation confined to bits below `n`; this is
    /// checked in debug builds.
    pub(crate) fn from_adjacency_masks(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert!((1..=MAX_VERTICES).contains(&n) && adj.len() == n);
        let g = Graph { n, adj };
        g.debug_check();
        g
    }

    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            let full = self.full_set().bits();
            for u in 0..self.n {
                assert_eq!(self.adj[u] & !full, 0, "adjacency bits beyond n");
                assert_eq!(self.adj[u] >> u & 1, 0, "self-loop at {u}");
                for v in 0..self.n {
                    assert_eq!(
                        self.adj[u] >> v & 1,
                        self.adj[v] >> u & 1,
                        "asymmetry between {u} and {v}"
                    );
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All vertices as a set.
    pub fn full_set(&self) -> VertexSet {
        VertexSet(if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Union of `N[v]` over `v` in `s`: the members of `s` together with
    /// everything adjacent to them.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        debug_assert!(s.is_subset_of(self.full_set()));
        let mut out = s.bits();
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    /// Union of `N(v)` over `v` in `s`. Members of `s` are included only if
    /// some other member is adjacent to them.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        debug_assert!(s.is_subset_of(self.full_set()));
        let mut out = 0u64;
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    pub fn is_connected(&self) -> bool {
        let mut reached = 1u64;
        loop {
            let mut next = reached;
            let mut bits = reached;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            if next == reached {
                return reached == self.full_set().bits();
            }
            reached = next;
        }
    }

    /// Smallest-index vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v] == 0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.isolated_vertex().is_some()
    }

    /// Whether the subgraph induced by `s` is connected. The empty set has
    /// no meaningful answer, so it is rejected.
    pub fn induces_connected(&self, s: VertexSet) -> Result<bool, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        debug_assert!(s.is_subset_of(self.full_set()));
        let inside = s.bits();
        let mut reached = 1u64 << s.min().unwrap();
        loop {
            let mut next = reached;
            let mut bits = reached;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v] & inside;
            }
            if next == reached {
                return Ok(reached == inside);
            }
            reached = next;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
