//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` neighbor row, so neighborhoods, unions and
//! domination tests are single-word bit operations.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count; one neighbor row is one machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph has {n} vertices, at most {MAX_VERTICES} are supported")]
    TooLarge { n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {edge}")]
    DuplicateEdge { edge: Edge },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} is not present in the graph")]
    MissingEdge { edge: Edge },
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the normalized edge `{a, b}`. Does not reject `a == b`;
    /// [`Graph::from_edges`] does.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// A sorted, duplicate-free list of edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        EdgeSet(edges)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    /// Edges of this set with endpoint `x`.
    pub fn incident_count(&self, x: usize) -> usize {
        self.0.iter().filter(|e| e.touches(x)).count()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::new(iter.into_iter().collect())
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = std::vec::IntoIter<Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn iter(&self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterates the set bits of a word in increasing order.
#[derive(Debug, Clone)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub(crate) const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Immutable simple graph. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={})", self.n, self.edge_set())
    }
}

impl Graph {
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        let mut m = 0;
        for e in edges {
            let e: Edge = e.into();
            if e.u == e.v {
                return Err(GraphError::SelfLoop { vertex: e.u });
            }
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, n });
            }
            if adj[e.u] >> e.v & 1 == 1 {
                return Err(GraphError::DuplicateEdge { edge: e });
            }
            adj[e.u] |= 1u64 << e.v;
            adj[e.v] |= 1u64 << e.u;
            m += 1;
        }
        Ok(Graph { n, adj, m })
    }

    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from neighbor rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        let n = rows.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        debug_assert!(rows.iter().enumerate().all(|(v, r)| r >> v & 1 == 0));
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, adj: rows, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbor rows, one word per vertex.
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighborhood(&self, x: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(x)?;
        Ok(VertexSet(self.adj[x]))
    }

    pub fn closed_neighborhood(&self, x: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(x)?;
        Ok(VertexSet(self.adj[x] | 1u64 << x))
    }

    /// All edges with endpoint `x`.
    pub fn incident_edges(&self, x: usize) -> Result<EdgeSet, GraphError> {
        self.check_vertex(x)?;
        Ok(BitIter(self.adj[x]).map(|y| Edge::new(x, y)).collect())
    }

    /// Edges with one endpoint in `s` and the other in `t`.
    pub fn edges_between(&self, s: VertexSet, t: VertexSet) -> Result<EdgeSet, GraphError> {
        if s.is_empty() || t.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if s.0 & t.0 != 0 {
            return Err(GraphError::OverlappingSets);
        }
        let all = full_mask(self.n);
        for set in [s, t] {
            if set.0 & !all != 0 {
                let vertex = (set.0 & !all).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
            }
        }
        Ok(s.iter()
            .flat_map(|x| BitIter(self.adj[x] & t.0).map(move |y| Edge::new(x, y)))
            .collect())
    }

    /// Sorted list of all edges.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let above = self.adj[u] & !full_mask(u + 1);
            out.extend(BitIter(above).map(|v| Edge { u, v }));
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges())
    }

    /// `G - B`. Every edge of `b` must be present.
    pub fn remove_edges<'a, I>(&self, b: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut adj = self.adj.clone();
        let mut m = self.m;
        for e in b {
            if e.u == e.v || e.v >= self.n || adj[e.u] >> e.v & 1 == 0 {
                return Err(GraphError::MissingEdge { edge: *e });
            }
            adj[e.u] &= !(1u64 << e.v);
            adj[e.v] &= !(1u64 << e.u);
            m -= 1;
        }
        Ok(Graph { n: self.n, adj, m })
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let rows = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        Graph::from_rows(rows)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let next = BitIter(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Number of edges inside the vertex set `s`.
    pub fn induced_edge_count(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn check_vertex(&self, x: usize) -> Result<(), GraphError> {
        if x >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: x,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    match n {
        0 => Err(GraphError::NoVertices),
        n if n > MAX_VERTICES => Err(GraphError::TooLarge { n }),
        _ => Ok(()),
    }
}
