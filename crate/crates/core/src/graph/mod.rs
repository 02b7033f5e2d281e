//! Immutable simple undirected graphs with bitset adjacency.

mod edgelist;
mod graph6;
mod set;

pub use edgelist::{format_edge_list, parse_edge_list};
pub use graph6::{decode as graph6_decode, encode as graph6_encode};
pub use set::{Iter as VertexSetIter, VertexSet};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported order (single-byte graph6 header).
pub const MAX_ORDER: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from index pairs. Duplicate pairs collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Graph on `n` vertices whose edge set is selected by `mask`, bit `i`
    /// standing for the `i`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Graph> {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs < 64 && mask >> pairs != 0 {
            return Err(Error::VertexOutOfRange { vertex: n, n });
        }
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if bit < 64 && mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|s| s.is_empty())
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one leaf.
    pub fn supports(&self) -> VertexSet {
        let leaves = self.leaves();
        (0..self.order())
            .filter(|&v| self.adj[v].intersects(leaves))
            .collect()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// A vertex with three pairwise non-adjacent neighbours, if any.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        for v in 0..self.order() {
            let nb = self.adj[v].to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nb[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return Some((v, [a, b, c]));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    pub fn profile(&self) -> GraphProfile {
        GraphProfile {
            min_degree: self.min_degree(),
            has_isolated: self.has_isolated_vertex(),
            leaves: self.leaves(),
            supports: self.supports(),
            claw_free: self.is_claw_free(),
            is_tree: self.is_tree(),
        }
    }

    /// External private neighbourhood of `u` with respect to `set`: vertices
    /// outside `set` whose only neighbour in `set` is `u`.
    pub fn epn(&self, u: usize, set: VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        if !set.contains(u) {
            return Err(Error::VertexNotInSet { vertex: u });
        }
        let me = VertexSet::singleton(u);
        Ok((self.vertices() - set)
            .iter()
            .filter(|&w| self.adj[w] & set == me)
            .collect())
    }

    /// Fails unless every member of `set` is a vertex of this graph.
    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        match (set - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            }),
            None => Ok(()),
        }
    }

    pub fn to_graph6(&self) -> String {
        graph6_encode(self)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({} {:?})", self.order(), self.edges())
    }
}

/// Structural summary used by theorem applicability gates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    pub min_degree: usize,
    pub has_isolated: bool,
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub claw_free: bool,
    pub is_tree: bool,
}
