//! Immutable simple undirected graphs with word-sized adjacency rows.

use std::fmt;

use thiserror::Error;

use crate::canon::{self, CanonicalForm};

/// Largest supported vertex count; one adjacency row fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    InvalidOrder(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cannot remove ({0}, {1}): not an edge")]
    MissingEdge(usize, usize),
    #[error("cannot add ({0}, {1}): already an edge")]
    DuplicateEdge(usize, usize),
    #[error("induced subgraph needs a nonempty vertex set")]
    EmptyVertexSet,
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the neighbor set of `v` as a bitmask. Values are never mutated
/// after construction; every edit returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::InvalidOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Caller guarantees `adj` is symmetric, loop-free and within `n` bits.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|v| adj[v] & bit(v) == 0 && adj[v] & !low_mask(n) == 0));
        debug_assert!((0..n).all(|u| bits(adj[u]).all(|v| adj[v] & bit(u) != 0)));
        Graph { n, adj }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(!self.adj[u] & low_mask(self.n) & !low_mask(u + 1)).map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.n, self.degrees())
    }

    /// Returns `self` with `remove` deleted and `add` inserted.
    ///
    /// Every removed pair must be an edge and every added pair a non-edge of
    /// `self`; pairs within one list must be distinct.
    pub fn edit_edges(
        &self,
        add: &[(usize, usize)],
        remove: &[(usize, usize)],
    ) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(u, v) in remove {
            self.check_pair(u, v)?;
            if adj[u] & bit(v) == 0 {
                return Err(GraphError::MissingEdge(u, v));
            }
            adj[u] &= !bit(v);
            adj[v] &= !bit(u);
        }
        for &(u, v) in add {
            self.check_pair(u, v)?;
            if self.adj[u] & bit(v) != 0 || adj[u] & bit(v) != 0 {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.edit_edges(&[(u, v)], &[])
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.edit_edges(&[], &[(u, v)])
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let comp = self.reach(start, low_mask(self.n));
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` using only vertices in `allowed`.
    pub(crate) fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut comp = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn count_components(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, low_mask(self.n)) == low_mask(self.n)
    }

    /// Subgraph induced by `vertices`, relabeled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut seen = 0u64;
        let mut keep = Vec::with_capacity(vertices.len());
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            if seen & bit(v) == 0 {
                seen |= bit(v);
                keep.push(v);
            }
        }
        let adj = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[u] & bit(w) != 0)
                    .fold(0u64, |row, (i, _)| row | bit(i))
            })
            .collect();
        Ok(Graph::from_adjacency(keep.len(), adj))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal vertex count"
        );
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph::from_adjacency(self.n, adj)
    }

    /// Adds a vertex `n` adjacent to the vertices in `mask`.
    pub(crate) fn extend_with(&self, mask: u64) -> Graph {
        let n = self.n;
        let mut adj = self.adj.clone();
        for v in bits(mask) {
            adj[v] |= bit(n);
        }
        adj.push(mask);
        Graph::from_adjacency(n + 1, adj)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.size() == other.size()
            && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Per-vertex degrees plus the count of vertices at each degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    counts: Vec<usize>,
}

impl DegreeSequence {
    fn new(n: usize, degrees: Vec<usize>) -> DegreeSequence {
        let mut counts = vec![0; n];
        for &d in &degrees {
            counts[d] += 1;
        }
        DegreeSequence { degrees, counts }
    }

    /// `degrees()[v]` is the degree of vertex `v`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `counts()[i]` is the number of vertices of degree `i`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count_of(&self, degree: usize) -> usize {
        self.counts.get(degree).copied().unwrap_or(0)
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_path_and_singleton() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degrees(), vec![1, 2, 1]);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.degrees(), vec![0]);
        assert_eq!(k1.size(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn build_errors_are_distinct() {
        assert_eq!(Graph::new(0, &[]), Err(GraphError::InvalidOrder(0)));
        assert_eq!(Graph::new(65, &[]), Err(GraphError::InvalidOrder(65)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::new(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn degree_counts() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let ds = star.degree_sequence();
        assert_eq!(ds.sorted(), vec![1, 1, 1, 1, 4]);
        assert_eq!(ds.count_of(1), 4);
        assert_eq!(ds.count_of(4), 1);
        assert_eq!(ds.count_of(2), 0);
        assert_eq!(ds.sum(), 2 * star.size());
    }

    #[test]
    fn edits() {
        let p3 = path(3);
        let c3 = p3.with_edge(0, 2).unwrap();
        assert!(c3.is_complete());
        assert_eq!(p3.size(), 2, "input must stay unchanged");

        let p5 = cycle(5).without_edge(2, 3).unwrap();
        assert!(p5.is_isomorphic(&path(5)));

        assert_eq!(p3.without_edge(0, 2), Err(GraphError::MissingEdge(0, 2)));
        assert_eq!(p3.with_edge(0, 1), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(p3.with_edge(2, 2), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn components_and_connectivity() {
        assert_eq!(path(5).count_components(), 1);
        assert_eq!(Graph::empty(4).unwrap().count_components(), 4);
        let g = Graph::new(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b11, 0b11100, 0b100000]);
        assert!(!g.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn induced() {
        let k5 = Graph::new(
            5,
            &(0..5)
                .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let k3 = k5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert!(k3.is_complete());
        assert_eq!(k3.order(), 3);
        let two = path(4).induced_subgraph(&[0, 3]).unwrap();
        assert_eq!((two.order(), two.size()), (2, 0));
        assert_eq!(
            path(4).induced_subgraph(&[]),
            Err(GraphError::EmptyVertexSet)
        );
    }

    #[test]
    fn non_edges_complement_edges() {
        let g = cycle(6);
        assert_eq!(g.edges().count() + g.non_edges().count(), 15);
        assert!(g.non_edges().all(|(u, v)| u < v && !g.has_edge(u, v)));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=10).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
                let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn handshake(g in arb_graph()) {
            prop_assert_eq!(g.degree_sequence().sum(), 2 * g.size());
            let ds = g.degree_sequence();
            prop_assert_eq!(ds.counts().iter().sum::<usize>(), g.order());
        }

        #[test]
        fn edit_then_inverse_restores(g in arb_graph()) {
            let edges: Vec<_> = g.edges().take(3).collect();
            let non: Vec<_> = g.non_edges().take(3).collect();
            let edited = g.edit_edges(&non, &edges).unwrap();
            let back = edited.edit_edges(&edges, &non).unwrap();
            prop_assert_eq!(back, g);
        }

        #[test]
        fn connected_reaches_everything(g in arb_graph()) {
            if g.count_components() == 1 {
                prop_assert_eq!(g.reach(0, low_mask(g.order())).count_ones() as usize, g.order());
            }
            prop_assert_eq!(g.is_connected(), g.count_components() == 1);
        }
    }
}
