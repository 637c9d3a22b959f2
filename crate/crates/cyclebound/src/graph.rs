/*!
Simple undirected graphs on vertex set `{0, …, n−1}` with bitset adjacency rows.

Every graph has at least one vertex; the empty graph is unrepresentable and
operations that would produce it (deleting every vertex) signal
[`GraphError::EmptyRemainder`] instead. Rows are flat `u64` words, `words`
per vertex, so all set algebra is word-parallel regardless of `n`.
*/

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop edge ({v},{v}) is not allowed in a simple graph")]
    LoopEdge { v: usize },
    #[error("a graph must have at least one vertex")]
    NoVertices,
    #[error("deleting every vertex leaves no graph")]
    EmptyRemainder,
}

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Fixed-universe vertex set backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, bits: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            assert!(v < n, "vertex {v} out of range {n}");
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.bits[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.bits[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.bits[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph, adjacency stored as one bitset row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let words = words_for(n);
        Ok(Graph { n, words, rows: vec![0; n * words] })
    }

    /// Complete graph `K_n`, `n >= 1`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_unchecked(u, v);
            }
        }
        Ok(g)
    }

    /// Builds a graph from an explicit vertex count and edge list.
    /// Duplicate edges collapse; loops and out-of-range endpoints are errors.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v: u });
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.rows[v * self.words + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors_iter(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet { n: self.n, bits: self.row(u).to_vec() }
    }

    pub fn neighbors_iter(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Neighbors of `u` inside `allowed` (word-parallel).
    pub fn neighbors_in(&self, u: usize, allowed: &VertexSet) -> VertexSet {
        debug_assert_eq!(allowed.n, self.n);
        let mut bits = self.row(u).to_vec();
        for (a, b) in bits.iter_mut().zip(allowed.words()) {
            *a &= b;
        }
        VertexSet { n: self.n, bits }
    }

    pub fn has_neighbor_in(&self, u: usize, allowed: &VertexSet) -> bool {
        self.row(u).iter().zip(allowed.words()).any(|(a, b)| a & b != 0)
    }

    /// Disjoint union; vertices of `b` are shifted by `a.n()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let n = a.n + b.n;
        let mut g = Graph::edgeless(n).expect("n >= 2");
        for (u, v) in a.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in b.edges() {
            g.add_edge_unchecked(u + a.n, v + a.n);
        }
        g
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let mut g = Self::disjoint_union(a, b);
        for u in 0..a.n {
            for v in 0..b.n {
                g.add_edge_unchecked(u, a.n + v);
            }
        }
        g
    }

    /// Induced subgraph on the complement of `drop`. Returns the subgraph and
    /// the map from new vertex ids to the original ids (ascending).
    pub fn delete_vertices(&self, drop: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        debug_assert_eq!(drop.n, self.n);
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop.contains(v)).collect();
        if keep.is_empty() {
            return Err(GraphError::EmptyRemainder);
        }
        Ok((self.induced(&keep), keep))
    }

    /// Induced subgraph on `keep` (given as ascending original ids).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph::edgeless(keep.len()).expect("nonempty keep");
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().expect("n >= 1")
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) == self.n - 1)
    }

    /// Vertices reachable from `start` staying inside `allowed` (`start` need
    /// not be in `allowed`; the result always contains it).
    pub fn reachable_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            for v in self.neighbors_in(u, allowed).iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    frontier.push(v);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_within(0, &VertexSet::full(self.n)).len() == self.n
    }

    /// Connected components of the subgraph induced on `allowed`,
    /// each as a VertexSet, ordered by their minimum vertex.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = allowed.clone();
        let mut out = Vec::new();
        while let Some(s) = remaining.min() {
            let comp = self.reachable_within(s, &remaining);
            remaining.subtract(&comp);
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_basic() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn from_edge_list_rejects_loops_and_range() {
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]).unwrap_err(),
            GraphError::LoopEdge { v: 1 }
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 3, n: 3 }
        );
        assert_eq!(Graph::edgeless(0).unwrap_err(), GraphError::NoVertices);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn join_small_cases() {
        // K_1 + K_1 = K_2
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::join(&k1, &k1);
        assert!(k2.is_complete() && k2.n() == 2);

        // 2 isolated vertices joined to K_1 = star K_{1,2}
        let e2 = Graph::edgeless(2).unwrap();
        let star = Graph::join(&e2, &k1);
        assert_eq!(star.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn disjoint_union_shifts() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let g = Graph::disjoint_union(&p2, &p2);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        assert!(!g.is_connected());
        assert_eq!(g.components_within(&VertexSet::full(4)).len(), 2);
    }

    #[test]
    fn delete_vertices_cases() {
        let k4 = Graph::complete(4).unwrap();
        let mut drop = VertexSet::empty(4);
        drop.insert(2);
        let (g, map) = k4.delete_vertices(&drop).unwrap();
        assert!(g.is_complete() && g.n() == 3);
        assert_eq!(map, vec![0, 1, 3]);

        // deleting nothing is the identity
        let (same, _) = k4.delete_vertices(&VertexSet::empty(4)).unwrap();
        assert_eq!(same, k4);

        // deleting everything is an error
        assert_eq!(
            k4.delete_vertices(&VertexSet::full(4)).unwrap_err(),
            GraphError::EmptyRemainder
        );
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_iter(70, [0, 63, 64, 69]);
        let b = VertexSet::from_iter(70, [63, 64]);
        assert!(b.is_subset_of(&a));
        assert_eq!(a.intersection(&b).len(), 2);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0, 69]);
        assert_eq!(a.min(), Some(0));
        assert!(a.intersects(&b));
    }

    #[test]
    fn reachability_multiword() {
        // path across the 64-bit word boundary
        let n = 70;
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        assert!(g.is_connected());
        let mut allowed = VertexSet::full(n);
        allowed.remove(40);
        let r = g.reachable_within(0, &allowed);
        assert_eq!(r.len(), 40);
        assert!(!r.contains(41));
    }
}
