//! Immutable simple graphs on at most 64 vertices, with bitset vertex sets.
//!
//! Vertices are labeled `0..n-1`. Adjacency is stored as one `u64` neighbor
//! mask per vertex, which keeps subset enumeration and component scans cheap
//! at the scale every decision procedure in this crate works at.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported graph order: one machine word of vertex bits.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Errors from graph construction and editing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}: simple graphs have none")]
    SelfLoop { v: usize },
    #[error("order {n} exceeds the supported maximum of {MAX_VERTICES} vertices")]
    TooManyVertices { n: usize },
    #[error("a graph must have at least one vertex")]
    EmptyGraph,
    #[error("deleting all vertices would leave an empty graph")]
    DeleteAllVertices,
    #[error("{u}-{v} is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

/// A subset of the vertices `0..64`, as a bitmask.
///
/// Iteration is always in ascending vertex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    /// All of `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(low_mask(n))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !bit(v);
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & low_mask(n))
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            s.insert(v);
        }
        s
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// An unordered edge, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    u: usize,
    v: usize,
}

impl EdgeRef {
    /// Normalizes the endpoint order. Panics on a loop: self-loops are a
    /// constructor-level error, never a representable edge.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "EdgeRef endpoints must differ");
        if a < b {
            EdgeRef { u: a, v: b }
        } else {
            EdgeRef { u: b, v: a }
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v
    }

    #[inline]
    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Debug for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for EdgeRef {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(serializer)
    }
}

/// An immutable simple undirected graph.
///
/// All editing operations return a new graph; values can be freely shared
/// across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph with the given edges. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        Ok(Graph { n, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, &[])
    }

    pub(crate) fn from_adj_unchecked(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        if cfg!(debug_assertions) {
            let mask = low_mask(n);
            for (v, &row) in adj.iter().enumerate() {
                debug_assert_eq!(row & !mask, 0, "adjacency bits outside 0..{n}");
                debug_assert_eq!(row & bit(v), 0, "self-loop at {v}");
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    debug_assert_eq!(
                        adj[u] & bit(v) != 0,
                        adj[v] & bit(u) != 0,
                        "asymmetric adjacency at ({u},{v})"
                    );
                }
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor bitmask of `v`.
    #[inline]
    pub fn adj_row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub(crate) fn adj(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All of `V(G)`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push(EdgeRef { u, v });
            }
        }
        out
    }

    /// The join `G1 ∨ G2`: disjoint copies plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let other_mask = low_mask(n) & !low_mask(self.n);
        let mut adj: Vec<u64> = self.adj.iter().map(|row| row | other_mask).collect();
        adj.extend(other.adj.iter().map(|row| (row << self.n) | low_mask(self.n)));
        Ok(Graph { n, adj })
    }

    /// The disjoint union `G1 ∪ G2` on relabeled vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// The induced subgraph `G − X`, with the surviving vertices relabeled
    /// to `0..n-|X|` in ascending order of their original labels.
    pub fn delete_vertices(&self, x: VertexSet) -> Result<Graph, GraphError> {
        let full = self.vertices();
        if !x.is_subset_of(full) {
            let v = x.difference(full).smallest().unwrap();
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if x == full {
            return Err(GraphError::DeleteAllVertices);
        }
        let keep: Vec<usize> = full.difference(x).iter().collect();
        let mut adj = vec![0u64; keep.len()];
        for (new_u, &old_u) in keep.iter().enumerate() {
            for (new_v, &old_v) in keep.iter().enumerate() {
                if self.adj[old_u] & bit(old_v) != 0 {
                    adj[new_u] |= bit(new_v);
                }
            }
        }
        Ok(Graph {
            n: keep.len(),
            adj,
        })
    }

    /// `G − e`: same vertex set, one edge removed.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge { u: e.u, v: e.v });
        }
        let mut adj = self.adj.clone();
        adj[e.u] &= !bit(e.v);
        adj[e.v] &= !bit(e.u);
        Ok(Graph { n: self.n, adj })
    }

    /// Connected components as vertex sets, ascending by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for_each_component(&self.adj, low_mask(self.n), |comp| {
            out.push(VertexSet(comp))
        });
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut count = 0usize;
        for_each_component(&self.adj, low_mask(self.n), |_| count += 1);
        count == 1
    }

    /// Number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&r| r == 0).count()
    }

    /// Degree-1 vertices as a set.
    pub fn pendant_vertices(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in 0..self.n {
            if self.adj[v].count_ones() == 1 {
                s.insert(v);
            }
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Bridge scan over the masked graph via iterative lowlink DFS. Returns the
/// bridges in DFS discovery order.
pub(crate) fn bridges(adj: &[u64], alive: u64) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut visited = 0u64;
    let mut timer = 1u32;
    let mut out = Vec::new();
    // Stack frame: (vertex, dfs-parent, neighbors not yet explored).
    let mut stack: Vec<(usize, usize, u64)> = Vec::with_capacity(n);

    let mut roots = alive;
    while roots != 0 {
        let root = roots.trailing_zeros() as usize;
        roots &= roots - 1;
        if visited & bit(root) != 0 {
            continue;
        }
        visited |= bit(root);
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, adj[root] & alive));
        while let Some(&mut (v, parent, ref mut rest)) = stack.last_mut() {
            if *rest == 0 {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    if low[v] < low[p] {
                        low[p] = low[v];
                    }
                    if low[v] > disc[p] {
                        out.push((p, v));
                    }
                }
                continue;
            }
            let w = rest.trailing_zeros() as usize;
            *rest &= *rest - 1;
            if w == parent {
                // Skip one parent edge; parallel edges cannot occur.
                continue;
            }
            if visited & bit(w) != 0 {
                if disc[w] < low[v] {
                    low[v] = disc[w];
                }
            } else {
                visited |= bit(w);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, v, adj[w] & alive));
            }
        }
    }
    out
}

/// Flood-fills the masked graph `(adj, alive)` and calls `f` for each
/// connected component (as a bitmask), in ascending order of the smallest
/// member. Vertices outside `alive` do not exist.
#[inline]
pub(crate) fn for_each_component(adj: &[u64], alive: u64, mut f: impl FnMut(u64)) {
    let mut rest = alive;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        loop {
            let mut frontier = 0u64;
            let mut scan = comp;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                frontier |= adj[v];
            }
            let grown = (comp | frontier) & rest;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        f(comp);
        rest &= !comp;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn from_edges_builds_p3_and_k3() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));

        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, k(3));
    }

    #[test]
    fn from_edges_rejects_self_loop() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { v: 0 })
        );
    }

    #[test]
    fn from_edges_rejects_out_of_range_and_oversize() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(65, &[]),
            Err(GraphError::TooManyVertices { n: 65 })
        );
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn join_of_k1_and_2k1_is_p3_shaped_star() {
        let k1 = Graph::edgeless(1).unwrap();
        let two_k1 = Graph::edgeless(2).unwrap();
        let star = k1.join(&two_k1).unwrap();
        assert_eq!(star.n(), 3);
        assert_eq!(star.edge_count(), 2);
        assert_eq!(star.degree(0), 2);
    }

    #[test]
    fn join_of_k2_and_k2_is_k4() {
        let k2 = k(2);
        assert_eq!(k2.join(&k2).unwrap(), k(4));
    }

    #[test]
    fn join_edge_count_matches_definition() {
        // |E(K3 ∨ 4K2)| = 3 + 4 + 3*8 = 31
        let mut four_k2 = k(2);
        for _ in 0..3 {
            four_k2 = four_k2.disjoint_union(&k(2)).unwrap();
        }
        let g = k(3).join(&four_k2).unwrap();
        assert_eq!(g.edge_count(), 31);
    }

    #[test]
    fn disjoint_union_counts() {
        let g = k(2).disjoint_union(&k(2)).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.components().len(), 2);

        let two_k1 = Graph::edgeless(1)
            .unwrap()
            .disjoint_union(&Graph::edgeless(1).unwrap())
            .unwrap();
        assert_eq!(two_k1.components().len(), 2);
    }

    #[test]
    fn delete_edge_on_c4_leaves_p4() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p4 = c4.delete_edge(EdgeRef::new(3, 0)).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_connected());
        assert_eq!(p4.pendant_vertices().len(), 2);
        assert_eq!(
            c4.delete_edge(EdgeRef::new(0, 2)),
            Err(GraphError::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn delete_vertices_relabels_and_rejects_full_set() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let rest = p3.delete_vertices(VertexSet::singleton(1)).unwrap();
        assert_eq!(rest.n(), 2);
        assert_eq!(rest.edge_count(), 0);
        assert_eq!(
            p3.delete_vertices(VertexSet::full(3)),
            Err(GraphError::DeleteAllVertices)
        );
    }

    #[test]
    fn components_of_3k2_and_c5() {
        let mut g = k(2);
        for _ in 0..2 {
            g = g.disjoint_union(&k(2)).unwrap();
        }
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 2));

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let comps = c5.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 5);
    }

    #[test]
    fn components_emerge_in_ascending_smallest_vertex_order() {
        let g = Graph::from_edges(5, &[(1, 3), (2, 4)]).unwrap();
        let comps = g.components();
        let smallest: Vec<_> = comps.iter().map(|c| c.smallest().unwrap()).collect();
        assert_eq!(smallest, vec![0, 1, 2]);
    }

    #[test]
    fn vertex_set_algebra() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 5]);
        assert_eq!(a.complement(6).to_vec(), vec![1, 3, 4]);
        assert!(b.is_subset_of(VertexSet::full(4)));
        assert_eq!(format!("{a}"), "{0, 2, 5}");
    }

    #[test]
    fn edge_ref_normalizes() {
        let e = EdgeRef::new(5, 2);
        assert_eq!(e.endpoints(), (2, 5));
        assert_eq!(format!("{e}"), "2-5");
    }

    #[test]
    #[should_panic]
    fn edge_ref_rejects_loop() {
        let _ = EdgeRef::new(3, 3);
    }
}
