//! Simple undirected graphs on vertices `0..n` with bitset adjacency rows.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] can hold (one `u64` adjacency row per vertex).
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

/// Simple undirected graph. Vertices are `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Degree data used by the spectral bounds.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GraphStats {
    pub max_degree: usize,
    /// Largest degree among vertices other than one fixed maximum-degree vertex.
    pub second_degree: usize,
    pub pendant_count: usize,
    pub quasi_pendant_count: usize,
    /// `None` when the graph is disconnected.
    pub vertex_connectivity: Option<usize>,
    /// Maximum of `d(u) + d(v)` over edges; `None` with fewer than two edges.
    pub max_edge_degree_sum: Option<usize>,
    /// Same maximum over all edges except one attaining `max_edge_degree_sum`.
    pub second_edge_degree_sum: Option<usize>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Adjacency row of `v` as a bitset.
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

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Vertex set reachable from `start` inside `allowed`.
    fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn component_count(&self) -> usize {
        let mut left = self.full_mask();
        let mut count = 0;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            left &= !self.reach(v, self.full_mask());
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(0, self.full_mask()) == self.full_mask()
    }

    /// Length of a shortest cycle, `None` for forests.
    ///
    /// BFS from every root: a non-tree edge between levels `a` and `b` closes a
    /// walk of length `a + b + 1` containing a cycle no longer than it, and the
    /// root lying on a shortest cycle attains it exactly.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Greatest distance between two vertices, `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        let mut diam = 0;
        for s in 0..self.n {
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut ecc = 0;
            loop {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= !seen;
                if next == 0 {
                    break;
                }
                seen |= next;
                frontier = next;
                ecc += 1;
            }
            diam = diam.max(ecc);
        }
        Some(diam)
    }

    /// Whether `uv` is an edge whose removal disconnects its endpoints.
    pub fn is_cut_edge(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let mut h = self.clone();
        h.clear_edge(u, v);
        h.reach(u, h.full_mask()) >> v & 1 == 0
    }

    pub fn cut_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| self.is_cut_edge(u, v))
            .collect()
    }

    /// Minimum number of vertices whose removal disconnects the graph, by
    /// trying vertex subsets in increasing size. `n - 1` for complete graphs,
    /// `None` for disconnected graphs.
    pub fn vertex_connectivity(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        let n = self.n;
        if self.size() == n * (n - 1) / 2 {
            return Some(n.saturating_sub(1));
        }
        let full = self.full_mask();
        for k in 1..n.saturating_sub(1) {
            let mut found = false;
            for_each_subset(n, k, |cut| {
                if found {
                    return;
                }
                let rest = full & !cut;
                let start = rest.trailing_zeros() as usize;
                if self.reach(start, rest) != rest {
                    found = true;
                }
            });
            if found {
                return Some(k);
            }
        }
        Some(n - 1)
    }

    pub fn stats(&self) -> GraphStats {
        let deg = self.degrees();
        let (max_v, max_degree) = deg
            .iter()
            .copied()
            .enumerate()
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .unwrap_or((0, 0));
        let second_degree = deg
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != max_v)
            .map(|(_, &d)| d)
            .max()
            .unwrap_or(0);
        let pendants: u64 = (0..self.n)
            .filter(|&v| deg[v] == 1)
            .fold(0, |m, v| m | 1 << v);
        let quasi: u64 = bits(pendants).fold(0, |m, v| m | self.adj[v]);

        let edges = self.edges();
        let (max_edge_degree_sum, second_edge_degree_sum) = if edges.len() >= 2 {
            let mut sums: Vec<usize> = edges.iter().map(|&(u, v)| deg[u] + deg[v]).collect();
            sums.sort_unstable_by(|a, b| b.cmp(a));
            (Some(sums[0]), Some(sums[1]))
        } else {
            (None, None)
        };

        GraphStats {
            max_degree,
            second_degree,
            pendant_count: pendants.count_ones() as usize,
            quasi_pendant_count: quasi.count_ones() as usize,
            vertex_connectivity: self.vertex_connectivity(),
            max_edge_degree_sum,
            second_edge_degree_sum,
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph::from_rows(self.n, adj)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows(n, adj))
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            if seen >> v & 1 == 1 {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
            }
            g.clear_edge(u, v);
        }
        Ok(g)
    }

    pub fn add_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_rows(self.n, adj)
    }

    /// Adjacency matrix as 0/1 rows.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterate over the set bit positions of `mask`.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Calls `f` with every `k`-subset of `0..n` as a bitmask (Gosper's hack).
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut s: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while s < limit {
        f(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    fn kpq(p: usize, q: usize) -> Graph {
        Graph::empty(p).join(&Graph::empty(q)).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
    }

    #[test]
    fn girth_basics() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(path(6).girth(), None);
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(kpq(2, 3).girth(), Some(4));
        // Petersen graph
        let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        assert_eq!(Graph::from_edges(10, &e).unwrap().girth(), Some(5));
    }

    #[test]
    fn connectivity_and_components() {
        assert!(complete(4).is_connected());
        assert_eq!(complete(4).component_count(), 1);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.component_count(), 2);
        assert_eq!(Graph::empty(3).component_count(), 3);
    }

    #[test]
    fn stats_of_star() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = star.stats();
        assert_eq!(s.max_degree, 4);
        assert_eq!(s.second_degree, 1);
        assert_eq!(s.pendant_count, 4);
        assert_eq!(s.quasi_pendant_count, 1);
        assert_eq!(s.vertex_connectivity, Some(1));
        assert_eq!(s.max_edge_degree_sum, Some(5));
        assert_eq!(s.second_edge_degree_sum, Some(5));
    }

    #[test]
    fn stats_of_k23() {
        let s = kpq(2, 3).stats();
        assert_eq!(
            (
                s.max_degree,
                s.second_degree,
                s.pendant_count,
                s.quasi_pendant_count
            ),
            (3, 3, 0, 0)
        );
        assert_eq!(s.vertex_connectivity, Some(2));
        assert_eq!(s.max_edge_degree_sum, Some(5));
        assert_eq!(s.second_edge_degree_sum, Some(5));
    }

    #[test]
    fn stats_preconditions() {
        let k2 = complete(2);
        let s = k2.stats();
        assert_eq!(s.max_edge_degree_sum, None);
        assert_eq!(s.vertex_connectivity, Some(1));
        assert_eq!(Graph::empty(3).stats().vertex_connectivity, None);
        assert_eq!(complete(6).vertex_connectivity(), Some(5));
        assert_eq!(cycle(6).vertex_connectivity(), Some(2));
    }

    #[test]
    fn constructions() {
        assert_eq!(complete(5).complement().size(), 0);
        let g = complete(3).join(&Graph::empty(3)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 12));
        let p4 = cycle(4).delete_edges(&[(3, 0)]).unwrap();
        assert_eq!(p4, path(4));
        assert_eq!(
            cycle(4).delete_edges(&[(0, 2)]),
            Err(GraphError::MissingEdge(0, 2))
        );
        assert_eq!(
            cycle(4).add_edges(&[(1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        let c = cycle(5).delete_vertex(2).unwrap();
        assert_eq!((c.order(), c.size()), (4, 3));
        let tri = complete(5).induced(&[4, 1, 2]).unwrap();
        assert_eq!(tri, complete(3));
    }

    #[test]
    fn cut_edges_and_diameter() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.cut_edges(), vec![(2, 3), (3, 4)]);
        assert_eq!(g.diameter(), Some(3));
        assert_eq!(complete(5).diameter(), Some(1));
    }

    #[test]
    fn subsets_enumerated() {
        let mut count = 0;
        for_each_subset(6, 3, |s| {
            assert_eq!(s.count_ones(), 3);
            count += 1;
        });
        assert_eq!(count, 20);
    }
}
