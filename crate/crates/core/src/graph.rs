//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph stored as sorted adjacency lists.
///
/// Invariants: no self-loops, no duplicate neighbors, symmetric adjacency,
/// and `m` equals half the sum of degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Each unordered pair must appear once.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) listed twice")));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Builds a graph from edges that are known to be valid (used internally
    /// by constructions that cannot produce duplicates).
    pub(crate) fn from_edges_trusted<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges).expect("construction produced an invalid graph")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges_trusted(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle on `n >= 3` vertices in order `0, 1, ..., n-1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Self::from_edges_trusted(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges_trusted(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Star with hub `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges_trusted(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || connected_components(self).len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m + connected_components(self).len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// Connected with maximum degree two and no cycle (includes `K1`).
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Subgraph induced by `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = Vec::with_capacity(vertices.len());
        let mut m = 0;
        for &v in vertices {
            let mut nbrs: Vec<usize> =
                self.adj[v].iter().filter_map(|&w| (local[w] != usize::MAX).then_some(local[w])).collect();
            nbrs.sort_unstable();
            m += nbrs.len();
            adj.push(nbrs);
        }
        Graph { adj, m: m / 2 }
    }

    /// Renames vertex `u` to `perm[u]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { adj, m: self.m }
    }

    /// `self` followed by `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nbrs| nbrs.iter().map(|&v| v + off).collect::<Vec<_>>()));
        Graph { adj, m: self.m + other.m }
    }
}

/// Connected components, each sorted, blocks ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut block = Vec::new();
        while let Some(u) = queue.pop_front() {
            block.push(u);
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

/// Per-vertex component index matching the order of [`connected_components`].
pub fn component_labels(g: &Graph, blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut label = vec![0; g.n()];
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            label[v] = i;
        }
    }
    label
}
