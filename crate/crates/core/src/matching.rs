//! Maximum bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Bipartite graph given by sorted right-neighbor lists of the left vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    nl: usize,
    nr: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(nl: usize, nr: usize, mut adj: Vec<Vec<usize>>) -> Result<Self> {
        if adj.len() != nl {
            return Err(Error::InvalidGraph(format!(
                "bipartite graph has {nl} left vertices but {} adjacency rows",
                adj.len()
            )));
        }
        for (l, row) in adj.iter_mut().enumerate() {
            if let Some(&r) = row.iter().find(|&&r| r >= nr) {
                return Err(Error::InvalidGraph(format!("left vertex {l} is joined to {r}, outside 0..{nr}")));
            }
            row.sort_unstable();
            row.dedup();
        }
        Ok(BipartiteGraph { nl, nr, adj })
    }

    pub fn from_edges<I>(nl: usize, nr: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); nl];
        for (l, r) in edges {
            if l >= nl {
                return Err(Error::InvalidGraph(format!("left endpoint {l} outside 0..{nl}")));
            }
            adj[l].push(r);
        }
        Self::new(nl, nr, adj)
    }

    /// Rows must already be in range; duplicates are tolerated by the matcher.
    pub(crate) fn from_rows_unchecked(nl: usize, nr: usize, adj: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(adj.len(), nl);
        debug_assert!(adj.iter().flatten().all(|&r| r < nr));
        BipartiteGraph { nl, nr, adj }
    }

    pub fn left_len(&self) -> usize {
        self.nl
    }

    pub fn right_len(&self) -> usize {
        self.nr
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

/// A matching as a pair of mutually inverse partial maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub pair_left: Vec<Option<usize>>,
    pub pair_right: Vec<Option<usize>>,
}

impl Matching {
    fn empty(nl: usize, nr: usize) -> Self {
        Matching { pair_left: vec![None; nl], pair_right: vec![None; nr] }
    }

    pub fn size(&self) -> usize {
        self.pair_left.iter().filter(|p| p.is_some()).count()
    }

    /// Mutual inverse and every pair is an edge of `b`.
    pub fn is_valid_for(&self, b: &BipartiteGraph) -> bool {
        if self.pair_left.len() != b.nl || self.pair_right.len() != b.nr {
            return false;
        }
        let left_ok = self.pair_left.iter().enumerate().all(|(l, p)| match *p {
            Some(r) => r < b.nr && self.pair_right[r] == Some(l) && b.adj[l].contains(&r),
            None => true,
        });
        let right_ok = self.pair_right.iter().enumerate().all(|(r, p)| match *p {
            Some(l) => l < b.nl && self.pair_left[l] == Some(r),
            None => true,
        });
        left_ok && right_ok
    }
}

/// Phase statistics of one Hopcroft–Karp run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MatchingStats {
    pub phases: usize,
}

const INF: usize = usize::MAX;

/// Maximum-cardinality matching. Deterministic: every phase scans left
/// vertices and their neighbors in ascending order.
pub fn max_bipartite_matching(b: &BipartiteGraph) -> Matching {
    max_bipartite_matching_with_stats(b).0
}

pub fn max_bipartite_matching_with_stats(b: &BipartiteGraph) -> (Matching, MatchingStats) {
    let mut m = Matching::empty(b.nl, b.nr);
    let mut stats = MatchingStats::default();
    let mut dist = vec![INF; b.nl];
    let mut cursor = vec![0usize; b.nl];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut via: Vec<usize> = Vec::new();

    loop {
        // Layer the free left vertices and everything reachable by
        // alternating paths, stopping at the first layer touching a free right vertex.
        queue.clear();
        for (l, d) in dist.iter_mut().enumerate().take(b.nl) {
            if m.pair_left[l].is_none() {
                *d = 0;
                queue.push_back(l);
            } else {
                *d = INF;
            }
        }
        let mut free_layer = INF;
        while let Some(l) = queue.pop_front() {
            if dist[l] >= free_layer {
                continue;
            }
            for &r in &b.adj[l] {
                match m.pair_right[r] {
                    None => free_layer = free_layer.min(dist[l]),
                    Some(l2) if dist[l2] == INF => {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                    Some(_) => {}
                }
            }
        }
        if free_layer == INF {
            break;
        }
        stats.phases += 1;

        cursor.iter_mut().for_each(|c| *c = 0);
        for root in 0..b.nl {
            if m.pair_left[root].is_some() || dist[root] != 0 {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&l) = stack.last() {
                if cursor[l] == b.adj[l].len() {
                    dist[l] = INF;
                    stack.pop();
                    via.pop();
                    continue;
                }
                let r = b.adj[l][cursor[l]];
                cursor[l] += 1;
                match m.pair_right[r] {
                    None if dist[l] == free_layer => {
                        via.push(r);
                        for (&lv, &rv) in stack.iter().zip(via.iter()) {
                            m.pair_left[lv] = Some(rv);
                            m.pair_right[rv] = Some(lv);
                        }
                        break;
                    }
                    Some(l2) if dist[l2] != INF && dist[l2] == dist[l] + 1 => {
                        via.push(r);
                        stack.push(l2);
                    }
                    _ => {}
                }
            }
        }
    }
    (m, stats)
}

/// True iff both sides have equal size and the maximum matching saturates them.
pub fn has_perfect_matching(b: &BipartiteGraph) -> bool {
    b.nl == b.nr && (b.nl == 0 || perfect_matching(b).is_some())
}

/// A perfect matching as `left -> right`, if one exists.
pub fn perfect_matching(b: &BipartiteGraph) -> Option<Vec<usize>> {
    if b.nl != b.nr || b.adj.iter().any(Vec::is_empty) {
        return None;
    }
    let m = max_bipartite_matching(b);
    m.pair_left.into_iter().collect()
}

/// Reference matcher: one augmenting-path search per left vertex (Kuhn).
/// Independent of [`max_bipartite_matching`]; used to cross-check it.
pub fn augmenting_path_matching(b: &BipartiteGraph) -> Matching {
    fn try_kuhn(l: usize, b: &BipartiteGraph, seen: &mut [bool], m: &mut Matching) -> bool {
        for &r in &b.adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match m.pair_right[r] {
                None => true,
                Some(l2) => try_kuhn(l2, b, seen, m),
            };
            if free {
                m.pair_left[l] = Some(r);
                m.pair_right[r] = Some(l);
                return true;
            }
        }
        false
    }
    let mut m = Matching::empty(b.nl, b.nr);
    for l in 0..b.nl {
        let mut seen = vec![false; b.nr];
        try_kuhn(l, b, &mut seen, &mut m);
    }
    m
}
