//! List instances, mappings and the final-answer verifier.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A ListIso instance: graphs `g`, `h` and, for every vertex of `g`, a sorted
/// set of allowed images in `h`. ListAut instances have `h == g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListInstance {
    g: Graph,
    h: Graph,
    lists: Vec<Vec<usize>>,
}

impl ListInstance {
    /// Validates list ranges and normalizes every list to a sorted set.
    pub fn new(g: Graph, h: Graph, mut lists: Vec<Vec<usize>>) -> Result<Self> {
        if lists.len() != g.n() {
            return Err(Error::InvalidInstance(format!(
                "lists has {} entries but g has {} vertices",
                lists.len(),
                g.n()
            )));
        }
        for (u, list) in lists.iter_mut().enumerate() {
            if let Some(&bad) = list.iter().find(|&&w| w >= h.n()) {
                return Err(Error::InvalidInstance(format!(
                    "list of vertex {u} contains {bad}, which is not a vertex of h (n = {})",
                    h.n()
                )));
            }
            list.sort_unstable();
            list.dedup();
        }
        Ok(ListInstance { g, h, lists })
    }

    /// ListAut instance on `g`.
    pub fn automorphism(g: Graph, lists: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(g.clone(), g, lists)
    }

    /// Every list is all of `V(h)`: plain graph isomorphism.
    pub fn with_full_lists(g: Graph, h: Graph) -> Self {
        let lists = vec![(0..h.n()).collect(); g.n()];
        ListInstance { g, h, lists }
    }

    /// Lists already sorted, deduplicated and in range.
    pub(crate) fn from_parts(g: Graph, h: Graph, lists: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(lists.len(), g.n());
        debug_assert!(lists.iter().all(|l| l.windows(2).all(|w| w[0] < w[1]) && l.iter().all(|&w| w < h.n())));
        ListInstance { g, h, lists }
    }

    #[inline]
    pub fn g(&self) -> &Graph {
        &self.g
    }

    #[inline]
    pub fn h(&self) -> &Graph {
        &self.h
    }

    #[inline]
    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    #[inline]
    pub fn list(&self, u: usize) -> &[usize] {
        &self.lists[u]
    }

    /// Total list size.
    pub fn total_list_size(&self) -> usize {
        self.lists.iter().map(Vec::len).sum()
    }

    pub fn max_list_size(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_automorphism_instance(&self) -> bool {
        self.g == self.h
    }

    /// Vertex or edge counts differ, so no bijection can be an isomorphism.
    pub fn size_mismatch(&self) -> bool {
        self.g.n() != self.h.n() || self.g.m() != self.h.m()
    }

    pub fn into_parts(self) -> (Graph, Graph, Vec<Vec<usize>>) {
        (self.g, self.h, self.lists)
    }

    /// Sub-instance on G-vertices `gv` and H-vertices `hv` with lists
    /// restricted to `hv` and renumbered locally.
    pub fn restrict(&self, gv: &[usize], hv: &[usize]) -> ListInstance {
        let mut local_h = vec![usize::MAX; self.h.n()];
        for (i, &w) in hv.iter().enumerate() {
            local_h[w] = i;
        }
        let lists = gv
            .iter()
            .map(|&u| {
                let mut l: Vec<usize> =
                    self.lists[u].iter().filter_map(|&w| (local_h[w] != usize::MAX).then_some(local_h[w])).collect();
                l.sort_unstable();
                l
            })
            .collect();
        ListInstance::from_parts(self.g.induced(gv), self.h.induced(hv), lists)
    }
}

/// A candidate map `V(g) -> V(h)`; entry `u` is the image of `u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mapping(pub Vec<usize>);

impl Mapping {
    /// Inverse of a bijection onto `0..len`; `None` if not a bijection.
    pub fn inverse(&self) -> Option<Mapping> {
        let n = self.0.len();
        let mut inv = vec![usize::MAX; n];
        for (u, &w) in self.0.iter().enumerate() {
            if w >= n || inv[w] != usize::MAX {
                return None;
            }
            inv[w] = u;
        }
        Some(Mapping(inv))
    }
}

impl Deref for Mapping {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Mapping {
    fn from(v: Vec<usize>) -> Self {
        Mapping(v)
    }
}

/// Answer of an engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    No,
    Yes(Mapping),
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, SolveResult::Yes(_))
    }

    pub fn mapping(&self) -> Option<&Mapping> {
        match self {
            SolveResult::Yes(m) => Some(m),
            SolveResult::No => None,
        }
    }
}

/// True iff `pi` is a list-compatible isomorphism from `g` to `h`.
pub fn verify_list_iso(inst: &ListInstance, pi: &[usize]) -> bool {
    let (g, h) = (inst.g(), inst.h());
    if pi.len() != g.n() || g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut used = vec![false; h.n()];
    for (u, &w) in pi.iter().enumerate() {
        if w >= h.n() || used[w] || inst.list(u).binary_search(&w).is_err() {
            return false;
        }
        used[w] = true;
    }
    // A bijection that maps every edge to an edge between graphs with equal
    // edge counts also maps non-edges to non-edges.
    g.edges().all(|(u, v)| h.has_edge(pi[u], pi[v]))
}

/// Checks an engine's answer before it is returned.
pub(crate) fn checked_yes(inst: &ListInstance, pi: Vec<usize>, engine: &str) -> Result<SolveResult> {
    if verify_list_iso(inst, &pi) {
        Ok(SolveResult::Yes(Mapping(pi)))
    } else {
        Err(Error::Internal(format!("{engine} produced a mapping that fails verification")))
    }
}
