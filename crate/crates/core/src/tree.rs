//! Bottom-up list dynamic programming for trees.
//!
//! Both trees are rooted at their centers (a central edge is subdivided in
//! both). For every vertex `u` of G the table holds `L'(u)`: the candidates
//! `w ∈ L(u)` such that the subtree of `u` maps onto the subtree of `w`
//! compatibly with all lists below. `w ∈ L'(u)` iff the children of `u` can be
//! perfectly matched to the children of `w` along `L'`.

use std::collections::VecDeque;

use crate::basic::solve_disconnected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{checked_yes, ListInstance, SolveResult};
use crate::matching::{perfect_matching, BipartiteGraph};

/// Center of a tree: one vertex, or the two ends of a central edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    Vertex(usize),
    Edge(usize, usize),
}

/// Center by repeated leaf peeling.
pub fn find_center(g: &Graph) -> Result<Center> {
    if !g.is_tree() {
        return Err(Error::Precondition("center requested for a graph that is not a tree".into()));
    }
    let n = g.n();
    if n == 1 {
        return Ok(Center::Vertex(0));
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[leaf] = 0;
            for &v in g.neighbors(leaf) {
                if deg[v] > 1 {
                    deg[v] -= 1;
                    if deg[v] == 1 {
                        next.push(v);
                    }
                }
            }
        }
        next.sort_unstable();
        layer = next;
    }
    match layer[..] {
        [v] => Ok(Center::Vertex(v)),
        [a, b] => Ok(Center::Edge(a.min(b), a.max(b))),
        _ => Err(Error::Internal("leaf peeling left an unexpected center".into())),
    }
}

/// A tree rooted at its center; `subdivision` is the inserted middle vertex
/// (always index `n` of the original tree) when the center was an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub graph: Graph,
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Breadth-first order from the root.
    pub order: Vec<usize>,
    pub subdivision: Option<usize>,
}

impl RootedTree {
    pub fn at_center(g: &Graph, center: Center) -> RootedTree {
        let (graph, root, subdivision) = match center {
            Center::Vertex(v) => (g.clone(), v, None),
            Center::Edge(a, b) => {
                let n = g.n();
                let edges = g.edges().filter(|&e| e != (a, b)).chain([(a, n), (b, n)]);
                (Graph::from_edges_trusted(n + 1, edges), n, Some(n))
            }
        };
        let n = graph.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in graph.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    children[u].push(v);
                    queue.push_back(v);
                }
            }
        }
        RootedTree { graph, root, parent, children, order, subdivision }
    }
}

/// `L'` for every vertex of G, together with both rooted trees and the
/// (possibly extended) input lists.
#[derive(Debug, Clone)]
pub struct NodeListTable {
    pub g_tree: RootedTree,
    pub h_tree: RootedTree,
    pub lists: Vec<Vec<usize>>,
    pub feasible: Vec<Vec<usize>>,
    /// Position of every H-vertex among its parent's children.
    child_pos: Vec<usize>,
}

impl NodeListTable {
    /// Runs the bottom-up pass. `None` when the centers differ in kind, which
    /// rules out any isomorphism.
    pub fn compute(inst: &ListInstance) -> Result<Option<NodeListTable>> {
        let (g, h) = (inst.g(), inst.h());
        let (cg, ch) = (find_center(g)?, find_center(h)?);
        let mut lists = inst.lists().to_vec();
        match (cg, ch) {
            (Center::Vertex(_), Center::Vertex(_)) => {}
            (Center::Edge(..), Center::Edge(..)) => lists.push(vec![h.n()]),
            _ => return Ok(None),
        }
        let g_tree = RootedTree::at_center(g, cg);
        let h_tree = RootedTree::at_center(h, ch);

        let mut child_pos = vec![0; h_tree.graph.n()];
        for kids in &h_tree.children {
            for (i, &c) in kids.iter().enumerate() {
                child_pos[c] = i;
            }
        }

        let mut table = NodeListTable { g_tree, h_tree, lists, feasible: Vec::new(), child_pos };
        table.fill();
        Ok(Some(table))
    }

    fn fill(&mut self) {
        let (gt, ht) = (&self.g_tree, &self.h_tree);
        let mut feasible: Vec<Vec<usize>> = vec![Vec::new(); gt.graph.n()];
        let mut slot = vec![usize::MAX; ht.graph.n()];

        for &u in gt.order.iter().rev() {
            let kids = &gt.children[u];
            let k = kids.len();
            let cand: Vec<usize> = self.lists[u].iter().copied().filter(|&w| ht.children[w].len() == k).collect();
            if k == 0 {
                feasible[u] = cand;
                continue;
            }
            // Bucket the children's feasible images by their H-parent, so each
            // candidate's matching only sees edges into its own children.
            for (s, &w) in cand.iter().enumerate() {
                slot[w] = s;
            }
            let mut buckets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); cand.len()];
            for (i, &c) in kids.iter().enumerate() {
                for &w2 in &feasible[c] {
                    if let Some(p) = ht.parent[w2] {
                        let s = slot[p];
                        if s != usize::MAX {
                            let rows = &mut buckets[s];
                            if rows.is_empty() {
                                rows.resize(k, Vec::new());
                            }
                            rows[i].push(self.child_pos[w2]);
                        }
                    }
                }
            }
            for &w in &cand {
                slot[w] = usize::MAX;
            }
            let mut out = Vec::new();
            for (rows, &w) in buckets.into_iter().zip(&cand) {
                if rows.is_empty() || rows.iter().any(Vec::is_empty) {
                    continue;
                }
                if perfect_matching(&BipartiteGraph::from_rows_unchecked(k, k, rows)).is_some() {
                    out.push(w);
                }
            }
            feasible[u] = out;
        }
        self.feasible = feasible;
    }

    pub fn root_feasible(&self) -> bool {
        self.feasible[self.g_tree.root].binary_search(&self.h_tree.root).is_ok()
    }

    /// Top-down reconstruction from the root, recomputing one matching per
    /// chosen pair. Returns the mapping on the (possibly subdivided) trees.
    fn reconstruct(&self) -> Vec<usize> {
        let (gt, ht) = (&self.g_tree, &self.h_tree);
        let mut pi = vec![usize::MAX; gt.graph.n()];
        pi[gt.root] = ht.root;
        for &u in &gt.order {
            let w = pi[u];
            let kids = &gt.children[u];
            if kids.is_empty() {
                continue;
            }
            let rows: Vec<Vec<usize>> = kids
                .iter()
                .map(|&c| {
                    self.feasible[c]
                        .iter()
                        .filter(|&&w2| ht.parent[w2] == Some(w))
                        .map(|&w2| self.child_pos[w2])
                        .collect()
                })
                .collect();
            let k = kids.len();
            let assign = perfect_matching(&BipartiteGraph::from_rows_unchecked(k, k, rows))
                .expect("a feasible pair always admits a perfect matching of children");
            for (i, &c) in kids.iter().enumerate() {
                pi[c] = ht.children[w][assign[i]];
            }
        }
        pi
    }
}

/// Engine for a tree versus a tree.
pub fn solve_tree(inst: &ListInstance) -> Result<SolveResult> {
    if !inst.g().is_tree() || !inst.h().is_tree() {
        return Err(Error::Precondition("tree engine needs both graphs to be trees".into()));
    }
    if inst.size_mismatch() {
        return Ok(SolveResult::No);
    }
    let Some(table) = NodeListTable::compute(inst)? else {
        return Ok(SolveResult::No);
    };
    if !table.root_feasible() {
        return Ok(SolveResult::No);
    }
    let mut pi = table.reconstruct();
    pi.truncate(inst.g().n());
    checked_yes(inst, pi, "tree engine")
}

/// Engine for forests: trees composed over components.
pub fn solve_forest(inst: &ListInstance) -> Result<SolveResult> {
    if !inst.g().is_forest() || !inst.h().is_forest() {
        return Err(Error::Precondition("forest engine needs both graphs to be forests".into()));
    }
    solve_disconnected(inst, solve_tree)
}
