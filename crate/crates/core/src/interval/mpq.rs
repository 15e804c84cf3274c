//! MPQ-trees built from a consecutive clique arrangement.
//!
//! Every vertex occupies the clique interval `[a, b]`. A node spans a range of
//! cliques; a vertex belongs to the smallest node whose range it cannot be
//! pushed below. Ranges split into free blocks (P-node) when some cut between
//! adjacent cliques is crossed by no inner interval, and into a fixed sequence
//! of segments (Q-node) otherwise.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::recognize::CliqueOrdering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Leaf,
    P,
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpqNode {
    pub kind: NodeKind,
    pub children: Vec<usize>,
    /// One section for leaves and P-nodes, one per child for Q-nodes.
    pub sections: Vec<Vec<usize>>,
    pub parent: Option<usize>,
}

/// Where a vertex lives: its node and, inside a Q-node, the first and last
/// child position it covers (both 0 elsewhere).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Home {
    pub node: usize,
    pub first: usize,
    pub last: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpqTree {
    pub nodes: Vec<MpqNode>,
    pub root: usize,
    pub home: Vec<Home>,
}

impl MpqTree {
    /// Vertices placed at `node`, each exactly once.
    pub fn members(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.nodes[node].sections.concat();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Nodes in an order where children come before parents.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, done)) = stack.pop() {
            if done {
                out.push(x);
            } else {
                stack.push((x, true));
                stack.extend(self.nodes[x].children.iter().rev().map(|&c| (c, false)));
            }
        }
        out
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.postorder().into_iter().filter(|&x| self.nodes[x].kind == NodeKind::Leaf).collect()
    }

    /// Reverses the child order of a Q-node, remapping its sections.
    pub fn reverse_q(&mut self, node: usize) {
        assert_eq!(self.nodes[node].kind, NodeKind::Q, "only Q-nodes are reversible");
        let m = self.nodes[node].children.len();
        self.nodes[node].children.reverse();
        self.nodes[node].sections.reverse();
        for h in self.home.iter_mut().filter(|h| h.node == node) {
            (h.first, h.last) = (m - 1 - h.last, m - 1 - h.first);
        }
    }

    /// Reorders the children of a P-node: new child `i` is old child `perm[i]`.
    pub fn permute_p(&mut self, node: usize, perm: &[usize]) {
        assert_eq!(self.nodes[node].kind, NodeKind::P, "only P-nodes are permutable");
        let old = self.nodes[node].children.clone();
        assert_eq!(perm.len(), old.len());
        self.nodes[node].children = perm.iter().map(|&i| old[i]).collect();
    }

    /// The clique at every leaf, in left-to-right order.
    pub fn leaf_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(self.root, Vec::new())];
        while let Some((x, inherited)) = stack.pop() {
            let node = &self.nodes[x];
            match node.kind {
                NodeKind::Leaf => {
                    let mut c = inherited;
                    c.extend(&node.sections[0]);
                    c.sort_unstable();
                    out.push(c);
                }
                NodeKind::P => {
                    for &ch in node.children.iter().rev() {
                        let mut c = inherited.clone();
                        c.extend(&node.sections[0]);
                        stack.push((ch, c));
                    }
                }
                NodeKind::Q => {
                    for (i, &ch) in node.children.iter().enumerate().rev() {
                        let mut c = inherited.clone();
                        c.extend(&node.sections[i]);
                        stack.push((ch, c));
                    }
                }
            }
        }
        out
    }

    /// Checks every structural invariant against `g`; the message names the
    /// first one violated.
    pub fn check_invariants(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        let mut seen = vec![0usize; n];
        for (x, node) in self.nodes.iter().enumerate() {
            let k = node.children.len();
            match node.kind {
                NodeKind::Leaf if k != 0 => return Err(format!("leaf {x} has children")),
                NodeKind::P if k < 2 => return Err(format!("P-node {x} has {k} children")),
                NodeKind::Q if k < 3 => return Err(format!("Q-node {x} has {k} children")),
                _ => {}
            }
            let want = if node.kind == NodeKind::Q { k } else { 1 };
            if node.sections.len() != want {
                return Err(format!("node {x} has {} sections", node.sections.len()));
            }
            for &c in &node.children {
                if self.nodes[c].parent != Some(x) {
                    return Err(format!("child {c} of node {x} has a different parent"));
                }
            }
            for v in self.members(x) {
                seen[v] += 1;
                let h = self.home[v];
                if h.node != x {
                    return Err(format!("vertex {v} is stored at node {x} but homed at {}", h.node));
                }
                let covered: Vec<usize> = (0..node.sections.len()).filter(|&i| node.sections[i].contains(&v)).collect();
                let expect: Vec<usize> = (h.first..=h.last).collect();
                if covered != expect {
                    return Err(format!("vertex {v} has non-consecutive sections at node {x}"));
                }
                if node.kind == NodeKind::Q && h.first == h.last {
                    return Err(format!("vertex {v} covers a single child of Q-node {x}"));
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| seen[v] != 1) {
            return Err(format!("vertex {v} lies in {} nodes", seen[v]));
        }
        let mut got = self.leaf_cliques();
        let mut want = super::recognize::maximal_cliques(g).ok_or("graph is not chordal")?;
        got.sort();
        want.sort();
        if got != want {
            return Err("leaves do not correspond to the maximal cliques".into());
        }
        Ok(())
    }
}

/// MPQ-tree of a connected interval graph from a valid clique arrangement.
pub fn build_mpq(g: &Graph, ord: &CliqueOrdering) -> Result<MpqTree> {
    let iv = ord
        .vertex_intervals(g.n())
        .ok_or_else(|| Error::Precondition("clique ordering is not consecutive for every vertex".into()))?;
    if ord.cliques.is_empty() {
        return Err(Error::Precondition("clique ordering is empty".into()));
    }
    let mut b = Builder { iv: &iv, nodes: Vec::new(), home: vec![Home { node: usize::MAX, first: 0, last: 0 }; g.n()] };
    let root = b.build(0, ord.cliques.len() - 1, (0..g.n()).collect(), None)?;
    let mut tree = MpqTree { nodes: b.nodes, root, home: b.home };
    canonicalize(&mut tree);
    tree.check_invariants(g).map_err(Error::Internal)?;
    Ok(tree)
}

struct Builder<'a> {
    iv: &'a [(usize, usize)],
    nodes: Vec<MpqNode>,
    home: Vec<Home>,
}

impl Builder<'_> {
    fn push(&mut self, kind: NodeKind, parent: Option<usize>) -> usize {
        self.nodes.push(MpqNode { kind, children: Vec::new(), sections: Vec::new(), parent });
        self.nodes.len() - 1
    }

    fn settle(&mut self, v: usize, node: usize, first: usize, last: usize) {
        self.home[v] = Home { node, first, last };
    }

    fn build(&mut self, lo: usize, hi: usize, verts: Vec<usize>, parent: Option<usize>) -> Result<usize> {
        let iv = self.iv;
        if lo == hi {
            let x = self.push(NodeKind::Leaf, parent);
            for &v in &verts {
                self.settle(v, x, 0, 0);
            }
            self.nodes[x].sections = vec![verts];
            return Ok(x);
        }
        let is_full = |v: usize| iv[v] == (lo, hi);
        let proper: Vec<(usize, usize)> =
            verts.iter().map(|&v| iv[v]).filter(|&(a, b)| b > a && (a, b) != (lo, hi)).collect();
        let mut delta = vec![0isize; hi - lo + 2];
        for &(a, b) in &proper {
            delta[a - lo] += 1;
            delta[b - lo] -= 1;
        }
        let mut crossed = Vec::with_capacity(hi - lo);
        let mut run = 0isize;
        for d in &delta[..hi - lo] {
            run += d;
            crossed.push(run > 0);
        }

        if crossed.iter().any(|&c| !c) {
            let x = self.push(NodeKind::P, parent);
            let mut blocks = Vec::new();
            let mut start = lo;
            for (i, &c) in crossed.iter().enumerate() {
                if !c {
                    blocks.push((start, lo + i));
                    start = lo + i + 1;
                }
            }
            blocks.push((start, hi));
            let section: Vec<usize> = verts.iter().copied().filter(|&v| is_full(v)).collect();
            for &v in &section {
                self.settle(v, x, 0, 0);
            }
            let mut children = Vec::with_capacity(blocks.len());
            for &(s, e) in &blocks {
                let inner: Vec<usize> =
                    verts.iter().copied().filter(|&v| !is_full(v) && iv[v].0 >= s && iv[v].1 <= e).collect();
                children.push(self.build(s, e, inner, Some(x))?);
            }
            self.nodes[x].children = children;
            self.nodes[x].sections = vec![section];
            return Ok(x);
        }

        // Every cut is crossed: the overlap component of the maximal inner
        // intervals fixes a sequence of segments.
        let mut pairs = proper.clone();
        pairs.sort_unstable();
        pairs.dedup();
        let overlaps = |p: (usize, usize), q: (usize, usize)| {
            p.0 <= q.1 && q.0 <= p.1 && !(p.0 <= q.0 && q.1 <= p.1) && !(q.0 <= p.0 && p.1 <= q.1)
        };
        let first_max = (0..pairs.len())
            .min_by_key(|&i| (pairs[i].0, std::cmp::Reverse(pairs[i].1)))
            .ok_or_else(|| Error::Internal("crossed cuts without inner intervals".into()))?;
        let mut member = vec![false; pairs.len()];
        member[first_max] = true;
        let mut queue = VecDeque::from([first_max]);
        while let Some(i) = queue.pop_front() {
            for j in 0..pairs.len() {
                if !member[j] && overlaps(pairs[i], pairs[j]) {
                    member[j] = true;
                    queue.push_back(j);
                }
            }
        }
        let mut cut = vec![false; hi - lo];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if member[i] {
                if a > lo {
                    cut[a - 1 - lo] = true;
                }
                if b < hi {
                    cut[b - lo] = true;
                }
            }
        }
        let mut segments = Vec::new();
        let mut seg_of = vec![0; hi - lo + 1];
        let mut start = lo;
        for c in lo..=hi {
            seg_of[c - lo] = segments.len();
            if c == hi || cut[c - lo] {
                segments.push((start, c));
                start = c + 1;
            }
        }
        let m = segments.len();
        if m < 3 {
            return Err(Error::Internal("Q-node with fewer than three segments".into()));
        }

        let x = self.push(NodeKind::Q, parent);
        let mut sections = vec![Vec::new(); m];
        let mut inner = vec![Vec::new(); m];
        for &v in &verts {
            let (a, b) = iv[v];
            let (s, e) = (seg_of[a - lo], seg_of[b - lo]);
            let in_component = is_full(v) || pairs.binary_search(&(a, b)).is_ok_and(|i| member[i]);
            if in_component {
                if segments[s].0 != a || segments[e].1 != b || s == e {
                    return Err(Error::Internal(format!("vertex {v} does not align with Q-node segments")));
                }
                self.settle(v, x, s, e);
                for sec in &mut sections[s..=e] {
                    sec.push(v);
                }
            } else if s == e {
                inner[s].push(v);
            } else {
                return Err(Error::Internal(format!("vertex {v} crosses a Q-node segment")));
            }
        }
        let mut children = Vec::with_capacity(m);
        for (i, verts_i) in inner.into_iter().enumerate() {
            let (s, e) = segments[i];
            children.push(self.build(s, e, verts_i, Some(x))?);
        }
        self.nodes[x].children = children;
        self.nodes[x].sections = sections;
        Ok(x)
    }
}

/// Shape of a node up to equivalence: kind, section shape, and child shapes.
type ShapeKey = (NodeKind, Vec<(usize, usize, usize)>, Vec<usize>);

/// Sorts P-node children by an interned shape id so that equivalent trees
/// list equivalent children in the same order.
fn canonicalize(tree: &mut MpqTree) {
    let mut intern: HashMap<ShapeKey, usize> = HashMap::new();
    let mut shape = vec![0usize; tree.nodes.len()];
    for x in tree.postorder() {
        let key = shape_key(tree, x, &shape);
        let next = intern.len();
        shape[x] = *intern.entry(key).or_insert(next);
        if tree.nodes[x].kind == NodeKind::P {
            tree.nodes[x].children.sort_by_key(|&c| shape[c]);
        }
    }
}

fn shape_key(tree: &MpqTree, x: usize, shape: &[usize]) -> ShapeKey {
    let node = &tree.nodes[x];
    match node.kind {
        NodeKind::Leaf | NodeKind::P => {
            let mut kids: Vec<usize> = node.children.iter().map(|&c| shape[c]).collect();
            kids.sort_unstable();
            (node.kind, vec![(0, 0, node.sections[0].len())], kids)
        }
        NodeKind::Q => {
            let m = node.children.len();
            let groups = |rev: bool| {
                let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
                for v in tree.members(x) {
                    let h = tree.home[v];
                    let span = if rev { (m - 1 - h.last, m - 1 - h.first) } else { (h.first, h.last) };
                    *counts.entry(span).or_default() += 1;
                }
                let mut g: Vec<(usize, usize, usize)> = counts.into_iter().map(|((s, e), c)| (s, e, c)).collect();
                g.sort_unstable();
                g
            };
            let fwd: Vec<usize> = node.children.iter().map(|&c| shape[c]).collect();
            let rev: Vec<usize> = fwd.iter().rev().copied().collect();
            (NodeKind::Q, groups(false), fwd).min((NodeKind::Q, groups(true), rev))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::recognize::recognize_interval;

    fn tree_of(g: &Graph) -> MpqTree {
        build_mpq(g, &recognize_interval(g).unwrap().unwrap()).unwrap()
    }

    #[test]
    fn complete_graph_is_one_leaf() {
        let t = tree_of(&Graph::complete(4));
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.nodes[t.root].kind, NodeKind::Leaf);
        assert_eq!(t.nodes[t.root].sections, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn path3_is_p_node_over_two_leaves() {
        let t = tree_of(&Graph::path(3));
        let root = &t.nodes[t.root];
        assert_eq!(root.kind, NodeKind::P);
        assert_eq!(root.sections, vec![vec![1]]);
        let mut leaf_secs: Vec<Vec<usize>> = root.children.iter().map(|&c| t.nodes[c].sections[0].clone()).collect();
        leaf_secs.sort();
        assert_eq!(leaf_secs, vec![vec![0], vec![2]]);
    }

    #[test]
    fn long_path_is_q_node() {
        let g = Graph::path(5);
        let t = tree_of(&g);
        let root = &t.nodes[t.root];
        assert_eq!(root.kind, NodeKind::Q);
        assert_eq!(root.children.len(), 4);
        assert!(t.check_invariants(&g).is_ok());
    }

    #[test]
    fn reversal_keeps_invariants() {
        let g = Graph::path(6);
        let mut t = tree_of(&g);
        let root = t.root;
        t.reverse_q(root);
        assert!(t.check_invariants(&g).is_ok());
    }

    #[test]
    fn rejects_non_consecutive_ordering() {
        let g = Graph::path(4);
        let ord = CliqueOrdering { cliques: vec![vec![0, 1], vec![2, 3], vec![1, 2]] };
        assert!(matches!(build_mpq(&g, &ord), Err(Error::Precondition(_))));
    }
}
