//! Bounded treewidth: the recursive partial k-tree test and the XP list
//! isomorphism DP over border sets.
//!
//! Both recursions work on a connected vertex set `W` together with its
//! border `N(W)`, which always has at most `k` vertices. Splitting off one
//! vertex `v ∈ W` leaves components whose borders lie inside `N(W) ∪ {v}`.

use std::collections::HashMap;

use crate::basic::solve_disconnected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{checked_yes, ListInstance, SolveResult};
use crate::matching::{perfect_matching, BipartiteGraph};

/// Connected components of `g[set]`, each sorted, ordered by least vertex.
fn components_within(g: &Graph, set: &[usize], mark: &mut [u32], stamp: &mut u32) -> Vec<Vec<usize>> {
    *stamp += 2;
    let (inside, done) = (*stamp - 1, *stamp);
    for &v in set {
        mark[v] = inside;
    }
    let mut out = Vec::new();
    for &s in set {
        if mark[s] != inside {
            continue;
        }
        mark[s] = done;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if mark[w] == inside {
                    mark[w] = done;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_unstable_by_key(|c| c[0]);
    out
}

/// Vertices outside `set` adjacent to it.
fn border(g: &Graph, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> =
        set.iter().flat_map(|&u| g.neighbors(u).iter().copied()).filter(|w| set.binary_search(w).is_err()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

struct WidthOracle<'a> {
    g: &'a Graph,
    k: usize,
    memo: HashMap<Vec<usize>, bool>,
    mark: Vec<u32>,
    stamp: u32,
}

impl<'a> WidthOracle<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        WidthOracle { g, k, memo: HashMap::new(), mark: vec![0; g.n()], stamp: 0 }
    }

    /// `g[N(w) ∪ w]` has a decomposition of width ≤ k with `N(w)` in one bag.
    fn fits(&mut self, w: &[usize]) -> bool {
        if w.len() + border(self.g, w).len() <= self.k + 1 {
            return true;
        }
        if let Some(&r) = self.memo.get(w) {
            return r;
        }
        let r = w.iter().any(|&v| self.split(w, v).is_some());
        self.memo.insert(w.to_vec(), r);
        r
    }

    /// Components of `w ∖ {v}` when every one of them has a border of at
    /// most `k` vertices and fits recursively.
    fn split(&mut self, w: &[usize], v: usize) -> Option<Vec<Vec<usize>>> {
        let rest: Vec<usize> = w.iter().copied().filter(|&x| x != v).collect();
        let parts = components_within(self.g, &rest, &mut self.mark, &mut self.stamp);
        for p in &parts {
            if border(self.g, p).len() > self.k || !self.fits(p) {
                return None;
            }
        }
        Some(parts)
    }
}

/// True iff `g` has treewidth at most `k`.
pub fn check_treewidth(g: &Graph, k: usize) -> bool {
    let mut oracle = WidthOracle::new(g, k);
    crate::graph::connected_components(g).iter().all(|c| oracle.fits(c))
}

/// Memo key of the XP recursion: a component `a` of G with border `c`, a
/// component `b` of H with border `d`, and the bijection `f: c → d` as sorted
/// pairs (so `c` and `d` are its domain and image).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderState {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub f: Vec<(usize, usize)>,
}

impl BorderState {
    pub fn c(&self) -> Vec<usize> {
        self.f.iter().map(|&(x, _)| x).collect()
    }

    pub fn d(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.f.iter().map(|&(_, y)| y).collect();
        d.sort_unstable();
        d
    }
}

/// Accepted choice for a state: the image of the split vertex and, for each
/// component of `a ∖ {v}`, the matched component of `b ∖ {w}`.
#[derive(Debug, Clone)]
struct Choice {
    w: usize,
    pairs: Vec<(Vec<usize>, Vec<usize>)>,
}

/// The XP dynamic program for one instance and width bound.
pub struct XpSolver<'a> {
    inst: &'a ListInstance,
    width: WidthOracle<'a>,
    memo: HashMap<BorderState, Option<Choice>>,
    mark: Vec<u32>,
    stamp: u32,
}

impl<'a> XpSolver<'a> {
    pub fn new(inst: &'a ListInstance, k: usize) -> Self {
        XpSolver {
            inst,
            width: WidthOracle::new(inst.g(), k),
            memo: HashMap::new(),
            mark: vec![0; inst.g().n().max(inst.h().n())],
            stamp: 0,
        }
    }

    /// True iff some list-compatible isomorphism `G[c ∪ a] → H[d ∪ b]`
    /// extends `f` and maps `a` onto `b`. The state's `f` must preserve
    /// adjacency on `c`, and `c`, `d` must be the borders of `a`, `b`.
    pub fn equiv(&mut self, s: &BorderState) -> bool {
        if s.a.len() != s.b.len() {
            return false;
        }
        if s.a.len() == 1 {
            return self.compatible(s.a[0], s.b[0], &s.f);
        }
        if s.a.is_empty() {
            return true;
        }
        if let Some(r) = self.memo.get(s) {
            return r.is_some();
        }
        let choice = self.search(s);
        let ok = choice.is_some();
        self.memo.insert(s.clone(), choice);
        ok
    }

    /// `w ∈ L(v)` and `v`'s adjacency to the border mirrors `w`'s under `f`.
    fn compatible(&self, v: usize, w: usize, f: &[(usize, usize)]) -> bool {
        let (g, h) = (self.inst.g(), self.inst.h());
        self.inst.list(v).binary_search(&w).is_ok()
            && g.degree(v) == h.degree(w)
            && f.iter().all(|&(c, d)| g.has_edge(v, c) == h.has_edge(w, d))
    }

    fn split_vertex(&mut self, a: &[usize]) -> usize {
        a.iter().copied().find(|&v| self.width.split(a, v).is_some()).unwrap_or(a[0])
    }

    fn search(&mut self, s: &BorderState) -> Option<Choice> {
        let (g, h) = (self.inst.g(), self.inst.h());
        let v = self.split_vertex(&s.a);
        let a_rest: Vec<usize> = s.a.iter().copied().filter(|&x| x != v).collect();
        let a_parts = components_within(g, &a_rest, &mut self.mark, &mut self.stamp);
        let a_borders: Vec<Vec<usize>> = a_parts.iter().map(|p| border(g, p)).collect();

        for &w in &s.b {
            if !self.compatible(v, w, &s.f) {
                continue;
            }
            let mut f2 = s.f.clone();
            f2.push((v, w));
            f2.sort_unstable();
            let image = |x: usize| f2.binary_search_by_key(&x, |&(c, _)| c).ok().map(|i| f2[i].1);

            let b_rest: Vec<usize> = s.b.iter().copied().filter(|&x| x != w).collect();
            let b_parts = components_within(h, &b_rest, &mut self.mark, &mut self.stamp);
            if b_parts.len() != a_parts.len() {
                continue;
            }
            let b_borders: Vec<Vec<usize>> = b_parts.iter().map(|p| border(h, p)).collect();

            let t = a_parts.len();
            let mut rows = vec![Vec::new(); t];
            for p in 0..t {
                let mapped: Option<Vec<usize>> = a_borders[p].iter().map(|&x| image(x)).collect();
                let Some(mut mapped) = mapped else { continue };
                mapped.sort_unstable();
                let fp: Vec<(usize, usize)> = a_borders[p].iter().map(|&x| (x, image(x).unwrap())).collect();
                for q in 0..t {
                    if a_parts[p].len() != b_parts[q].len() || mapped != b_borders[q] {
                        continue;
                    }
                    let sub = BorderState { a: a_parts[p].clone(), b: b_parts[q].clone(), f: fp.clone() };
                    if self.equiv(&sub) {
                        rows[p].push(q);
                    }
                }
            }
            if let Some(m) = perfect_matching(&BipartiteGraph::from_rows_unchecked(t, t, rows)) {
                let pairs = m.into_iter().enumerate().map(|(p, q)| (a_parts[p].clone(), b_parts[q].clone())).collect();
                return Some(Choice { w, pairs });
            }
        }
        None
    }

    /// Replays accepted choices of a true state into `pi`.
    fn assign(&mut self, s: &BorderState, pi: &mut [usize]) -> Result<()> {
        if s.a.len() == 1 {
            pi[s.a[0]] = s.b[0];
            return Ok(());
        }
        if s.a.is_empty() {
            return Ok(());
        }
        let choice = self
            .memo
            .get(s)
            .cloned()
            .flatten()
            .ok_or_else(|| Error::Internal("accepted border state has no recorded choice".into()))?;
        let v = self.split_vertex(&s.a);
        pi[v] = choice.w;
        let mut f2 = s.f.clone();
        f2.push((v, choice.w));
        f2.sort_unstable();
        for (a, b) in choice.pairs {
            let ab = border(self.inst.g(), &a);
            let f: Vec<(usize, usize)> =
                ab.iter().map(|&x| f2[f2.binary_search_by_key(&x, |&(c, _)| c).unwrap()]).collect();
            self.assign(&BorderState { a, b, f }, pi)?;
        }
        Ok(())
    }
}

fn solve_connected(inst: &ListInstance, k: usize) -> Result<SolveResult> {
    let n = inst.g().n();
    let top = BorderState { a: (0..n).collect(), b: (0..inst.h().n()).collect(), f: Vec::new() };
    let mut xp = XpSolver::new(inst, k);
    if !xp.equiv(&top) {
        return Ok(SolveResult::No);
    }
    let mut pi = vec![usize::MAX; n];
    xp.assign(&top, &mut pi)?;
    checked_yes(inst, pi, "treewidth engine")
}

/// Engine for graphs of treewidth at most `k`.
pub fn solve_treewidth_xp(inst: &ListInstance, k: usize) -> Result<SolveResult> {
    if inst.size_mismatch() {
        return Ok(SolveResult::No);
    }
    for (name, g) in [("g", inst.g()), ("h", inst.h())] {
        if !check_treewidth(g, k) {
            return Err(Error::Precondition(format!("{name} has treewidth above {k}")));
        }
    }
    if inst.g().is_connected() && inst.h().is_connected() {
        solve_connected(inst, k)
    } else {
        solve_disconnected(inst, |sub| solve_connected(sub, k))
    }
}
