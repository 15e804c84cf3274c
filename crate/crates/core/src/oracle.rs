//! Brute-force reference solver.
//!
//! Shares only [`Graph`](crate::Graph) and [`ListInstance`] with the engines;
//! none of the pruning or matching code is reused here.

use crate::error::Result;
use crate::instance::{ListInstance, Mapping, SolveResult};

/// [`brute_solve`] with the engine signature, for use as a component solver.
pub fn oracle_engine(inst: &ListInstance) -> Result<SolveResult> {
    Ok(brute_solve(inst))
}

/// Backtracking search for a list-compatible isomorphism. Vertices are
/// explored by descending degree (ties by index).
pub fn brute_solve(inst: &ListInstance) -> SolveResult {
    brute_solve_with_order(inst, &default_order(inst))
}

/// As [`brute_solve`], exploring vertices in the given order, which must be a
/// permutation of `V(g)`.
pub fn brute_solve_with_order(inst: &ListInstance, order: &[usize]) -> SolveResult {
    let mut search = match Search::new(inst, order) {
        Some(s) => s,
        None => return SolveResult::No,
    };
    let mut found = None;
    search.run(0, &mut |pi| {
        found = Some(Mapping(pi.to_vec()));
        true
    });
    match found {
        Some(m) => SolveResult::Yes(m),
        None => SolveResult::No,
    }
}

/// Exact number of list-compatible isomorphisms.
pub fn count_list_isos(inst: &ListInstance) -> u64 {
    let order = default_order(inst);
    let mut search = match Search::new(inst, &order) {
        Some(s) => s,
        None => return 0,
    };
    let mut count = 0u64;
    search.run(0, &mut |_| {
        count += 1;
        false
    });
    count
}

fn default_order(inst: &ListInstance) -> Vec<usize> {
    let g = inst.g();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
    order
}

struct Search<'a> {
    inst: &'a ListInstance,
    order: &'a [usize],
    pi: Vec<usize>,
    used: Vec<bool>,
    /// Current candidate domains; snapshots are pushed on assignment.
    domains: Vec<Vec<usize>>,
}

const UNASSIGNED: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(inst: &'a ListInstance, order: &'a [usize]) -> Option<Self> {
        let (g, h) = (inst.g(), inst.h());
        if g.n() != h.n() || g.m() != h.m() {
            return None;
        }
        Some(Search {
            inst,
            order,
            pi: vec![UNASSIGNED; g.n()],
            used: vec![false; h.n()],
            domains: inst.lists().to_vec(),
        })
    }

    /// Calls `visit` on every complete mapping; stops once it returns true.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.pi);
        }
        let u = self.order[depth];
        let candidates = self.domains[u].clone();
        for w in candidates {
            if self.used[w] || !self.consistent(u, w) {
                continue;
            }
            self.pi[u] = w;
            self.used[w] = true;
            let saved = self.forward_check(depth, u, w);
            let stop = match saved {
                Some(s) => {
                    let stop = self.run(depth + 1, visit);
                    self.restore(depth, &s);
                    stop
                }
                None => false,
            };
            self.used[w] = false;
            self.pi[u] = UNASSIGNED;
            if stop {
                return true;
            }
        }
        false
    }

    fn consistent(&self, u: usize, w: usize) -> bool {
        let (g, h) = (self.inst.g(), self.inst.h());
        if g.degree(u) != h.degree(w) {
            return false;
        }
        self.order.iter().all(|&v| {
            let img = self.pi[v];
            img == UNASSIGNED || v == u || g.has_edge(u, v) == h.has_edge(w, img)
        })
    }

    /// Narrows domains of unassigned vertices after `u -> w`; returns the
    /// previous domains of the later vertices, or `None` if one empties.
    fn forward_check(&mut self, depth: usize, u: usize, w: usize) -> Option<Vec<Vec<usize>>> {
        let (g, h) = (self.inst.g(), self.inst.h());
        let later = &self.order[depth + 1..];
        let saved: Vec<Vec<usize>> = later.iter().map(|&v| self.domains[v].clone()).collect();
        for &v in later {
            let adjacent = g.has_edge(u, v);
            self.domains[v].retain(|&x| x != w && h.has_edge(w, x) == adjacent);
            if self.domains[v].is_empty() {
                self.restore(depth, &saved);
                return None;
            }
        }
        Some(saved)
    }

    fn restore(&mut self, depth: usize, saved: &[Vec<usize>]) {
        for (&v, d) in self.order[depth + 1..].iter().zip(saved) {
            self.domains[v].clone_from(d);
        }
    }
}
