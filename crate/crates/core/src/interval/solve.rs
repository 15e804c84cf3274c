//! List DP over a pair of MPQ-trees.
//!
//! `feasible[x]` holds the H-nodes `y` such that the subtree of `x` maps onto
//! the subtree of `y`: children correspond (freely under P, in order or
//! reversed under Q) and every group of twin vertices is matched along the
//! lists onto the corresponding group of `y`.

use std::collections::HashMap;

use crate::basic::solve_disconnected;
use crate::error::{Error, Result};
use crate::instance::{checked_yes, ListInstance, SolveResult};
use crate::matching::{perfect_matching, BipartiteGraph};

use super::mpq::{build_mpq, MpqTree, NodeKind};
use super::recognize::{is_interval_graph, recognize_interval};

/// Engine for interval graphs. Disconnected inputs are composed over their
/// components.
pub fn solve_interval(inst: &ListInstance) -> Result<SolveResult> {
    if !is_interval_graph(inst.g()) || !is_interval_graph(inst.h()) {
        return Err(Error::Precondition("interval engine needs two interval graphs".into()));
    }
    if inst.size_mismatch() {
        return Ok(SolveResult::No);
    }
    if inst.g().n() == 0 {
        return Ok(SolveResult::Yes(Vec::new().into()));
    }
    if inst.g().is_connected() && inst.h().is_connected() {
        solve_interval_connected(inst)
    } else {
        solve_disconnected(inst, solve_interval_connected)
    }
}

fn solve_interval_connected(inst: &ListInstance) -> Result<SolveResult> {
    let tree = |g| -> Result<MpqTree> {
        let ord = recognize_interval(g)?
            .ok_or_else(|| Error::Precondition("interval engine needs two interval graphs".into()))?;
        build_mpq(g, &ord)
    };
    let (tg, th) = (tree(inst.g())?, tree(inst.h())?);
    solve_with_trees(inst, &tg, &th)
}

/// Runs the DP on given MPQ-trees of two connected graphs.
pub fn solve_with_trees(inst: &ListInstance, tg: &MpqTree, th: &MpqTree) -> Result<SolveResult> {
    if inst.size_mismatch() {
        return Ok(SolveResult::No);
    }
    let dp = Dp::new(inst, tg, th);
    let feasible = dp.run();
    if feasible[tg.root].binary_search(&th.root).is_err() {
        return Ok(SolveResult::No);
    }
    let pi = dp.reconstruct(&feasible)?;
    checked_yes(inst, pi, "interval engine")
}

struct Dp<'a> {
    inst: &'a ListInstance,
    tg: &'a MpqTree,
    th: &'a MpqTree,
}

/// How a feasible pair was certified: child correspondence and the vertex
/// assignment of the pair's own sections.
struct Certificate {
    child_map: Vec<usize>,
    assign: Vec<(usize, usize)>,
}

impl<'a> Dp<'a> {
    fn new(inst: &'a ListInstance, tg: &'a MpqTree, th: &'a MpqTree) -> Self {
        Dp { inst, tg, th }
    }

    fn run(&self) -> Vec<Vec<usize>> {
        let (tg, th) = (self.tg, self.th);
        let mut feasible: Vec<Vec<usize>> = vec![Vec::new(); tg.nodes.len()];
        let empty_leaves: Vec<usize> =
            th.leaves().into_iter().filter(|&y| th.nodes[y].sections[0].is_empty()).collect();
        for x in tg.postorder() {
            let node = &tg.nodes[x];
            let mut cand: Vec<usize> = if let Some(&c0) = node.children.first() {
                feasible[c0].iter().filter_map(|&y| th.nodes[y].parent).collect()
            } else if let Some(&v) = node.sections[0].first() {
                self.inst.list(v).iter().map(|&w| th.home[w].node).collect()
            } else {
                empty_leaves.clone()
            };
            cand.sort_unstable();
            cand.dedup();
            feasible[x] = cand.into_iter().filter(|&y| self.certify(x, y, &feasible).is_some()).collect();
        }
        feasible
    }

    fn certify(&self, x: usize, y: usize, feasible: &[Vec<usize>]) -> Option<Certificate> {
        let (gx, hy) = (&self.tg.nodes[x], &self.th.nodes[y]);
        if gx.kind != hy.kind || gx.children.len() != hy.children.len() {
            return None;
        }
        let fits = |c: usize, d: usize| feasible[c].binary_search(&d).is_ok();
        match gx.kind {
            NodeKind::Leaf => {
                Some(Certificate { child_map: Vec::new(), assign: self.match_group(&gx.sections[0], &hy.sections[0])? })
            }
            NodeKind::P => {
                let k = gx.children.len();
                let rows: Vec<Vec<usize>> =
                    gx.children.iter().map(|&c| (0..k).filter(|&j| fits(c, hy.children[j])).collect()).collect();
                let child_map = perfect_matching(&BipartiteGraph::from_rows_unchecked(k, k, rows))?;
                let assign = self.match_group(&gx.sections[0], &hy.sections[0])?;
                Some(Certificate { child_map, assign })
            }
            NodeKind::Q => [false, true].into_iter().find_map(|rev| self.certify_q(x, y, rev, &fits)),
        }
    }

    fn certify_q(&self, x: usize, y: usize, rev: bool, fits: &dyn Fn(usize, usize) -> bool) -> Option<Certificate> {
        let (gx, hy) = (&self.tg.nodes[x], &self.th.nodes[y]);
        let m = gx.children.len();
        let at = |i: usize| if rev { m - 1 - i } else { i };
        if (0..m).any(|i| !fits(gx.children[i], hy.children[at(i)])) {
            return None;
        }
        let groups = |t: &MpqTree, node: usize, flip: bool| {
            let mut out: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            for v in t.members(node) {
                let h = t.home[v];
                let span = if flip { (m - 1 - h.last, m - 1 - h.first) } else { (h.first, h.last) };
                out.entry(span).or_default().push(v);
            }
            out
        };
        let gg = groups(self.tg, x, rev);
        let hg = groups(self.th, y, false);
        if gg.len() != hg.len() {
            return None;
        }
        let mut assign = Vec::new();
        for (span, gv) in &gg {
            assign.extend(self.match_group(gv, hg.get(span)?)?);
        }
        Some(Certificate { child_map: (0..m).map(at).collect(), assign })
    }

    /// Perfect matching of two twin groups along the lists.
    fn match_group(&self, gv: &[usize], hv: &[usize]) -> Option<Vec<(usize, usize)>> {
        if gv.len() != hv.len() {
            return None;
        }
        let rows: Vec<Vec<usize>> = gv
            .iter()
            .map(|&v| {
                let l = self.inst.list(v);
                (0..hv.len()).filter(|&j| l.binary_search(&hv[j]).is_ok()).collect()
            })
            .collect();
        let k = gv.len();
        let m = perfect_matching(&BipartiteGraph::from_rows_unchecked(k, k, rows))?;
        Some(gv.iter().zip(m).map(|(&v, j)| (v, hv[j])).collect())
    }

    fn reconstruct(&self, feasible: &[Vec<usize>]) -> Result<Vec<usize>> {
        let mut pi = vec![usize::MAX; self.inst.g().n()];
        let mut stack = vec![(self.tg.root, self.th.root)];
        while let Some((x, y)) = stack.pop() {
            let cert = self
                .certify(x, y, feasible)
                .ok_or_else(|| Error::Internal("feasible node pair lost its certificate".into()))?;
            for (v, w) in cert.assign {
                pi[v] = w;
            }
            let (gx, hy) = (&self.tg.nodes[x], &self.th.nodes[y]);
            for (i, &c) in gx.children.iter().enumerate() {
                stack.push((c, hy.children[cert.child_map[i]]));
            }
        }
        Ok(pi)
    }
}
