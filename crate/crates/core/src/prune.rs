//! List pruning passes shared by the engines.
//!
//! Both passes only remove candidates that no list-compatible isomorphism
//! can use, so they never change the answer. An emptied list is reported as
//! [`Infeasible`], a certified `No`.

use std::fmt;

use crate::instance::ListInstance;

/// Which rule emptied a list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PruneRule {
    /// No candidate of matching degree.
    Degree,
    /// A forced neighbor left no candidate adjacent to the forced image.
    EmptyList,
    /// The only candidate is already forced for another vertex.
    Injectivity,
}

/// Certified `No` produced by a pruning pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasible {
    pub rule: PruneRule,
    pub vertex: usize,
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match self.rule {
            PruneRule::Degree => "degree",
            PruneRule::EmptyList => "empty-list",
            PruneRule::Injectivity => "injectivity",
        };
        write!(f, "list of vertex {} emptied by the {rule} rule", self.vertex)
    }
}

/// Keeps only candidates whose degree equals the vertex's degree.
pub fn degree_prune(inst: &ListInstance) -> Result<ListInstance, Infeasible> {
    let (g, h) = (inst.g(), inst.h());
    let mut lists = Vec::with_capacity(g.n());
    for u in 0..g.n() {
        let d = g.degree(u);
        let list: Vec<usize> = inst.list(u).iter().copied().filter(|&w| h.degree(w) == d).collect();
        if list.is_empty() {
            return Err(Infeasible { rule: PruneRule::Degree, vertex: u });
        }
        lists.push(list);
    }
    Ok(ListInstance::from_parts(g.clone(), h.clone(), lists))
}

/// Fixpoint of the singleton rule: when `L(u) = {w}`, every neighbor of `u`
/// keeps only neighbors of `w`, and `w` leaves every other list.
pub fn propagate_singletons(inst: &ListInstance) -> Result<ListInstance, Infeasible> {
    let (g, h) = (inst.g(), inst.h());
    let mut lists: Vec<Vec<usize>> = inst.lists().to_vec();
    for (u, l) in lists.iter().enumerate() {
        if l.is_empty() {
            return Err(Infeasible { rule: PruneRule::EmptyList, vertex: u });
        }
    }

    // holders[w]: G-vertices whose list contained w at construction; may be stale.
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (u, l) in lists.iter().enumerate() {
        for &w in l {
            holders[w].push(u);
        }
    }

    let mut done = vec![false; g.n()];
    let mut queue: Vec<usize> = (0..g.n()).filter(|&u| lists[u].len() == 1).collect();
    while let Some(u) = queue.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        let w = lists[u][0];

        for &other in &holders[w] {
            if other == u {
                continue;
            }
            let l = &mut lists[other];
            if let Ok(pos) = l.binary_search(&w) {
                l.remove(pos);
                match l.len() {
                    0 => return Err(Infeasible { rule: PruneRule::Injectivity, vertex: other }),
                    1 => queue.push(other),
                    _ => {}
                }
            }
        }

        for &v in g.neighbors(u) {
            let before = lists[v].len();
            let kept = intersect_sorted(&lists[v], h.neighbors(w));
            if kept.is_empty() {
                return Err(Infeasible { rule: PruneRule::EmptyList, vertex: v });
            }
            if kept.len() != before {
                if kept.len() == 1 {
                    queue.push(v);
                }
                lists[v] = kept;
            }
        }
    }
    Ok(ListInstance::from_parts(g.clone(), h.clone(), lists))
}

/// Runs [`degree_prune`] then [`propagate_singletons`].
pub fn prune(inst: &ListInstance) -> Result<ListInstance, Infeasible> {
    propagate_singletons(&degree_prune(inst)?)
}

pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
