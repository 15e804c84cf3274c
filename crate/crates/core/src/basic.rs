//! Interreductions and the elementary engines: lists of size at most two,
//! cycles and paths, maximum degree two, and composition over components.

use crate::error::{Error, Result};
use crate::graph::{component_labels, connected_components, Graph};
use crate::instance::{checked_yes, ListInstance, SolveResult};
use crate::matching::{perfect_matching, BipartiteGraph};
use crate::prune::prune;
use crate::twosat::{solve_2sat, Lit, TwoSatFormula};

/// ListIso to ListAut: the graph `G ⊔ H` (H shifted by `n(G)`), with G-vertex
/// lists moved into the H copy and every H-copy vertex allowed anywhere in G.
pub fn reduce_iso_to_aut(inst: &ListInstance) -> ListInstance {
    let (g, h) = (inst.g(), inst.h());
    let off = g.n();
    let union = g.disjoint_union(h);
    let mut lists: Vec<Vec<usize>> = inst.lists().iter().map(|l| l.iter().map(|&w| w + off).collect()).collect();
    lists.extend(std::iter::repeat_with(|| (0..off).collect()).take(h.n()));
    ListInstance::from_parts(union.clone(), union, lists)
}

/// ListAut to ListIso: `H` is a copy of `G`, lists unchanged.
pub fn reduce_aut_to_iso(aut: &ListInstance) -> Result<ListInstance> {
    if !aut.is_automorphism_instance() {
        return Err(Error::Precondition("expected a ListAut instance (h must equal g)".into()));
    }
    Ok(ListInstance::from_parts(aut.g().clone(), aut.g().clone(), aut.lists().to_vec()))
}

/// Engine for instances whose lists all have at most two entries.
///
/// After pruning, vertex `u` gets variable `x_u` with `π(u) = L(u)[x_u]`;
/// clauses enforce injectivity and that neighbors land on neighbors.
pub fn solve_lists_le2(inst: &ListInstance) -> Result<SolveResult> {
    if let Some(u) = (0..inst.g().n()).find(|&u| inst.list(u).len() > 2) {
        return Err(Error::Precondition(format!(
            "list of vertex {u} has {} entries; this engine accepts at most two",
            inst.list(u).len()
        )));
    }
    if inst.size_mismatch() {
        return Ok(SolveResult::No);
    }
    let inst = match prune(inst) {
        Ok(p) => p,
        Err(_) => return Ok(SolveResult::No),
    };
    let (g, h) = (inst.g(), inst.h());
    let n = g.n();
    let lit = |u: usize, j: usize| Lit::is(u, j == 1);

    let mut f = TwoSatFormula::new(n);
    let mut holders: Vec<Vec<Lit>> = vec![Vec::new(); h.n()];
    for u in 0..n {
        let list = inst.list(u);
        if list.len() == 1 {
            f.add_unit(lit(u, 0));
        }
        for (j, &w) in list.iter().enumerate() {
            holders[w].push(lit(u, j));
        }
    }
    for lits in &holders {
        at_most_one(&mut f, lits);
    }

    for u in 0..n {
        for (j, &w) in inst.list(u).iter().enumerate() {
            for &v in g.neighbors(u) {
                let lv = inst.list(v);
                let allowed: Vec<usize> = (0..lv.len()).filter(|&k| h.has_edge(w, lv[k])).collect();
                match allowed.len() {
                    0 => {
                        f.add_unit(lit(u, j).negate());
                        break;
                    }
                    1 if lv.len() == 2 => f.add_clause(lit(u, j).negate(), lit(v, allowed[0])),
                    _ => {}
                }
            }
        }
    }

    match solve_2sat(&f) {
        None => Ok(SolveResult::No),
        Some(a) => {
            let pi = (0..n).map(|u| inst.list(u)[usize::from(a[u])]).collect();
            checked_yes(&inst, pi, "lists-le2 engine")
        }
    }
}

/// At most one of `lits` is true: pairwise for short sequences, otherwise
/// the sequential-counter encoding, which stays 2-CNF.
fn at_most_one(f: &mut TwoSatFormula, lits: &[Lit]) {
    if lits.len() <= 4 {
        for (i, &a) in lits.iter().enumerate() {
            for &b in &lits[i + 1..] {
                f.forbid_both(a, b);
            }
        }
        return;
    }
    let mut prev: Option<usize> = None;
    for &a in lits {
        let s = f.add_var();
        f.add_clause(a.negate(), Lit::pos(s));
        if let Some(p) = prev {
            f.add_clause(Lit::neg(p), Lit::pos(s));
            f.add_clause(a.negate(), Lit::neg(p));
        }
        prev = Some(s);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Cycle,
    Path,
    Other,
}

fn shape(g: &Graph) -> Shape {
    if g.is_cycle() {
        Shape::Cycle
    } else if g.is_path() {
        Shape::Path
    } else {
        Shape::Other
    }
}

/// Vertices of a path or cycle in traversal order starting `start, next, ...`.
fn walk(g: &Graph, start: usize, next: Option<usize>) -> Vec<usize> {
    let mut seq = Vec::with_capacity(g.n());
    seq.push(start);
    let (mut prev, mut cur) = (start, next);
    while let Some(c) = cur {
        if c == start {
            break;
        }
        seq.push(c);
        let step = g.neighbors(c).iter().copied().find(|&x| x != prev);
        prev = c;
        cur = step;
    }
    seq
}

/// Engine for a single cycle versus a single cycle, or a single path versus
/// a single path. At most two isomorphisms send a fixed vertex to a fixed
/// image; each is tested against the lists.
pub fn solve_cycle_or_path(inst: &ListInstance) -> Result<SolveResult> {
    let (g, h) = (inst.g(), inst.h());
    let (sg, sh) = (shape(g), shape(h));
    if sg == Shape::Other || sh == Shape::Other {
        return Err(Error::Precondition(
            "cycle/path engine needs each graph to be a single cycle or a single path".into(),
        ));
    }
    if inst.size_mismatch() || sg != sh {
        return Ok(SolveResult::No);
    }
    let n = g.n();
    let fits = |g_seq: &[usize], h_seq: &[usize]| -> Option<Vec<usize>> {
        let mut pi = vec![0; n];
        for (&u, &w) in g_seq.iter().zip(h_seq) {
            if inst.list(u).binary_search(&w).is_err() {
                return None;
            }
            pi[u] = w;
        }
        Some(pi)
    };

    if sg == Shape::Cycle {
        let u = (0..n).min_by_key(|&u| (inst.list(u).len(), u)).unwrap();
        let g_seq = walk(g, u, Some(g.neighbors(u)[0]));
        for &v in inst.list(u) {
            for &dir in h.neighbors(v) {
                let h_seq = walk(h, v, Some(dir));
                if let Some(pi) = fits(&g_seq, &h_seq) {
                    return checked_yes(inst, pi, "cycle engine");
                }
            }
        }
        return Ok(SolveResult::No);
    }

    let end = |x: &Graph| (0..x.n()).find(|&v| x.degree(v) <= 1).unwrap();
    let (ge, he) = (end(g), end(h));
    let g_seq = walk(g, ge, g.neighbors(ge).first().copied());
    let mut h_seq = walk(h, he, h.neighbors(he).first().copied());
    if let Some(pi) = fits(&g_seq, &h_seq) {
        return checked_yes(inst, pi, "path engine");
    }
    h_seq.reverse();
    match fits(&g_seq, &h_seq) {
        Some(pi) => checked_yes(inst, pi, "path engine"),
        None => Ok(SolveResult::No),
    }
}

/// Engine for graphs of maximum degree two (disjoint paths and cycles).
pub fn solve_max_deg2(inst: &ListInstance) -> Result<SolveResult> {
    if inst.g().max_degree() > 2 || inst.h().max_degree() > 2 {
        return Err(Error::Precondition("max-degree-2 engine got a vertex of degree at least three".into()));
    }
    solve_disconnected(inst, solve_cycle_or_path)
}

/// Feasibility graph between G-components and H-components, with a witness
/// mapping stored for every edge.
#[derive(Debug, Clone, Default)]
pub struct ComponentFeasibility {
    pub g_components: Vec<Vec<usize>>,
    pub h_components: Vec<Vec<usize>>,
    /// Per G-component: feasible H-components with a local witness mapping.
    pub witnesses: Vec<Vec<(usize, Vec<usize>)>>,
}

impl ComponentFeasibility {
    pub fn bipartite(&self) -> BipartiteGraph {
        let rows = self.witnesses.iter().map(|row| row.iter().map(|(j, _)| *j).collect()).collect();
        BipartiteGraph::from_rows_unchecked(self.g_components.len(), self.h_components.len(), rows)
    }
}

/// Component-pair signature: vertex count, edge count, degree multiset.
fn signature(g: &Graph, comp: &[usize]) -> (usize, usize, Vec<usize>) {
    let mut degs: Vec<usize> = comp.iter().map(|&v| g.degree(v)).collect();
    degs.sort_unstable();
    let m = degs.iter().sum::<usize>() / 2;
    (comp.len(), m, degs)
}

/// Tests every plausible (G-component, H-component) pair with
/// `component_solver` and records the feasible ones.
pub fn component_feasibility<F>(inst: &ListInstance, mut component_solver: F) -> Result<ComponentFeasibility>
where
    F: FnMut(&ListInstance) -> Result<SolveResult>,
{
    let (g, h) = (inst.g(), inst.h());
    let gc = connected_components(g);
    let hc = connected_components(h);
    let h_label = component_labels(h, &hc);
    let g_sigs: Vec<_> = gc.iter().map(|c| signature(g, c)).collect();
    let h_sigs: Vec<_> = hc.iter().map(|c| signature(h, c)).collect();

    let mut hits = vec![0usize; hc.len()];
    let mut stamp = vec![usize::MAX; hc.len()];
    let mut witnesses = Vec::with_capacity(gc.len());
    for (i, comp) in gc.iter().enumerate() {
        // A feasible H-component meets every list of the G-component.
        let mut touched = Vec::new();
        for &u in comp {
            for &w in inst.list(u) {
                let j = h_label[w];
                if stamp[j] == u {
                    continue;
                }
                stamp[j] = u;
                if hits[j] == 0 {
                    touched.push(j);
                }
                hits[j] += 1;
            }
        }
        touched.sort_unstable();
        let mut row = Vec::new();
        for &j in &touched {
            let full = hits[j] == comp.len();
            hits[j] = 0;
            if !full || g_sigs[i] != h_sigs[j] {
                continue;
            }
            let sub = inst.restrict(comp, &hc[j]);
            if let SolveResult::Yes(m) = component_solver(&sub)? {
                row.push((j, m.0));
            }
        }
        witnesses.push(row);
    }
    Ok(ComponentFeasibility { g_components: gc, h_components: hc, witnesses })
}

/// Solves a possibly disconnected instance from a solver for connected
/// component pairs: a list-compatible isomorphism exists iff the component
/// feasibility graph has a perfect matching.
pub fn solve_disconnected<F>(inst: &ListInstance, component_solver: F) -> Result<SolveResult>
where
    F: FnMut(&ListInstance) -> Result<SolveResult>,
{
    if inst.size_mismatch() {
        return Ok(SolveResult::No);
    }
    let feas = component_feasibility(inst, component_solver)?;
    if feas.g_components.len() != feas.h_components.len() {
        return Ok(SolveResult::No);
    }
    let Some(assign) = perfect_matching(&feas.bipartite()) else {
        return Ok(SolveResult::No);
    };
    let mut pi = vec![0; inst.g().n()];
    for (i, &j) in assign.iter().enumerate() {
        let local = &feas.witnesses[i].iter().find(|(jj, _)| *jj == j).expect("matched pair has a witness").1;
        let (gcomp, hcomp) = (&feas.g_components[i], &feas.h_components[j]);
        for (a, &u) in gcomp.iter().enumerate() {
            pi[u] = hcomp[local[a]];
        }
    }
    checked_yes(inst, pi, "component composition")
}
