//! Gadget reductions: positive 1-in-3 SAT to list automorphism, and list
//! lifting through vertex gadgets.
//!
//! Variable `i` is the 4-cycle `u_i(0), u_i(1), u'_i(1), u'_i(0)` at vertices
//! `4i..4i+4`. Its two admissible motions are the rotation `α_i` (swap
//! `u_i(j)` with `u'_i(1-j)`) and the reflection `β_i` (swap `u_i(j)` with
//! `u'_i(j)`). Clause `j` contributes eight vertices `c_j(k)` for `k = abc`
//! in binary; `c_j(k)` sees both vertices of the pair selected by `a` in the
//! first variable's gadget, by `b` in the second's, and by `c` in the third's.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{ListInstance, Mapping};

/// Positive 1-in-3 SAT formula: every clause needs exactly one true variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cnf1in3 {
    #[serde(rename = "vars")]
    pub var_count: usize,
    pub clauses: Vec<[usize; 3]>,
}

impl Cnf1in3 {
    pub fn new(var_count: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        let f = Cnf1in3 { var_count, clauses };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        for (j, c) in self.clauses.iter().enumerate() {
            if let Some(&x) = c.iter().find(|&&x| x >= self.var_count) {
                return Err(Error::InvalidInstance(format!(
                    "clause {j} uses variable {x}, but there are only {} variables",
                    self.var_count
                )));
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::InvalidInstance(format!("clause {j} repeats a variable: {c:?}")));
            }
        }
        Ok(())
    }

    /// Exactly one variable of every clause is true.
    pub fn is_satisfied_by(&self, t: &[bool]) -> bool {
        t.len() == self.var_count && self.clauses.iter().all(|c| c.iter().filter(|&&x| t[x]).count() == 1)
    }
}

/// A list automorphism instance built from a formula, with the vertex tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub instance: ListInstance,
    /// Per variable, in cycle order: `u(0), u(1), u'(1), u'(0)`.
    pub variables: Vec<[usize; 4]>,
    /// Per clause, `c(k)` for `k = 0..8`.
    pub clauses: Vec<[usize; 8]>,
    pub formula: Cnf1in3,
}

impl GadgetInstance {
    pub fn u(&self, i: usize, j: usize) -> usize {
        self.variables[i][j]
    }

    pub fn u_prime(&self, i: usize, j: usize) -> usize {
        self.variables[i][3 - j]
    }

    pub fn c(&self, j: usize, k: usize) -> usize {
        self.clauses[j][k]
    }
}

/// `α`: positions 0↔2, 1↔3 of the cycle.
const ALPHA: [usize; 4] = [2, 3, 0, 1];
/// `β`: positions 0↔3, 1↔2 of the cycle.
const BETA: [usize; 4] = [3, 2, 1, 0];

/// Builds the gadget instance of a formula.
pub fn cnf_1in3_to_listaut(f: &Cnf1in3) -> Result<GadgetInstance> {
    f.validate()?;
    let nv = f.var_count;
    let n = 4 * nv + 8 * f.clauses.len();
    let variables: Vec<[usize; 4]> = (0..nv).map(|i| [4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3]).collect();
    let clauses: Vec<[usize; 8]> = (0..f.clauses.len()).map(|j| std::array::from_fn(|k| 4 * nv + 8 * j + k)).collect();

    let mut edges = Vec::with_capacity(4 * nv + 48 * f.clauses.len());
    let mut lists = vec![Vec::new(); n];
    for cyc in &variables {
        for p in 0..4 {
            edges.push((cyc[p], cyc[(p + 1) % 4]));
            lists[cyc[p]] = vec![cyc[ALPHA[p]], cyc[BETA[p]]];
        }
    }
    for (j, vars) in f.clauses.iter().enumerate() {
        for k in 0..8 {
            let c = clauses[j][k];
            for (slot, &x) in vars.iter().enumerate() {
                let bit = (k >> (2 - slot)) & 1;
                // u(bit) and u'(bit) of variable x.
                edges.push((c, variables[x][bit]));
                edges.push((c, variables[x][3 - bit]));
            }
            lists[c] = vec![clauses[j][k ^ 4], clauses[j][k ^ 2], clauses[j][k ^ 1]];
        }
    }
    let g = Graph::from_edges(n, edges)?;
    let out =
        GadgetInstance { instance: ListInstance::automorphism(g, lists)?, variables, clauses, formula: f.clone() };
    check_gadget(&out).map_err(Error::Internal)?;
    Ok(out)
}

/// Structural invariants: `α_i` and `β_i` are automorphisms of each variable
/// cycle, each clause vertex has six neighbors, all inside variable gadgets,
/// and each clause vertex has three candidates.
pub fn check_gadget(gi: &GadgetInstance) -> std::result::Result<(), String> {
    let g = gi.instance.g();
    let var_limit = 4 * gi.variables.len();
    for (i, cyc) in gi.variables.iter().enumerate() {
        for (name, motion) in [("alpha", ALPHA), ("beta", BETA)] {
            for p in 0..4 {
                let q = (p + 1) % 4;
                if !g.has_edge(cyc[motion[p]], cyc[motion[q]]) {
                    return Err(format!("{name} is not an automorphism of variable gadget {i}"));
                }
            }
        }
    }
    for (j, block) in gi.clauses.iter().enumerate() {
        for &c in block {
            if g.degree(c) != 6 || g.neighbors(c).iter().any(|&x| x >= var_limit) {
                return Err(format!("clause vertex {c} of clause {j} does not have six gadget neighbors"));
            }
            if gi.instance.list(c).len() != 3 {
                return Err(format!("clause vertex {c} of clause {j} does not have three candidates"));
            }
        }
    }
    Ok(())
}

/// The automorphism selected by an assignment: `α_i` on true variables, `β_i`
/// on false ones, and `c_j(k) ↦ c_j(k ⊕ p)` on clause vertices, where bit
/// `p` is set for each variable of the clause that received `α`.
pub fn assignment_to_automorphism(gi: &GadgetInstance, t: &[bool]) -> Result<Mapping> {
    if t.len() != gi.variables.len() {
        return Err(Error::Precondition(format!(
            "assignment has {} values for {} variables",
            t.len(),
            gi.variables.len()
        )));
    }
    let mut pi: Vec<usize> = (0..gi.instance.g().n()).collect();
    for (i, cyc) in gi.variables.iter().enumerate() {
        let motion = if t[i] { ALPHA } else { BETA };
        for p in 0..4 {
            pi[cyc[p]] = cyc[motion[p]];
        }
    }
    for (j, vars) in gi.formula.clauses.iter().enumerate() {
        let p = 4 * usize::from(t[vars[0]]) + 2 * usize::from(t[vars[1]]) + usize::from(t[vars[2]]);
        for k in 0..8 {
            pi[gi.clauses[j][k]] = gi.clauses[j][k ^ p];
        }
    }
    Ok(Mapping(pi))
}

/// Reads the assignment off an automorphism: true where `α_i` was applied.
pub fn automorphism_to_assignment(gi: &GadgetInstance, pi: &[usize]) -> Result<Vec<bool>> {
    if pi.len() != gi.instance.g().n() {
        return Err(Error::Precondition("mapping length differs from the gadget instance".into()));
    }
    gi.variables
        .iter()
        .enumerate()
        .map(|(i, cyc)| {
            let applies = |m: [usize; 4]| (0..4).all(|p| pi[cyc[p]] == cyc[m[p]]);
            if applies(ALPHA) {
                Ok(true)
            } else if applies(BETA) {
                Ok(false)
            } else {
                Err(Error::Precondition(format!("mapping restricted to variable gadget {i} is neither alpha nor beta")))
            }
        })
        .collect()
}

/// Lifts lists through vertex gadgets. Position `i` of the gadget of `u` may
/// go to position `i` of the gadget of any `w ∈ L(u)`; vertices outside every
/// gadget may go to any vertex outside every gadget of `h2`.
pub fn lift_lists(
    inst: &ListInstance,
    g2: Graph,
    h2: Graph,
    gadget_g: &[Vec<usize>],
    gadget_h: &[Vec<usize>],
) -> Result<ListInstance> {
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; g2.n()];
    for (u, gad) in gadget_g.iter().enumerate() {
        for (i, &x) in gad.iter().enumerate() {
            let l = inst.list(u).iter().filter_map(|&w| gadget_h[w].get(i).copied()).collect();
            lists[x] = Some(l);
        }
    }
    let mut in_gadget = vec![false; h2.n()];
    for &y in gadget_h.iter().flatten() {
        in_gadget[y] = true;
    }
    let rest: Vec<usize> = (0..h2.n()).filter(|&y| !in_gadget[y]).collect();
    let lists = lists.into_iter().map(|l| l.unwrap_or_else(|| rest.clone())).collect();
    ListInstance::new(g2, h2, lists)
}

/// Subdivides every edge: edge number `e` (in [`Graph::edges`] order) becomes
/// the vertex `n + e`.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges().enumerate().flat_map(|(e, (a, b))| [(a, n + e), (b, n + e)]);
    Graph::from_edges_trusted(n + g.m(), edges)
}

fn identity_gadgets(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|u| vec![u]).collect()
}

/// Edge subdivision of both graphs with identity gadgets. The result is
/// bipartite; original vertices keep their lists and subdivision vertices may
/// go to any subdivision vertex.
pub fn lift_bipartite_subdivision(inst: &ListInstance) -> Result<ListInstance> {
    let (g, h) = (inst.g(), inst.h());
    lift_lists(inst, subdivide(g), subdivide(h), &identity_gadgets(g.n()), &identity_gadgets(h.n()))
}

/// Edge subdivision plus a clique on the original vertices, giving split
/// graphs; lists are lifted as for [`lift_bipartite_subdivision`].
pub fn lift_split_clique(inst: &ListInstance) -> Result<ListInstance> {
    let split = |g: &Graph| {
        let s = subdivide(g);
        let n = g.n();
        let clique = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::from_edges_trusted(s.n(), s.edges().chain(clique))
    };
    let (g, h) = (inst.g(), inst.h());
    lift_lists(inst, split(g), split(h), &identity_gadgets(g.n()), &identity_gadgets(h.n()))
}
