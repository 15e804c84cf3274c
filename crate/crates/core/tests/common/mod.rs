#![allow(dead_code)]

use listiso::gen::{plant, random_deg2_graph, random_graph, random_interval_graph, random_tree};
use listiso::hardness::Cnf1in3;
use listiso::oracle::brute_solve;
use listiso::twosat::TwoSatFormula;
use listiso::{verify_list_iso, Graph, ListInstance, Result, SolveResult};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random lists of up to `width` entries over `0..nh`.
pub fn random_lists(rng: &mut ChaCha8Rng, ng: usize, nh: usize, width: usize) -> Vec<Vec<usize>> {
    (0..ng)
        .map(|_| {
            let w = rng.gen_range(0..=width.min(nh));
            rand::seq::index::sample(rng, nh, w).into_vec()
        })
        .collect()
}

/// Moves one edge to a random non-edge, keeping the edge count.
pub fn perturb(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let non: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    if edges.is_empty() || non.is_empty() {
        return g.clone();
    }
    let i = rng.gen_range(0..edges.len());
    edges[i] = *non.choose(rng).unwrap();
    Graph::from_edges(n, edges).unwrap()
}

/// A mix of planted, noisy and random-list instances on `g` against either a
/// relabeled `g` or a relabeled `other`.
pub fn mixed_instance(rng: &mut ChaCha8Rng, g: &Graph, other: &Graph, max_width: usize) -> ListInstance {
    let n = g.n();
    let width = rng.gen_range(1..=max_width.min(n).max(1));
    let relabeled = |rng: &mut ChaCha8Rng, x: &Graph| {
        let mut sigma: Vec<usize> = (0..x.n()).collect();
        sigma.shuffle(rng);
        x.relabel(&sigma)
    };
    match rng.gen_range(0..6) {
        0 | 1 => plant(rng, g, width, 0.0),
        2 => plant(rng, g, width, 0.15),
        3 => {
            let h = relabeled(rng, other);
            let lists = random_lists(rng, n, h.n(), max_width);
            ListInstance::new(g.clone(), h, lists).unwrap()
        }
        4 => {
            let h = relabeled(rng, other);
            let w = max_width.min(h.n());
            let lists = (0..n).map(|_| rand::seq::index::sample(rng, h.n(), w).into_vec()).collect();
            ListInstance::new(g.clone(), h, lists).unwrap()
        }
        _ => {
            let h = relabeled(rng, g);
            let lists = random_lists(rng, n, n, max_width);
            ListInstance::new(g.clone(), h, lists).unwrap()
        }
    }
}

/// Random partial k-tree: a k-tree on `n` vertices with edges removed while
/// the graph stays connected.
pub fn random_partial_ktree(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Graph {
    let base = (k + 1).min(n);
    let mut edges: Vec<(usize, usize)> = (0..base).flat_map(|a| (a + 1..base).map(move |b| (a, b))).collect();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    if base == k + 1 {
        for x in 0..base {
            cliques.push((0..base).filter(|&y| y != x).collect());
        }
    }
    for v in base..n {
        let c = cliques.choose(rng).unwrap().clone();
        for &u in &c {
            edges.push((u, v));
        }
        for x in 0..c.len() {
            let mut d = c.clone();
            d[x] = v;
            cliques.push(d);
        }
    }
    edges.shuffle(rng);
    let mut g = Graph::from_edges(n, edges.clone()).unwrap();
    for i in (0..edges.len()).rev() {
        if rng.gen_bool(0.35) {
            let mut fewer = edges.clone();
            fewer.remove(i);
            let h = Graph::from_edges(n, fewer.clone()).unwrap();
            if h.is_connected() {
                edges = fewer;
                g = h;
            }
        }
    }
    g
}

pub fn connected_random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Treewidth by trying every elimination ordering, with a running-bound cut.
pub fn elimination_treewidth(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n).map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | 1 << v)).collect();
    fn go(adj: &[u32], alive: u32, width: usize, best: &mut usize) {
        if width >= *best {
            return;
        }
        if alive == 0 {
            *best = width;
            return;
        }
        for v in 0..adj.len() {
            if alive & (1 << v) == 0 {
                continue;
            }
            let nb = adj[v] & alive & !(1 << v);
            let deg = nb.count_ones() as usize;
            let mut next = adj.to_vec();
            for (u, row) in next.iter_mut().enumerate() {
                if nb & (1 << u) != 0 {
                    *row |= nb & !(1 << u);
                }
            }
            go(&next, alive & !(1 << v), width.max(deg), best);
        }
    }
    let mut best = n;
    go(&adj, (1u32 << n) - 1, 0, &mut best);
    best
}

/// Satisfiability by trying every assignment.
pub fn truth_table_2sat(f: &TwoSatFormula) -> bool {
    let v = f.var_count();
    (0u64..1 << v).any(|bits| {
        let a: Vec<bool> = (0..v).map(|i| bits >> i & 1 == 1).collect();
        f.is_satisfied_by(&a)
    })
}

/// Some satisfying 1-in-3 assignment, by enumeration.
pub fn enumerate_1in3(f: &Cnf1in3) -> Option<Vec<bool>> {
    (0u64..1 << f.var_count)
        .map(|bits| (0..f.var_count).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .find(|t| f.is_satisfied_by(t))
}

/// Engine answer equals the oracle's and any mapping verifies.
pub fn agrees_with_oracle(inst: &ListInstance, r: &Result<SolveResult>) -> std::result::Result<bool, String> {
    let r = r.as_ref().map_err(|e| format!("engine error: {e}"))?;
    let truth = brute_solve(inst).is_yes();
    if r.is_yes() != truth {
        return Err(format!("engine says {}, oracle says {truth}", r.is_yes()));
    }
    if let Some(m) = r.mapping() {
        if !verify_list_iso(inst, m) {
            return Err("engine mapping fails verification".into());
        }
    }
    Ok(truth)
}

pub fn tree_pair(rng: &mut ChaCha8Rng, n: usize) -> (Graph, Graph) {
    (random_tree(rng, n), random_tree(rng, n))
}

pub fn interval_pair(rng: &mut ChaCha8Rng, n: usize) -> (Graph, Graph) {
    (random_interval_graph(rng, n), random_interval_graph(rng, n))
}

pub fn deg2_pair(rng: &mut ChaCha8Rng, n: usize) -> (Graph, Graph) {
    (random_deg2_graph(rng, n), random_deg2_graph(rng, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepClass {
    Lists2,
    CyclePath,
    Deg2,
    Tree,
    Interval,
    Treewidth,
}

impl SweepClass {
    pub const ALL: [SweepClass; 6] = [
        SweepClass::Lists2,
        SweepClass::CyclePath,
        SweepClass::Deg2,
        SweepClass::Tree,
        SweepClass::Interval,
        SweepClass::Treewidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepClass::Lists2 => "lists<=2",
            SweepClass::CyclePath => "cycle/path",
            SweepClass::Deg2 => "max-degree-2",
            SweepClass::Tree => "tree",
            SweepClass::Interval => "interval",
            SweepClass::Treewidth => "treewidth-xp",
        }
    }
}

/// One random in-class instance and the engine's answer on it.
pub fn sweep_case(class: SweepClass, rng: &mut ChaCha8Rng) -> (ListInstance, Result<SolveResult>) {
    use listiso::basic::{solve_cycle_or_path, solve_lists_le2, solve_max_deg2};
    match class {
        SweepClass::Lists2 => {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.2..0.7);
            let g = random_graph(rng, n, p);
            let other = if rng.gen_bool(0.5) { perturb(rng, &g) } else { random_graph(rng, n, 0.4) };
            let inst = mixed_instance(rng, &g, &other, 2);
            let r = solve_lists_le2(&inst);
            (inst, r)
        }
        SweepClass::CyclePath => {
            let n = rng.gen_range(1..=10);
            let cycle = n >= 3 && rng.gen_bool(0.6);
            let g = if cycle { Graph::cycle(n) } else { Graph::path(n) };
            let inst = mixed_instance(rng, &g, &g, n);
            let r = solve_cycle_or_path(&inst);
            (inst, r)
        }
        SweepClass::Deg2 => {
            let n = rng.gen_range(1..=10);
            let (g, other) = deg2_pair(rng, n);
            let inst = mixed_instance(rng, &g, &other, n);
            let r = solve_max_deg2(&inst);
            (inst, r)
        }
        SweepClass::Tree => {
            let n = rng.gen_range(1..=12);
            let (g, other) = tree_pair(rng, n);
            let inst = mixed_instance(rng, &g, &other, n);
            let r = listiso::tree::solve_tree(&inst);
            (inst, r)
        }
        SweepClass::Interval => {
            let n = rng.gen_range(1..=10);
            let (g, other) = if n >= 4 && rng.gen_bool(0.2) {
                let cut = rng.gen_range(1..n);
                let (a, b) = interval_pair(rng, cut);
                let (c, d) = interval_pair(rng, n - cut);
                (a.disjoint_union(&c), b.disjoint_union(&d))
            } else {
                interval_pair(rng, n)
            };
            let inst = mixed_instance(rng, &g, &other, n);
            let r = listiso::interval::solve_interval(&inst);
            (inst, r)
        }
        SweepClass::Treewidth => {
            let n = rng.gen_range(1..=10);
            let k = rng.gen_range(1..=3);
            let g = random_partial_ktree(rng, n, k);
            let other = random_partial_ktree(rng, n, k);
            let inst = mixed_instance(rng, &g, &other, n);
            let r = listiso::treewidth::solve_treewidth_xp(&inst, k);
            (inst, r)
        }
    }
}

/// Runs `count` cases; returns the numbers of yes and no answers, or the
/// first disagreement with the oracle.
pub fn sweep(class: SweepClass, count: usize, seed: u64) -> std::result::Result<(usize, usize), String> {
    let mut rng = rng(seed);
    let (mut yes, mut no) = (0, 0);
    for i in 0..count {
        let (inst, r) = sweep_case(class, &mut rng);
        match agrees_with_oracle(&inst, &r) {
            Ok(true) => yes += 1,
            Ok(false) => no += 1,
            Err(e) => {
                return Err(format!(
                    "{} case {i}: {e}; instance {}",
                    class.name(),
                    listiso::io::emit_instance_with_h(&inst)
                ))
            }
        }
    }
    Ok((yes, no))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    IsoToAut,
    AutToIso,
    LiftBipartite,
    LiftSplit,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 4] =
        [ReductionKind::IsoToAut, ReductionKind::AutToIso, ReductionKind::LiftBipartite, ReductionKind::LiftSplit];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::IsoToAut => "iso-to-aut",
            ReductionKind::AutToIso => "aut-to-iso",
            ReductionKind::LiftBipartite => "lift-bipartite",
            ReductionKind::LiftSplit => "lift-split",
        }
    }
}

/// Random instances with `n <= 6`; each reduction must keep the oracle answer.
pub fn reduction_sweep(kind: ReductionKind, count: usize, seed: u64) -> std::result::Result<(usize, usize), String> {
    use listiso::basic::{reduce_aut_to_iso, reduce_iso_to_aut};
    use listiso::hardness::{lift_bipartite_subdivision, lift_split_clique};
    let mut rng = rng(seed);
    let (mut yes, mut no) = (0, 0);
    for i in 0..count {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let inst = if kind == ReductionKind::AutToIso {
            let lists = if rng.gen_bool(0.5) {
                random_lists(&mut rng, n, n, n)
            } else {
                let w = rng.gen_range(1..=n);
                (0..n).map(|_| rand::seq::index::sample(&mut rng, n, w).into_vec()).collect()
            };
            ListInstance::automorphism(g, lists).unwrap()
        } else {
            let other = if rng.gen_bool(0.5) { perturb(&mut rng, &g) } else { g.clone() };
            mixed_instance(&mut rng, &g, &other, n)
        };
        let reduced = match kind {
            ReductionKind::IsoToAut => Ok(reduce_iso_to_aut(&inst)),
            ReductionKind::AutToIso => reduce_aut_to_iso(&inst),
            ReductionKind::LiftBipartite => lift_bipartite_subdivision(&inst),
            ReductionKind::LiftSplit => lift_split_clique(&inst),
        }
        .map_err(|e| format!("{} case {i}: {e}", kind.name()))?;
        let before = brute_solve(&inst).is_yes();
        if brute_solve(&reduced).is_yes() != before {
            return Err(format!(
                "{} case {i}: answer changed from {before}; instance {}",
                kind.name(),
                listiso::io::emit_instance_with_h(&inst)
            ));
        }
        if before {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok((yes, no))
}

/// Every formula on at most three variables with at most two clauses of
/// distinct variables (clauses as ordered triples, repeats allowed).
pub fn small_formulas() -> Vec<Cnf1in3> {
    let mut out: Vec<Cnf1in3> = (0..=3).map(|v| Cnf1in3::new(v, vec![]).unwrap()).collect();
    let triples: Vec<[usize; 3]> = (0..3)
        .flat_map(|a| (0..3).flat_map(move |b| (0..3).map(move |c| [a, b, c])))
        .filter(|t| t[0] != t[1] && t[0] != t[2] && t[1] != t[2])
        .collect();
    for &t in &triples {
        out.push(Cnf1in3::new(3, vec![t]).unwrap());
        for &s in &triples {
            out.push(Cnf1in3::new(3, vec![t, s]).unwrap());
        }
    }
    out
}

pub fn random_formula(rng: &mut ChaCha8Rng) -> Cnf1in3 {
    let vars = rng.gen_range(3..=5);
    let clauses = rng.gen_range(0..=2 * vars);
    listiso::gen::gen_sat_formula(vars, clauses, rng.gen()).unwrap()
}

/// Builds the gadget instance of `f` and checks it against enumeration in
/// both directions. Returns whether `f` is satisfiable.
pub fn hardness_case(f: &Cnf1in3) -> std::result::Result<bool, String> {
    use listiso::hardness::{
        assignment_to_automorphism, automorphism_to_assignment, check_gadget, cnf_1in3_to_listaut,
    };
    let gi = cnf_1in3_to_listaut(f).map_err(|e| format!("{f:?}: {e}"))?;
    check_gadget(&gi).map_err(|e| format!("{f:?}: {e}"))?;
    let sat = enumerate_1in3(f);
    let aut = brute_solve(&gi.instance);
    if sat.is_some() != aut.is_yes() {
        return Err(format!("{f:?}: enumeration says {}, gadget says {}", sat.is_some(), aut.is_yes()));
    }
    if let Some(t) = &sat {
        let pi = assignment_to_automorphism(&gi, t).map_err(|e| e.to_string())?;
        if !verify_list_iso(&gi.instance, &pi) {
            return Err(format!("{f:?}: automorphism of {t:?} fails verification"));
        }
    }
    if let Some(pi) = aut.mapping() {
        let t = automorphism_to_assignment(&gi, pi).map_err(|e| format!("{f:?}: {e}"))?;
        if !f.is_satisfied_by(&t) {
            return Err(format!("{f:?}: assignment {t:?} read off the automorphism fails"));
        }
    }
    Ok(sat.is_some())
}

/// Hopcroft–Karp against single-path augmentation.
pub fn matching_sweep(count: usize, seed: u64) -> std::result::Result<(), String> {
    use listiso::matching::{augmenting_path_matching, max_bipartite_matching, BipartiteGraph};
    let mut rng = rng(seed);
    for i in 0..count {
        let (nl, nr) = (rng.gen_range(0..=12), rng.gen_range(0..=12));
        let p = rng.gen_range(0.05..0.6);
        let edges: Vec<(usize, usize)> =
            (0..nl).flat_map(|l| (0..nr).map(move |r| (l, r))).filter(|_| rng.gen_bool(p)).collect();
        let b = BipartiteGraph::from_edges(nl, nr, edges).unwrap();
        let fast = max_bipartite_matching(&b);
        if !fast.is_valid_for(&b) {
            return Err(format!("case {i}: invalid matching"));
        }
        let slow = augmenting_path_matching(&b).size();
        if fast.size() != slow {
            return Err(format!("case {i}: sizes {} vs {slow}", fast.size()));
        }
    }
    Ok(())
}

pub fn random_2sat(rng: &mut ChaCha8Rng) -> TwoSatFormula {
    use listiso::twosat::Lit;
    let v = rng.gen_range(1..=15);
    let mut f = TwoSatFormula::new(v);
    let m = rng.gen_range(0..=3 * v);
    for _ in 0..m {
        let a = Lit::is(rng.gen_range(0..v), rng.gen());
        let b = Lit::is(rng.gen_range(0..v), rng.gen());
        f.add_clause(a, b);
    }
    f
}

/// 2-SAT against the truth table; returns the number of satisfiable formulas.
pub fn twosat_sweep(count: usize, seed: u64) -> std::result::Result<usize, String> {
    use listiso::twosat::solve_2sat;
    let mut rng = rng(seed);
    let mut sat = 0;
    for i in 0..count {
        let f = random_2sat(&mut rng);
        let got = solve_2sat(&f);
        if got.is_some() != truth_table_2sat(&f) {
            return Err(format!("case {i}: solver says {}", got.is_some()));
        }
        if let Some(a) = got {
            if !f.is_satisfied_by(&a) {
                return Err(format!("case {i}: returned assignment fails"));
            }
            sat += 1;
        }
    }
    Ok(sat)
}

/// `check_treewidth` against elimination orderings, for every `k` up to `n`.
pub fn treewidth_sweep(count: usize, seed: u64) -> std::result::Result<(), String> {
    use listiso::treewidth::check_treewidth;
    let mut rng = rng(seed);
    for i in 0..count {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let tw = elimination_treewidth(&g);
        for k in 0..=n {
            if check_treewidth(&g, k) != (tw <= k) {
                return Err(format!("case {i}: treewidth {tw}, check_treewidth(k={k}) disagrees"));
            }
        }
    }
    Ok(())
}
