use listiso::interval::{
    build_mpq, consecutive_arrangement, maximal_cliques, recognize_interval, solve_interval, solve_with_trees, MpqTree,
    NodeKind,
};
use listiso::oracle::brute_solve;
use listiso::{verify_list_iso, Graph, ListInstance};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn interval_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let span = 2 * n as i64;
    let iv: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..span);
            (a, a + rng.gen_range(0..=n as i64))
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if iv[u].0 <= iv[v].1 && iv[v].0 <= iv[u].1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn connected_interval_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let g = interval_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Interval test by trying every order of the maximal cliques.
fn brute_is_interval(g: &Graph) -> bool {
    let Some(cliques) = maximal_cliques(g) else {
        return false;
    };
    if cliques.len() > 7 {
        panic!("too many cliques for brute force");
    }
    permutations(cliques.len()).into_iter().any(|perm| {
        (0..g.n()).all(|v| {
            let hits: Vec<usize> = (0..perm.len()).filter(|&i| cliques[perm[i]].contains(&v)).collect();
            hits.last().is_some_and(|&l| l - hits[0] + 1 == hits.len())
        })
    })
}

fn planted(rng: &mut ChaCha8Rng, g: &Graph, width: usize, noise: f64) -> ListInstance {
    let n = g.n();
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let h = g.relabel(&sigma);
    let lists = (0..n)
        .map(|u| {
            let mut l = vec![sigma[u]];
            for _ in 1..width {
                l.push(rng.gen_range(0..n));
            }
            if rng.gen_bool(noise) {
                l.retain(|&w| w != sigma[u]);
            }
            l
        })
        .collect();
    ListInstance::new(g.clone(), h, lists).unwrap()
}

#[test]
fn recognition_matches_clique_permutation_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut yes = 0;
    for _ in 0..400 {
        let n = rng.gen_range(1..=8);
        let g = if rng.gen_bool(0.5) { random_graph(&mut rng, n, 0.4) } else { interval_graph(&mut rng, n) };
        if !g.is_connected() || maximal_cliques(&g).is_some_and(|c| c.len() > 7) {
            continue;
        }
        let ord = recognize_interval(&g).unwrap();
        assert_eq!(ord.is_some(), brute_is_interval(&g), "graph {:?}", g.edges().collect::<Vec<_>>());
        if let Some(ord) = ord {
            assert!(ord.is_valid_for(&g));
            yes += 1;
        }
    }
    assert!(yes > 50);
}

#[test]
fn consecutive_arrangement_matches_permutation_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let ground = rng.gen_range(1..=6);
        let sets: Vec<Vec<usize>> =
            (0..rng.gen_range(0..=6)).map(|_| (0..ground).filter(|_| rng.gen_bool(0.45)).collect()).collect();
        let brute =
            permutations(ground).into_iter().any(|p| listiso::interval::recognize::is_consecutive_order(&p, &sets));
        let got = consecutive_arrangement(ground, &sets);
        assert_eq!(got.is_some(), brute, "sets {sets:?}");
    }
}

#[test]
fn mpq_sections_partition_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=9);
        let g = connected_interval_graph(&mut rng, n);
        let ord = recognize_interval(&g).unwrap().unwrap();
        let t = build_mpq(&g, &ord).unwrap();
        t.check_invariants(&g).unwrap();
    }
}

#[test]
fn agrees_with_oracle_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (mut yes, mut no) = (0, 0);
    for i in 0..500 {
        let n = rng.gen_range(1..=10);
        let g = connected_interval_graph(&mut rng, n);
        let inst = if i % 5 == 0 {
            let h = connected_interval_graph(&mut rng, n);
            ListInstance::with_full_lists(g, h)
        } else {
            let width = rng.gen_range(1..=n.min(4));
            planted(&mut rng, &g, width, if i % 2 == 0 { 0.0 } else { 0.15 })
        };
        let r = solve_interval(&inst).unwrap();
        assert_eq!(r.is_yes(), brute_solve(&inst).is_yes());
        if let Some(m) = r.mapping() {
            assert!(verify_list_iso(&inst, m));
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 50 && no > 50, "yes {yes} no {no}");
}

fn scramble(t: &mut MpqTree, rng: &mut ChaCha8Rng) {
    for x in 0..t.nodes.len() {
        match t.nodes[x].kind {
            NodeKind::Q if rng.gen_bool(0.5) => t.reverse_q(x),
            NodeKind::P => {
                let mut perm: Vec<usize> = (0..t.nodes[x].children.len()).collect();
                perm.shuffle(rng);
                t.permute_p(x, &perm);
            }
            _ => {}
        }
    }
}

proptest! {
    #[test]
    fn equivalent_trees_give_same_answer(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=9);
        let g = connected_interval_graph(&mut rng, n);
        let inst = planted(&mut rng, &g, 2, 0.1);
        let tree = |g: &Graph| build_mpq(g, &recognize_interval(g).unwrap().unwrap()).unwrap();
        let (tg, th) = (tree(inst.g()), tree(inst.h()));
        let base = solve_with_trees(&inst, &tg, &th).unwrap().is_yes();
        let (mut sg, mut sh) = (tg.clone(), th.clone());
        scramble(&mut sg, &mut rng);
        scramble(&mut sh, &mut rng);
        sg.check_invariants(inst.g()).unwrap();
        prop_assert_eq!(solve_with_trees(&inst, &sg, &sh).unwrap().is_yes(), base);
    }

    #[test]
    fn full_lists_decide_isomorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=9);
        let g = connected_interval_graph(&mut rng, n);
        let h = connected_interval_graph(&mut rng, n);
        let inst = ListInstance::with_full_lists(g, h);
        prop_assert_eq!(solve_interval(&inst).unwrap().is_yes(), brute_solve(&inst).is_yes());
    }
}
