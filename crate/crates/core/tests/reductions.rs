mod common;

use common::{reduction_sweep, ReductionKind};
use listiso::basic::{reduce_aut_to_iso, reduce_iso_to_aut};
use listiso::hardness::{lift_bipartite_subdivision, lift_split_clique, subdivide};
use listiso::interval::is_interval_graph;
use listiso::oracle::brute_solve;
use listiso::{Graph, ListInstance};

#[test]
fn reductions_keep_oracle_answers() {
    for (i, kind) in ReductionKind::ALL.into_iter().enumerate() {
        let (yes, no) = reduction_sweep(kind, 80, 500 + i as u64).unwrap();
        assert!(yes >= 10 && no >= 10, "{}: yes {yes} no {no}", kind.name());
    }
}

#[test]
fn iso_to_aut_on_distinct_paths() {
    let g = Graph::path(3);
    let h = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
    let inst = ListInstance::new(g, h, vec![vec![0], vec![2], vec![1]]).unwrap();
    let aut = reduce_iso_to_aut(&inst);
    assert!(aut.is_automorphism_instance());
    assert_eq!(aut.g().n(), 6);
    assert!(brute_solve(&aut).is_yes());
}

#[test]
fn aut_to_iso_rejects_proper_iso_instances() {
    let inst = ListInstance::with_full_lists(Graph::path(3), Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap());
    assert!(reduce_aut_to_iso(&inst).is_err());
    let aut = ListInstance::automorphism(Graph::cycle(4), vec![vec![1], vec![2], vec![3], vec![0]]).unwrap();
    assert!(brute_solve(&reduce_aut_to_iso(&aut).unwrap()).is_yes());
}

#[test]
fn lifted_graphs_have_their_shape() {
    let k3 = Graph::complete(3);
    let inst = ListInstance::with_full_lists(k3.clone(), k3);
    let bip = lift_bipartite_subdivision(&inst).unwrap();
    assert_eq!((bip.g().n(), bip.g().m()), (6, 6));
    assert!(bip.g().is_cycle());
    assert!(brute_solve(&bip).is_yes());

    let split = lift_split_clique(&inst).unwrap();
    assert_eq!((split.g().n(), split.g().m()), (6, 9));
    assert!(brute_solve(&split).is_yes());

    let s = subdivide(&Graph::star(3));
    assert!(s.is_tree() && s.n() == 7);
    // Three legs of length two form an asteroidal triple.
    assert!(!is_interval_graph(&s));
}
