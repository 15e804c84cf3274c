mod common;

use common::{hardness_case, random_formula, rng, small_formulas};
use listiso::basic::solve_lists_le2;
use listiso::hardness::{automorphism_to_assignment, cnf_1in3_to_listaut, Cnf1in3};
use listiso::oracle::{brute_solve, count_list_isos};
use listiso::{verify_list_iso, Error, ListInstance};

#[test]
fn small_formulas_exhaustively() {
    let all = small_formulas();
    assert_eq!(all.len(), 4 + 6 + 36);
    // Two clauses over the same three variables are always satisfiable.
    assert!(all.iter().all(|f| hardness_case(f).unwrap()));
}

#[test]
fn random_formulas() {
    let mut r = rng(11);
    let (mut sat, mut unsat) = (0, 0);
    for _ in 0..100 {
        if hardness_case(&random_formula(&mut r)).unwrap() {
            sat += 1;
        } else {
            unsat += 1;
        }
    }
    assert!(sat >= 10 && unsat >= 10, "sat {sat} unsat {unsat}");
}

#[test]
fn single_clause_automorphisms_match_assignments() {
    // Each of the three satisfying assignments fixes the clause motion.
    let f = Cnf1in3::new(3, vec![[0, 1, 2]]).unwrap();
    let gi = cnf_1in3_to_listaut(&f).unwrap();
    assert_eq!(count_list_isos(&gi.instance), 3);
}

#[test]
fn repeated_and_unsatisfiable_clause_sets() {
    let f = Cnf1in3::new(3, vec![[0, 1, 2], [0, 1, 2]]).unwrap();
    assert!(brute_solve(&cnf_1in3_to_listaut(&f).unwrap().instance).is_yes());
    // Every variable sits in three of the four clauses, so three times the
    // number of true variables would have to equal four.
    let g = Cnf1in3::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
    let gi = cnf_1in3_to_listaut(&g).unwrap();
    assert!(common::enumerate_1in3(&g).is_none());
    assert!(!brute_solve(&gi.instance).is_yes());
}

#[test]
fn gadget_lists_are_too_large_for_the_two_sat_engine() {
    let f = Cnf1in3::new(3, vec![[0, 1, 2]]).unwrap();
    let gi = cnf_1in3_to_listaut(&f).unwrap();
    assert!(matches!(solve_lists_le2(&gi.instance), Err(Error::Precondition(_))));

    // Dropping one candidate per clause vertex brings it inside the class.
    let lists: Vec<Vec<usize>> = gi.instance.lists().iter().map(|l| l[..l.len().min(2)].to_vec()).collect();
    let small = ListInstance::automorphism(gi.instance.g().clone(), lists).unwrap();
    let r = solve_lists_le2(&small).unwrap();
    assert_eq!(r.is_yes(), brute_solve(&small).is_yes());
    if let Some(pi) = r.mapping() {
        assert!(verify_list_iso(&small, pi));
        assert!(automorphism_to_assignment(&gi, pi).is_ok());
    }
}
