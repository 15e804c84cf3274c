//! Engine selection.

use std::fmt;
use std::str::FromStr;

use crate::basic::{solve_lists_le2, solve_max_deg2};
use crate::error::{Error, Result};
use crate::instance::{ListInstance, SolveResult};
use crate::interval::{is_interval_graph, solve_interval};
use crate::oracle::oracle_engine;
use crate::tree::solve_forest;
use crate::treewidth::solve_treewidth_xp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Oracle,
    Lists2,
    Deg2,
    Tree,
    Interval,
    Treewidth,
}

impl Engine {
    pub const ALL: [Engine; 6] =
        [Engine::Oracle, Engine::Lists2, Engine::Deg2, Engine::Tree, Engine::Interval, Engine::Treewidth];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Lists2 => "lists2",
            Engine::Deg2 => "deg2",
            Engine::Tree => "tree",
            Engine::Interval => "interval",
            Engine::Treewidth => "treewidth",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown engine '{s}'")))
    }
}

/// The cheapest engine whose class contains the instance. The treewidth
/// engine is never chosen here since it needs a width bound.
pub fn classify_instance(inst: &ListInstance) -> Engine {
    let (g, h) = (inst.g(), inst.h());
    if inst.max_list_size() <= 2 {
        Engine::Lists2
    } else if g.max_degree() <= 2 && h.max_degree() <= 2 {
        Engine::Deg2
    } else if g.is_forest() && h.is_forest() {
        Engine::Tree
    } else if is_interval_graph(g) && is_interval_graph(h) {
        Engine::Interval
    } else {
        Engine::Oracle
    }
}

/// Runs one engine; `k` is required by, and only used by, the treewidth engine.
pub fn solve_with(inst: &ListInstance, engine: Engine, k: Option<usize>) -> Result<SolveResult> {
    match engine {
        Engine::Oracle => oracle_engine(inst),
        Engine::Lists2 => solve_lists_le2(inst),
        Engine::Deg2 => solve_max_deg2(inst),
        Engine::Tree => solve_forest(inst),
        Engine::Interval => solve_interval(inst),
        Engine::Treewidth => {
            let k = k.ok_or_else(|| Error::Precondition("treewidth engine needs a width bound k".into()))?;
            solve_treewidth_xp(inst, k)
        }
    }
}

/// [`solve_with`] on the engine picked by [`classify_instance`].
pub fn solve_auto(inst: &ListInstance) -> Result<SolveResult> {
    solve_with(inst, classify_instance(inst), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn classification_examples() {
        let tree = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(classify_instance(&ListInstance::with_full_lists(tree.clone(), tree)), Engine::Tree);

        let k4 = Graph::complete(4);
        let lists = vec![vec![0, 1]; 4];
        assert_eq!(classify_instance(&ListInstance::new(k4.clone(), k4, lists).unwrap()), Engine::Lists2);

        let c4 = Graph::cycle(4);
        let lists = vec![vec![0, 1, 2]; 4];
        assert_eq!(classify_instance(&ListInstance::new(c4.clone(), c4, lists).unwrap()), Engine::Deg2);

        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]).unwrap();
        assert_eq!(classify_instance(&ListInstance::with_full_lists(c5.clone(), c5)), Engine::Interval);
        let w = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert_eq!(classify_instance(&ListInstance::with_full_lists(w.clone(), w)), Engine::Oracle);
    }

    #[test]
    fn names_round_trip() {
        for e in Engine::ALL {
            assert_eq!(e.name().parse::<Engine>().unwrap(), e);
        }
        assert!("bogus".parse::<Engine>().is_err());
    }

    #[test]
    fn treewidth_needs_k() {
        let inst = ListInstance::with_full_lists(Graph::path(3), Graph::path(3));
        assert!(matches!(solve_with(&inst, Engine::Treewidth, None), Err(Error::Precondition(_))));
        assert!(solve_with(&inst, Engine::Treewidth, Some(1)).unwrap().is_yes());
    }
}
