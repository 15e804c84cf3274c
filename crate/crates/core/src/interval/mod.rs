//! Interval graphs: recognition, MPQ-trees, and the list DP over them.

pub mod mpq;
pub mod recognize;
pub mod solve;

pub use mpq::{build_mpq, Home, MpqNode, MpqTree, NodeKind};
pub use recognize::{
    consecutive_arrangement, is_interval_graph, lex_bfs, maximal_cliques, recognize_interval, CliqueOrdering,
};
pub use solve::{solve_interval, solve_with_trees};
