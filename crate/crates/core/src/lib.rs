//! List-restricted graph isomorphism.
//!
//! An instance is a pair of graphs `G`, `H` with a candidate list
//! `L(u) ⊆ V(H)` for every vertex `u` of `G`; a solution is an isomorphism
//! `π` with `π(u) ∈ L(u)` everywhere. Engines cover lists of size at most
//! two, graphs of maximum degree two, forests, interval graphs and graphs of
//! bounded treewidth; [`oracle`] is an exponential reference solver.
//!
//! ```
//! use listiso::{dispatch::solve_auto, Graph, ListInstance};
//!
//! let c4 = Graph::cycle(4);
//! let mut lists = vec![vec![0, 1, 2, 3]; 4];
//! lists[0] = vec![2];
//! let inst = ListInstance::new(c4.clone(), c4, lists).unwrap();
//! let pi = solve_auto(&inst).unwrap();
//! assert_eq!(pi.mapping().unwrap()[0], 2);
//! ```

pub mod basic;
pub mod cli;
pub mod dispatch;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hardness;
pub mod instance;
pub mod interval;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod prune;
pub mod tree;
pub mod treewidth;
pub mod twosat;

pub use dispatch::{classify_instance, solve_auto, solve_with, Engine};
pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::{verify_list_iso, ListInstance, Mapping, SolveResult};
