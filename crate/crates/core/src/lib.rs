//! Budget-constrained minimum cost flows.
//!
//! Given a directed multigraph with capacities `u_e`, costs `c_e` and usage
//! fees `b_e`, find an s-t flow of minimum cost whose total fee stays within
//! a budget `B`. The crate provides
//!
//! * [`exact::solve_exact`]: exact rational optimum via a binary search over
//!   Lagrange multipliers, each probe a lexicographic min-cost circulation,
//! * [`fptas::solve_gk`] and [`fptas::solve_gk_acyclic`]: packing-LP
//!   approximation schemes with minimum ratio cycle / path oracles,
//! * [`oracle`]: brute-force ground truth for small instances.

pub mod cli;
pub mod error;
pub mod exact;
pub mod flowcore;
pub mod fptas;
pub mod generate;
pub mod mcc;
pub mod oracle;

pub use error::{Error, Result};
pub use flowcore::{
    add_return_arc, instance_stats, parse_instance, preprocess, validate_flow, Algorithm, EdgeData,
    Flow, Instance, LexCost, Rational, Solution, SolutionDocument,
};
