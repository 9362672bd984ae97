//! Instance model, exact arithmetic, flow validation and the transforms
//! every solver starts from.

mod circulation;
mod flow;
mod frontier;
mod graph;
mod instance;
mod lexcost;
mod preprocess;
pub mod rational;
mod solution;
mod stats;

pub use circulation::{add_return_arc, Circulation};
pub use flow::{validate_flow, CapacityViolation, Flow, ValidationReport};
pub use frontier::{edge_slopes, frontier_plot_data, FrontierPoint};
pub use graph::Digraph;
pub use instance::{parse_instance, EdgeData, Instance};
pub use lexcost::LexCost;
pub use preprocess::{preprocess, Reduced};
pub use rational::Rational;
pub use solution::{Algorithm, ObjectivePoint, Solution, SolutionDocument};
pub use stats::{instance_stats, Stats};
