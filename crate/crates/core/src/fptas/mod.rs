//! Approximation schemes for the budgeted problem: a packing-LP loop with
//! minimum ratio cycle (or, on DAGs, path) oracles, and the rescaling that
//! turns a budget-overrunning answer into a feasible one.

mod gk;
mod ratio;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::flowcore::{Flow, Rational};

pub use gk::{
    solve_gk, solve_gk_acyclic, solve_gk_acyclic_with, solve_gk_with, DualState, GkOptions, GkRun,
    PathQuery,
};
pub use ratio::{min_ratio_cycle, min_ratio_path_dag, RatioResult, Scalar};

/// `x / (1 + ε)`. If `b(x) ≤ (1+ε)·B` the result respects the budget, and
/// capacities and conservation survive any shrinking.
pub fn rescale_bicriteria(x: &Flow, epsilon: &Rational) -> Result<Flow> {
    if !epsilon.is_positive() || *epsilon >= Rational::one() {
        return Err(Error::InvalidArgument(format!(
            "epsilon {epsilon} is not in (0, 1)"
        )));
    }
    Ok(x.scaled(&(Rational::one() / (Rational::one() + epsilon))))
}
