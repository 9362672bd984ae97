//! Exact minimum cost circulation by negative cycle canceling, with
//! two-level lexicographic costs for tie-breaking among optima.

mod negative_cycle;
mod residual;

use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::flowcore::rational::{common_denominator, rat};
use crate::flowcore::{Flow, Instance, LexCost, Rational};

pub use negative_cycle::{cycle_length, min_mean_cycle, negative_cycle, MeanLength, PathLength};
pub use residual::{find_negative_cycle, Cycle, ResidualArc, ResidualGraph};

/// Which optimum the secondary cost level selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeeDirection {
    Min,
    Max,
}

/// Which negative cycle gets canceled next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CancelRule {
    /// First cycle reported by label correcting.
    #[default]
    MostRecent,
    /// Karp's minimum mean cycle.
    MinMean,
}

#[derive(Debug, Clone, Default)]
pub struct MccOptions {
    pub rule: CancelRule,
    /// Overrides the default cap on cancellations.
    pub max_cancellations: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct CirculationResult {
    pub flow: Flow,
    pub cancellations: u64,
}

/// Edge costs `c_e + λ·b_e`, with `±b_e` as the tie-breaking level.
pub fn lambda_cost(
    inst: &Instance,
    lambda: &Rational,
    direction: FeeDirection,
) -> Result<Vec<LexCost>> {
    if lambda.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "negative multiplier {lambda}"
        )));
    }
    Ok(inst
        .edges()
        .iter()
        .map(|e| {
            let fee = rat(e.fee);
            let secondary = match direction {
                FeeDirection::Min => fee.clone(),
                FeeDirection::Max => -fee.clone(),
            };
            LexCost::new(rat(e.cost) + lambda * fee, secondary)
        })
        .collect())
}

/// Costs for the fee-minimal end of the frontier: fee first, then cost.
pub fn fee_first_cost(inst: &Instance) -> Vec<LexCost> {
    inst.edges()
        .iter()
        .map(|e| LexCost::new(rat(e.fee), rat(e.cost)))
        .collect()
}

pub fn min_cost_circulation(inst: &Instance, cost: &[LexCost]) -> Result<Flow> {
    min_cost_circulation_with(inst, cost, &MccOptions::default()).map(|r| r.flow)
}

/// Cancels negative residual cycles, each saturated fully, starting from
/// the zero circulation. The returned circulation is integral and admits
/// no negative residual cycle under `cost`.
pub fn min_cost_circulation_with(
    inst: &Instance,
    cost: &[LexCost],
    options: &MccOptions,
) -> Result<CirculationResult> {
    if cost.len() != inst.edge_count() {
        return Err(Error::Arity {
            expected: inst.edge_count(),
            found: cost.len(),
        });
    }
    let scaled = integral_costs(cost);
    let cap = match options.max_cancellations {
        Some(c) => BigInt::from(c),
        None => cancellation_bound(inst, &scaled),
    };

    let mut x = vec![0i64; inst.edge_count()];
    let mut cancellations = 0u64;
    loop {
        let rg = ResidualGraph::new(inst, &x);
        let endpoints = rg.endpoints();
        let cycle = match options.rule {
            CancelRule::MostRecent => {
                negative_cycle(rg.node_count(), &endpoints, &rg.lengths(&scaled))
            }
            CancelRule::MinMean => {
                let lengths: Vec<LexCost> = rg
                    .lengths(&scaled)
                    .into_iter()
                    .map(|IntLex(p, s)| {
                        LexCost::new(Rational::from_integer(p), Rational::from_integer(s))
                    })
                    .collect();
                min_mean_cycle(rg.node_count(), &endpoints, &lengths)
                    .filter(|(_, mean)| *mean < LexCost::zero())
                    .map(|(c, _)| c)
            }
        };
        let Some(cycle) = cycle else { break };
        let arcs: Vec<ResidualArc> = cycle.iter().map(|&a| rg.arcs()[a]).collect();
        let delta = arcs
            .iter()
            .map(|a| rg.capacity(a))
            .min()
            .expect("cycles are nonempty");
        for a in &arcs {
            if a.forward {
                x[a.edge] += delta;
            } else {
                x[a.edge] -= delta;
            }
        }
        cancellations += 1;
        if BigInt::from(cancellations) > cap {
            return Err(Error::Internal(format!(
                "cycle canceling exceeded {cap} cancellations"
            )));
        }
    }
    Ok(CirculationResult {
        flow: Flow::from_integers(inst, &x)?,
        cancellations,
    })
}

/// True when no residual cycle of `flow` is lexicographically negative.
pub fn is_optimal_circulation(inst: &Instance, cost: &[LexCost], flow: &[i64]) -> bool {
    let rg = ResidualGraph::new(inst, flow);
    find_negative_cycle(&rg, &rg.lengths(cost)).is_none()
}

/// Lexicographic pair of integers; cheaper than rationals inside the
/// label-correcting loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct IntLex(BigInt, BigInt);

impl Add for IntLex {
    type Output = IntLex;

    fn add(self, rhs: Self) -> Self {
        IntLex(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl std::ops::Neg for IntLex {
    type Output = IntLex;

    fn neg(self) -> Self {
        IntLex(-self.0, -self.1)
    }
}

impl Zero for IntLex {
    fn zero() -> Self {
        IntLex(BigInt::zero(), BigInt::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }
}

/// Clears denominators level by level; lexicographic order is invariant
/// under a positive scaling of each level.
fn integral_costs(cost: &[LexCost]) -> Vec<IntLex> {
    let dp = Rational::from_integer(common_denominator(cost.iter().map(|c| &c.primary)));
    let ds = Rational::from_integer(common_denominator(cost.iter().map(|c| &c.secondary)));
    cost.iter()
        .map(|c| {
            IntLex(
                (&c.primary * &dp).to_integer(),
                (&c.secondary * &ds).to_integer(),
            )
        })
        .collect()
}

/// Every cancellation lowers the primary objective by at least one, or
/// keeps it and lowers the secondary by at least one.
fn cancellation_bound(inst: &Instance, cost: &[IntLex]) -> BigInt {
    let mut primary = BigInt::zero();
    let mut secondary = BigInt::zero();
    for (e, IntLex(p, s)) in inst.edges().iter().zip(cost) {
        let u = BigInt::from(e.capacity);
        primary += &u * p.abs();
        secondary += &u * s.abs();
    }
    (primary * 2 + 1) * (secondary * 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flowcore::rational::ratio;
    use crate::flowcore::{add_return_arc, Circulation, EdgeData};

    fn i1() -> Circulation {
        add_return_arc(
            &Instance::new(
                2,
                0,
                1,
                2,
                vec![EdgeData::new(0, 1, 2, -4, 2), EdgeData::new(0, 1, 2, -1, 0)],
            )
            .unwrap(),
        )
    }

    fn with_primary_shift(inst: &Instance, lambda: i64, secondary_sign: i64) -> Vec<LexCost> {
        inst.edges()
            .iter()
            .map(|e| LexCost::new(rat(e.cost + lambda * e.fee), rat(secondary_sign * e.fee)))
            .collect()
    }

    #[test]
    fn unconstrained_cost_saturates_both_edges() {
        let c = i1();
        let flow =
            min_cost_circulation(c.instance(), &with_primary_shift(c.instance(), 0, 1)).unwrap();
        assert_eq!(flow.values(), &[rat(2), rat(2), rat(4)]);
        assert_eq!(flow.cost(), &rat(-10));
        assert_eq!(flow.fee(), &rat(4));
    }

    #[test]
    fn min_fee_tie_break_drops_expensive_edge() {
        let c = i1();
        let flow =
            min_cost_circulation(c.instance(), &with_primary_shift(c.instance(), 2, 1)).unwrap();
        assert_eq!(flow.values()[..2], [rat(0), rat(2)]);
        assert_eq!(flow.cost(), &rat(-2));
        assert_eq!(flow.fee(), &rat(0));
    }

    #[test]
    fn max_fee_tie_break_keeps_it() {
        let c = i1();
        let flow =
            min_cost_circulation(c.instance(), &with_primary_shift(c.instance(), 2, -1)).unwrap();
        assert_eq!(flow.values()[..2], [rat(2), rat(2)]);
        assert_eq!(flow.fee(), &rat(4));
    }

    #[test]
    fn lambda_cost_formula() {
        let base = i1();
        let inst = base.instance();
        let costs = lambda_cost(inst, &rat(2), FeeDirection::Min).unwrap();
        assert_eq!(costs[0], LexCost::new(rat(0), rat(2)));
        assert_eq!(costs[1], LexCost::new(rat(-1), rat(0)));
        assert_eq!(costs[2], LexCost::new(rat(0), rat(0)));

        let zero = lambda_cost(inst, &rat(0), FeeDirection::Min).unwrap();
        assert!(zero
            .iter()
            .zip(inst.edges())
            .all(|(c, e)| c.primary == rat(e.cost)));

        let small = lambda_cost(inst, &ratio(1, 200), FeeDirection::Max).unwrap();
        assert_eq!(small[0], LexCost::new(ratio(-399, 100), rat(-2)));

        assert!(lambda_cost(inst, &rat(-1), FeeDirection::Min).is_err());
    }

    #[test]
    fn nonnegative_costs_give_zero_circulation() {
        let inst = add_return_arc(
            &Instance::new(
                3,
                0,
                2,
                5,
                vec![
                    EdgeData::new(0, 1, 3, 1, 1),
                    EdgeData::new(1, 2, 3, 0, 2),
                    EdgeData::new(1, 1, 3, 0, 0),
                ],
            )
            .unwrap(),
        );
        let flow = min_cost_circulation(
            inst.instance(),
            &lambda_cost(inst.instance(), &rat(0), FeeDirection::Min).unwrap(),
        )
        .unwrap();
        assert_eq!(flow, Flow::zero(inst.instance()));
    }

    #[test]
    fn min_mean_rule_agrees() {
        let c = i1();
        for lambda in [0, 1, 2, 3] {
            for sign in [1, -1] {
                let cost = with_primary_shift(c.instance(), lambda, sign);
                let plain = min_cost_circulation(c.instance(), &cost).unwrap();
                let karp = min_cost_circulation_with(
                    c.instance(),
                    &cost,
                    &MccOptions {
                        rule: CancelRule::MinMean,
                        max_cancellations: None,
                    },
                )
                .unwrap()
                .flow;
                assert_eq!(plain.cost(), karp.cost());
                assert_eq!(plain.fee(), karp.fee());
            }
        }
    }

    #[test]
    fn cancellation_cap_is_enforced() {
        let c = i1();
        let cost = with_primary_shift(c.instance(), 0, 1);
        let err = min_cost_circulation_with(
            c.instance(),
            &cost,
            &MccOptions {
                rule: CancelRule::MostRecent,
                max_cancellations: Some(0),
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::Internal(_)));
    }

    #[test]
    fn result_is_certified_optimal() {
        let c = i1();
        let cost = with_primary_shift(c.instance(), 1, -1);
        let flow = min_cost_circulation(c.instance(), &cost).unwrap();
        let ints: Vec<i64> = flow
            .values()
            .iter()
            .map(|v| v.to_integer().try_into().unwrap())
            .collect();
        assert!(is_optimal_circulation(c.instance(), &cost, &ints));
    }
}
