//! Exact solver: Lagrangian membership test, binary search over a finite
//! multiplier grid, and frontier enumeration.
//!
//! Every probe solves the circulation form of the instance twice under cost
//! `c + λ·b`, once breaking ties toward small fee and once toward large fee.
//! The two fees bracket the fees of all optima at `λ`, which locates `λ`
//! relative to the set of optimal multipliers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flowcore::rational::rat;
use crate::flowcore::{
    add_return_arc, instance_stats, Algorithm, Circulation, Flow, FrontierPoint, Instance,
    Rational, Solution,
};
use crate::mcc::{fee_first_cost, lambda_cost, min_cost_circulation, FeeDirection};

/// Position of a multiplier relative to the optimal multiplier interval.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CallbackVerdict {
    Below,
    Above,
    /// Min-fee and max-fee optimal circulations at this multiplier.
    Inside {
        x_minfee: Flow,
        x_maxfee: Flow,
    },
}

impl CallbackVerdict {
    pub fn is_inside(&self) -> bool {
        matches!(self, CallbackVerdict::Inside { .. })
    }
}

/// Both lexicographic optima at one multiplier.
struct Probe {
    min_fee: Flow,
    max_fee: Flow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Below,
    Inside,
    Above,
}

fn probe(circ: &Circulation, lambda: &Rational) -> Result<Probe> {
    let inst = circ.instance();
    Ok(Probe {
        min_fee: min_cost_circulation(inst, &lambda_cost(inst, lambda, FeeDirection::Min)?)?,
        max_fee: min_cost_circulation(inst, &lambda_cost(inst, lambda, FeeDirection::Max)?)?,
    })
}

fn classify(p: &Probe, lambda: &Rational, budget: &Rational) -> Side {
    if p.min_fee.fee() > budget {
        Side::Below
    } else if budget <= p.max_fee.fee() || lambda.is_zero() {
        Side::Inside
    } else {
        Side::Above
    }
}

/// Decides whether `λ` lies below, inside or above the interval of
/// multipliers whose Lagrangian optima solve the budgeted problem.
pub fn lambda_callback(circ: &Circulation, lambda: &Rational) -> Result<CallbackVerdict> {
    let p = probe(circ, lambda)?;
    Ok(match classify(&p, lambda, &rat(circ.instance().budget())) {
        Side::Below => CallbackVerdict::Below,
        Side::Above => CallbackVerdict::Above,
        Side::Inside => CallbackVerdict::Inside {
            x_minfee: p.min_fee,
            x_maxfee: p.max_fee,
        },
    })
}

/// `α·x1 + (1−α)·x2` with fee exactly `B`, given `b(x1) ≤ B ≤ b(x2)`.
pub fn budget_combination(x1: &Flow, x2: &Flow, budget: &Rational) -> Result<Flow> {
    if x1.len() != x2.len() {
        return Err(Error::Arity {
            expected: x1.len(),
            found: x2.len(),
        });
    }
    if x1.fee() > budget || budget > x2.fee() {
        return Err(Error::Precondition(format!(
            "budget {budget} is not between fees {} and {}",
            x1.fee(),
            x2.fee()
        )));
    }
    if x2.fee() == x1.fee() {
        return Ok(x1.clone());
    }
    let alpha = (x2.fee() - budget) / (x2.fee() - x1.fee());
    Ok(Flow::convex_combination(x1, &alpha, x2))
}

/// Multiplier grid: `λ_0 = 0`, `λ_j = 2c̄²/(top+1−j)` for `1 ≤ j ≤ top`
/// with `top = 2·b̄·c̄²`; index `top+1` stands for `λ = ∞`.
///
/// Frontier slopes `Δc/Δb` have reciprocals `Δb/Δc` that are pairwise at
/// least `1/c̄²` apart, so the reciprocal grid `k/(2c̄²)` puts a point
/// strictly between any two distinct slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub top: BigInt,
    scale: BigInt,
}

impl Grid {
    pub fn new(inst: &Instance) -> Self {
        let stats = instance_stats(inst);
        let scale = BigInt::from(2) * &stats.cbar * &stats.cbar;
        Grid {
            top: &stats.bbar * &scale,
            scale,
        }
    }

    /// `None` for the virtual point at infinity.
    pub fn lambda(&self, j: &BigInt) -> Option<Rational> {
        if j.is_zero() {
            Some(Rational::zero())
        } else if *j > self.top {
            None
        } else {
            Some(Rational::new(self.scale.clone(), &self.top + 1 - j))
        }
    }

    /// Upper bound on the probes made by [`solve_exact`]:
    /// `⌈log₂(top + 1)⌉ + 2`.
    pub fn probe_bound(&self) -> u64 {
        ceil_log2(&(&self.top + 1)) + 2
    }
}

fn ceil_log2(x: &BigInt) -> u64 {
    if *x <= BigInt::one() {
        0
    } else {
        (x - 1u32).bits()
    }
}

/// Exact optimum by binary search on [`Grid`]. The solution carries the
/// multiplier certificate, the corners of the efficient edge it lies on
/// when the budget binds, and the number of probes as `iterations`.
pub fn solve_exact(inst: &Instance) -> Result<Solution> {
    let circ = add_return_arc(inst);
    let budget = rat(inst.budget());
    let grid = Grid::new(inst);
    let mut probes = 1u64;

    let zero = Rational::zero();
    let at_zero = probe(&circ, &zero)?;
    match classify(&at_zero, &zero, &budget) {
        Side::Inside => {
            let flow = if budget <= *at_zero.max_fee.fee() {
                budget_combination(&at_zero.min_fee, &at_zero.max_fee, &budget)?
            } else {
                at_zero.max_fee
            };
            let mut sol = Solution::new(circ.project(&flow), Algorithm::Exact, probes);
            sol.lambda = Some(zero);
            return Ok(sol);
        }
        Side::Above => return Err(Error::Internal("multiplier 0 classified above".into())),
        Side::Below => {}
    }
    if grid.top.is_zero() {
        return Err(Error::Internal(
            "budget binds on an instance without fees or costs".into(),
        ));
    }

    let mut lo = BigInt::zero();
    let mut hi = &grid.top + 1;
    let mut below = at_zero.max_fee;
    let mut above: Option<Flow> = None;
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        let lambda = grid.lambda(&mid).expect("mid is a finite grid index");
        let p = probe(&circ, &lambda)?;
        probes += 1;
        match classify(&p, &lambda, &budget) {
            Side::Below => {
                lo = mid;
                below = p.max_fee;
            }
            Side::Above => {
                hi = mid;
                above = Some(p.min_fee);
            }
            Side::Inside => {
                let flow = budget_combination(&p.min_fee, &p.max_fee, &budget)?;
                let mut sol = Solution::new(circ.project(&flow), Algorithm::Exact, probes);
                sol.frontier_edge = Some((corner(&p.min_fee), corner(&p.max_fee)));
                sol.lambda = Some(lambda);
                return Ok(sol);
            }
        }
    }

    let above = match above {
        Some(x) => x,
        None => {
            probes += 1;
            min_cost_circulation(circ.instance(), &fee_first_cost(circ.instance()))?
        }
    };
    let flow = budget_combination(&above, &below, &budget)?;
    let mut sol = Solution::new(circ.project(&flow), Algorithm::Exact, probes);
    sol.lambda = Some((above.cost() - below.cost()) / (below.fee() - above.fee()));
    sol.frontier_edge = Some((corner(&above), corner(&below)));
    Ok(sol)
}

fn corner(x: &Flow) -> (Rational, Rational) {
    (x.cost().clone(), x.fee().clone())
}

/// All extreme points of the lower-left `(cost, fee)` frontier, sorted by
/// increasing fee, by recursive subdivision between known corners.
///
/// The number of extreme points is not polynomially bounded; meant for
/// small instances and plotting.
pub fn enumerate_frontier(inst: &Instance) -> Result<Vec<FrontierPoint>> {
    let circ = add_return_arc(inst);
    let c = circ.instance();
    let low = min_cost_circulation(c, &fee_first_cost(c))?;
    let high = min_cost_circulation(c, &lambda_cost(c, &Rational::zero(), FeeDirection::Min)?)?;

    let mut points = vec![low.clone()];
    if corner(&low) != corner(&high) {
        subdivide(&circ, &low, &high, &mut points)?;
        points.push(high);
    }
    Ok(FrontierPoint::chain(
        points.iter().map(|x| circ.project(x)).collect(),
    ))
}

/// Appends the extreme points strictly between `p1` (low fee) and `p2`.
fn subdivide(circ: &Circulation, p1: &Flow, p2: &Flow, out: &mut Vec<Flow>) -> Result<()> {
    let lambda = (p1.cost() - p2.cost()) / (p2.fee() - p1.fee());
    let c = circ.instance();
    let x = min_cost_circulation(c, &lambda_cost(c, &lambda, FeeDirection::Min)?)?;
    if x.cost() + &lambda * x.fee() < p1.cost() + &lambda * p1.fee() {
        subdivide(circ, p1, &x, out)?;
        out.push(x.clone());
        subdivide(circ, &x, p2, out)?;
    }
    Ok(())
}
