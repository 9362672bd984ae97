use num_bigint::BigInt;
use num_traits::Zero;

use super::instance::Instance;

/// Magnitude bounds derived from an instance.
///
/// `cbar = Σ|u_e·c_e|` bounds the absolute cost of any flow and
/// `bbar = Σ u_e·b_e` bounds its total fee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub cbar: BigInt,
    pub bbar: BigInt,
    /// Largest absolute capacity, cost, fee or budget.
    pub max_abs: i64,
    /// Largest absolute cost.
    pub max_cost: i64,
    /// Largest capacity.
    pub max_capacity: i64,
}

pub fn instance_stats(inst: &Instance) -> Stats {
    let mut cbar = BigInt::zero();
    let mut bbar = BigInt::zero();
    let mut max_cost = 0i64;
    let mut max_capacity = 0i64;
    let mut max_abs = inst.budget();
    for e in inst.edges() {
        let u = BigInt::from(e.capacity);
        cbar += &u * BigInt::from(e.cost.unsigned_abs());
        bbar += &u * BigInt::from(e.fee);
        max_cost = max_cost.max(e.cost.saturating_abs());
        max_capacity = max_capacity.max(e.capacity);
        max_abs = max_abs
            .max(e.capacity)
            .max(e.cost.saturating_abs())
            .max(e.fee);
    }
    Stats {
        cbar,
        bbar,
        max_abs,
        max_cost,
        max_capacity,
    }
}
