//! Seeded random instances.
//!
//! The stream is `ChaCha8Rng::seed_from_u64(seed)`; draws happen in a fixed
//! order (per edge: endpoints, capacity, cost, fee; then the budget), so a
//! seed determines the instance on every platform.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::flowcore::{instance_stats, EdgeData, Instance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BudgetMode {
    /// Uniform in `[0, b̄]`.
    #[default]
    Tight,
    /// `b̄ + 1`.
    Slack,
    Zero,
}

impl BudgetMode {
    pub const ALL: [BudgetMode; 3] = [BudgetMode::Tight, BudgetMode::Slack, BudgetMode::Zero];

    pub fn as_str(self) -> &'static str {
        match self {
            BudgetMode::Tight => "tight",
            BudgetMode::Slack => "slack",
            BudgetMode::Zero => "zero",
        }
    }
}

impl fmt::Display for BudgetMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BudgetMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tight" => Ok(BudgetMode::Tight),
            "slack" => Ok(BudgetMode::Slack),
            "zero" => Ok(BudgetMode::Zero),
            other => Err(Error::InvalidArgument(format!(
                "unknown budget mode {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub nodes: usize,
    pub edges: usize,
    pub max_capacity: i64,
    pub max_cost: i64,
    pub max_fee: i64,
    pub budget_mode: BudgetMode,
    /// Only edges from lower to higher node index.
    pub acyclic: bool,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            nodes: 5,
            edges: 8,
            max_capacity: 3,
            max_cost: 5,
            max_fee: 5,
            budget_mode: BudgetMode::Tight,
            acyclic: false,
            seed: 0,
        }
    }
}

/// Source is node 0, sink is node `n−1`. Endpoints are distinct.
pub fn generate(params: &GenParams) -> Result<Instance> {
    if params.nodes < 2 {
        return Err(Error::InvalidArgument("need at least 2 nodes".into()));
    }
    if params.edges < 1 {
        return Err(Error::InvalidArgument("need at least 1 edge".into()));
    }
    if params.max_capacity < 0 || params.max_cost < 0 || params.max_fee < 0 {
        return Err(Error::InvalidArgument("bounds must be nonnegative".into()));
    }
    let n = params.nodes;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut edges = Vec::with_capacity(params.edges);
    for _ in 0..params.edges {
        let (tail, head) = loop {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a == b {
                continue;
            }
            break if params.acyclic {
                (a.min(b), a.max(b))
            } else {
                (a, b)
            };
        };
        let capacity = rng.random_range(0..=params.max_capacity);
        let cost = rng.random_range(-params.max_cost..=params.max_cost);
        let fee = rng.random_range(0..=params.max_fee);
        edges.push(EdgeData::new(tail, head, capacity, cost, fee));
    }
    let inst = Instance::new(n, 0, n - 1, 0, edges)?;
    let bbar: i64 = instance_stats(&inst)
        .bbar
        .try_into()
        .map_err(|_| Error::InvalidArgument("total fee overflows".into()))?;
    let budget = match params.budget_mode {
        BudgetMode::Tight => rng.random_range(0..=bbar),
        BudgetMode::Slack => bbar + 1,
        BudgetMode::Zero => 0,
    };
    inst.with_budget(budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_bytes() {
        let p = GenParams {
            seed: 7,
            ..GenParams::default()
        };
        assert_eq!(
            generate(&p).unwrap().to_text(),
            generate(&p).unwrap().to_text()
        );
        let q = GenParams {
            seed: 8,
            ..p.clone()
        };
        assert_ne!(
            generate(&p).unwrap().to_text(),
            generate(&q).unwrap().to_text()
        );
    }

    #[test]
    fn acyclic_edges_go_forward() {
        for seed in 0..20 {
            let p = GenParams {
                seed,
                acyclic: true,
                nodes: 6,
                edges: 12,
                ..GenParams::default()
            };
            let inst = generate(&p).unwrap();
            assert!(inst.edges().iter().all(|e| e.tail < e.head));
            assert!(inst.digraph().is_acyclic());
        }
    }

    #[test]
    fn ranges_and_budget_modes() {
        for seed in 0..20 {
            for mode in BudgetMode::ALL {
                let p = GenParams {
                    seed,
                    budget_mode: mode,
                    ..GenParams::default()
                };
                let inst = generate(&p).unwrap();
                let bbar: i64 = instance_stats(&inst).bbar.try_into().unwrap();
                for e in inst.edges() {
                    assert!((0..=3).contains(&e.capacity));
                    assert!((-5..=5).contains(&e.cost));
                    assert!((0..=5).contains(&e.fee));
                }
                match mode {
                    BudgetMode::Tight => assert!(inst.budget() <= bbar),
                    BudgetMode::Slack => assert_eq!(inst.budget(), bbar + 1),
                    BudgetMode::Zero => assert_eq!(inst.budget(), 0),
                }
            }
        }
    }

    #[test]
    fn fee_free_tight_budget_is_zero() {
        let p = GenParams {
            max_fee: 0,
            ..GenParams::default()
        };
        assert_eq!(generate(&p).unwrap().budget(), 0);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(generate(&GenParams {
            nodes: 1,
            ..GenParams::default()
        })
        .is_err());
        assert!(generate(&GenParams {
            edges: 0,
            ..GenParams::default()
        })
        .is_err());
        assert_eq!("slack".parse::<BudgetMode>().unwrap(), BudgetMode::Slack);
        assert!("loose".parse::<BudgetMode>().is_err());
    }
}
