//! Brute-force ground truth for desk-scale instances.
//!
//! Enumerates every integral feasible flow, reduces them to the cloud of
//! `(cost, fee)` points and answers optimum and frontier queries from that
//! cloud alone. Vertices of the flow polytope without the budget row are
//! integral, so the budget-constrained optimum is a convex combination of
//! at most two cloud points.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::flowcore::rational::{rat, ratio};
use crate::flowcore::{Algorithm, Flow, FrontierPoint, Instance, Rational, Solution};

pub const DEFAULT_GUARD: u128 = 10_000_000;

/// `Π (u_e + 1)`, saturating.
pub fn enumeration_size(inst: &Instance) -> u128 {
    inst.edges()
        .iter()
        .fold(1u128, |acc, e| acc.saturating_mul(e.capacity as u128 + 1))
}

pub fn check_guard(inst: &Instance, guard: u128) -> Result<()> {
    let size = enumeration_size(inst);
    if size > guard {
        Err(Error::GuardExceeded { size, guard })
    } else {
        Ok(())
    }
}

/// Depth-first assignment of integral edge values with per-node balance
/// pruning; calls `visit` on every feasible s-t flow (budget ignored).
fn for_each_integral_flow(inst: &Instance, mut visit: impl FnMut(&[i64])) {
    let n = inst.node_count();
    let edges = inst.edges();

    // Unassigned incident capacity, per node and direction.
    let mut rem_in = vec![0i64; n];
    let mut rem_out = vec![0i64; n];
    for e in edges {
        rem_in[e.head] += e.capacity;
        rem_out[e.tail] += e.capacity;
    }

    struct Search<'a, F> {
        inst: &'a Instance,
        x: Vec<i64>,
        balance: Vec<i64>,
        rem_in: Vec<i64>,
        rem_out: Vec<i64>,
        visit: F,
    }

    impl<F: FnMut(&[i64])> Search<'_, F> {
        fn fixable(&self, v: usize) -> bool {
            let v_is_interior = v != self.inst.source() && v != self.inst.sink();
            if !v_is_interior {
                return true;
            }
            let b = self.balance[v];
            b - self.rem_out[v] <= 0 && 0 <= b + self.rem_in[v]
        }

        fn go(&mut self, i: usize) {
            let edges = self.inst.edges();
            if i == edges.len() {
                if self.balance[self.inst.source()] <= 0 {
                    (self.visit)(&self.x);
                }
                return;
            }
            let e = &edges[i];
            self.rem_in[e.head] -= e.capacity;
            self.rem_out[e.tail] -= e.capacity;
            for value in 0..=e.capacity {
                self.x[i] = value;
                self.balance[e.head] += value;
                self.balance[e.tail] -= value;
                if self.fixable(e.head) && self.fixable(e.tail) {
                    self.go(i + 1);
                }
                self.balance[e.head] -= value;
                self.balance[e.tail] += value;
            }
            self.x[i] = 0;
            self.rem_in[e.head] += e.capacity;
            self.rem_out[e.tail] += e.capacity;
        }
    }

    let mut search = Search {
        inst,
        x: vec![0; edges.len()],
        balance: vec![0; n],
        rem_in,
        rem_out,
        visit: &mut visit,
    };
    search.go(0);
}

pub fn enumerate_integral_flows(inst: &Instance) -> Result<Vec<Flow>> {
    enumerate_integral_flows_with_guard(inst, DEFAULT_GUARD)
}

pub fn enumerate_integral_flows_with_guard(inst: &Instance, guard: u128) -> Result<Vec<Flow>> {
    check_guard(inst, guard)?;
    let mut flows = Vec::new();
    for_each_integral_flow(inst, |x| {
        flows.push(Flow::from_integers(inst, x).expect("one value per edge"))
    });
    Ok(flows)
}

/// De-duplicated `(cost, fee)` pairs of all integral flows, each with one
/// witness.
#[derive(Debug, Clone)]
pub struct PointCloud {
    pub points: Vec<(i64, i64)>,
    witnesses: Vec<Vec<i64>>,
    pub flow_count: u64,
}

impl PointCloud {
    pub fn witness(&self, inst: &Instance, index: usize) -> Flow {
        Flow::from_integers(inst, &self.witnesses[index]).expect("witness matches instance")
    }

    /// Cheapest point per fee level, keyed by fee.
    fn cheapest_by_fee(&self) -> BTreeMap<i64, (i64, usize)> {
        let mut best: BTreeMap<i64, (i64, usize)> = BTreeMap::new();
        for (i, &(c, b)) in self.points.iter().enumerate() {
            best.entry(b)
                .and_modify(|slot| {
                    if c < slot.0 {
                        *slot = (c, i);
                    }
                })
                .or_insert((c, i));
        }
        best
    }
}

pub fn point_cloud(inst: &Instance, guard: u128) -> Result<PointCloud> {
    check_guard(inst, guard)?;
    let mut seen: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut points = Vec::new();
    let mut witnesses = Vec::new();
    let mut flow_count = 0u64;
    for_each_integral_flow(inst, |x| {
        flow_count += 1;
        let mut c = 0i64;
        let mut b = 0i64;
        for (e, &v) in inst.edges().iter().zip(x) {
            c += e.cost * v;
            b += e.fee * v;
        }
        seen.entry((c, b)).or_insert_with(|| {
            points.push((c, b));
            witnesses.push(x.to_vec());
            points.len() - 1
        });
    });
    Ok(PointCloud {
        points,
        witnesses,
        flow_count,
    })
}

pub fn oracle_optimum(inst: &Instance) -> Result<Solution> {
    let cloud = point_cloud(inst, DEFAULT_GUARD)?;
    Ok(optimum_from_cloud(inst, &cloud))
}

/// Best single point within budget, or best pair straddling the budget
/// line interpolated to fee exactly `B`.
pub fn optimum_from_cloud(inst: &Instance, cloud: &PointCloud) -> Solution {
    let budget = inst.budget();
    let levels = cloud.cheapest_by_fee();
    let mut best: Option<(Rational, Flow)> = None;
    let mut offer = |value: Rational, make: &dyn Fn() -> Flow| {
        if best.as_ref().is_none_or(|(v, _)| value < *v) {
            best = Some((value, make()));
        }
    };
    for (_, &(c, i)) in levels.range(..=budget) {
        offer(rat(c), &|| cloud.witness(inst, i));
    }
    for (&bp, &(cp, ip)) in levels.range(..=budget) {
        for (&bq, &(cq, iq)) in levels.range(budget + 1..) {
            let value = rat(cp) + ratio((budget - bp) * (cq - cp), bq - bp);
            offer(value, &|| {
                let alpha = ratio(bq - budget, bq - bp);
                Flow::convex_combination(&cloud.witness(inst, ip), &alpha, &cloud.witness(inst, iq))
            });
        }
    }
    let (_, flow) = best.expect("the zero flow is always in the cloud");
    Solution::new(flow, Algorithm::Oracle, cloud.flow_count)
}

pub fn oracle_frontier(inst: &Instance) -> Result<Vec<FrontierPoint>> {
    let cloud = point_cloud(inst, DEFAULT_GUARD)?;
    Ok(frontier_from_cloud(inst, &cloud))
}

/// Extreme points of the lower-left hull, sorted by fee.
pub fn frontier_from_cloud(inst: &Instance, cloud: &PointCloud) -> Vec<FrontierPoint> {
    // Non-dominated levels: cost strictly below every cheaper-fee level.
    let mut efficient: Vec<(i64, i64, usize)> = Vec::new();
    for (&b, &(c, i)) in &cloud.cheapest_by_fee() {
        if efficient.last().is_none_or(|&(_, lc, _)| c < lc) {
            efficient.push((b, c, i));
        }
    }
    // Lower convex hull of cost as a function of fee, collinear points dropped.
    let mut hull: Vec<(i64, i64, usize)> = Vec::new();
    for p in efficient {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let cross = (a.0 - o.0) as i128 * (p.1 - o.1) as i128
                - (a.1 - o.1) as i128 * (p.0 - o.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    FrontierPoint::chain(
        hull.into_iter()
            .map(|(_, _, i)| cloud.witness(inst, i))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flowcore::EdgeData;

    fn i1() -> Instance {
        Instance::new(
            2,
            0,
            1,
            2,
            vec![EdgeData::new(0, 1, 2, -4, 2), EdgeData::new(0, 1, 2, -1, 0)],
        )
        .unwrap()
    }

    fn i0() -> Instance {
        Instance::new(2, 0, 1, 0, vec![EdgeData::new(0, 1, 1, 1, 0)]).unwrap()
    }

    fn corners(points: &[FrontierPoint]) -> Vec<(Rational, Rational)> {
        points
            .iter()
            .map(|p| (p.cost.clone(), p.fee.clone()))
            .collect()
    }

    #[test]
    fn enumerates_single_edge() {
        assert_eq!(enumerate_integral_flows(&i0()).unwrap().len(), 2);
    }

    #[test]
    fn enumerates_parallel_edges() {
        let flows = enumerate_integral_flows(&i1()).unwrap();
        assert_eq!(flows.len(), 9);
    }

    #[test]
    fn backwards_flow_is_excluded() {
        let inst = Instance::new(2, 0, 1, 0, vec![EdgeData::new(1, 0, 2, -1, 0)]).unwrap();
        assert_eq!(enumerate_integral_flows(&inst).unwrap().len(), 1);
    }

    #[test]
    fn optimum_interpolates_budget_line() {
        let sol = oracle_optimum(&i1()).unwrap();
        assert_eq!(sol.objective, rat(-6));
        assert_eq!(sol.flow.values(), &[rat(1), rat(2)]);
        assert_eq!(oracle_optimum(&i0()).unwrap().objective, rat(0));
        let zero_budget = i1().with_budget(0).unwrap();
        let sol = oracle_optimum(&zero_budget).unwrap();
        assert_eq!(sol.objective, rat(-2));
        assert_eq!(sol.flow.values(), &[rat(0), rat(2)]);
    }

    #[test]
    fn frontier_corners() {
        assert_eq!(
            corners(&oracle_frontier(&i1()).unwrap()),
            vec![(rat(-2), rat(0)), (rat(-10), rat(4))]
        );
        assert_eq!(
            corners(&oracle_frontier(&i0()).unwrap()),
            vec![(rat(0), rat(0))]
        );
        let negated = Instance::new(
            2,
            0,
            1,
            2,
            i1().edges()
                .iter()
                .map(|e| EdgeData::new(e.tail, e.head, e.capacity, -e.cost, e.fee))
                .collect(),
        )
        .unwrap();
        assert_eq!(
            corners(&oracle_frontier(&negated).unwrap()),
            vec![(rat(0), rat(0))]
        );
    }

    #[test]
    fn guard_is_enforced() {
        let edges = (0..12).map(|_| EdgeData::new(0, 1, 9, -1, 1)).collect();
        let inst = Instance::new(2, 0, 1, 3, edges).unwrap();
        assert!(matches!(
            oracle_optimum(&inst),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
