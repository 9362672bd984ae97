//! Multiplicative-weights packing loop over negative-cost cycles.
//!
//! Rows are the capacities of the non-return edges plus the budget. Each
//! iteration asks the oracle for the cycle minimizing
//! `(b(C)·μ + Σ_{e∈C} y_e) / (−c(C))`, routes the largest amount any single
//! row allows, and inflates the dual lengths of the rows it touched.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use super::ratio::{min_ratio_cycle, min_ratio_path_dag, RatioResult};
use crate::error::{Error, Result};
use crate::flowcore::rational::rat;
use crate::flowcore::{add_return_arc, Algorithm, Digraph, Flow, Instance, Rational, Solution};

#[derive(Debug, Clone, PartialEq)]
pub struct GkOptions {
    pub epsilon: f64,
    /// Overrides the default iteration cap.
    pub iteration_cap: Option<u64>,
}

impl GkOptions {
    pub fn new(epsilon: f64) -> Self {
        GkOptions {
            epsilon,
            iteration_cap: None,
        }
    }
}

/// Dual lengths, stored as `exp(log_scale) · (y_hat, mu_hat)` so that the
/// tiny starting values neither underflow nor overflow later.
#[derive(Debug, Clone)]
pub struct DualState {
    pub y_hat: Vec<f64>,
    pub mu_hat: f64,
    pub log_scale: f64,
}

impl DualState {
    /// `ln(B·μ + Σ u_e·y_e)`.
    fn log_objective(&self, work: &WorkGraph, budget: f64) -> f64 {
        let mut d = self.mu_hat * budget;
        for (e, y) in self.y_hat.iter().enumerate() {
            if let Some(u) = work.capacity[e] {
                d += u as f64 * y;
            }
        }
        self.log_scale + d.ln()
    }

    fn renormalize(&mut self) {
        let top = self.y_hat.iter().copied().fold(self.mu_hat, f64::max);
        if top > 1e150 {
            for y in &mut self.y_hat {
                *y /= top;
            }
            self.mu_hat /= top;
            self.log_scale += top.ln();
        }
    }
}

/// One oracle call in the acyclic variant, for instrumentation.
#[derive(Debug)]
pub struct PathQuery<'a> {
    pub graph: &'a Digraph,
    pub num: &'a [f64],
    pub den: &'a [f64],
    pub source: usize,
    pub sink: usize,
    pub result: Option<&'a RatioResult<f64>>,
}

/// Full record of a run.
#[derive(Debug, Clone)]
pub struct GkRun {
    pub solution: Solution,
    /// `ln D` before every oracle call.
    pub log_dual_objective: Vec<f64>,
    /// Distinct cycles that carried flow.
    pub distinct_cycles: usize,
    /// Congestion the raw accumulated flow was divided by.
    pub congestion: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OracleKind {
    Cycle,
    DagPath,
}

/// Edges that can carry flow, indexed densely; maps back to base edges.
struct WorkGraph {
    graph: Digraph,
    /// Base edge index, `None` for the return arc.
    base_edge: Vec<Option<usize>>,
    /// `None` for the return arc, which has no capacity row.
    capacity: Vec<Option<i64>>,
    cost: Vec<i64>,
    fee: Vec<i64>,
}

impl WorkGraph {
    fn build(inst: &Instance, with_return_arc: bool) -> Self {
        let budget_free = inst.budget() == 0;
        let mut work = WorkGraph {
            graph: Digraph::new(inst.node_count(), Vec::new()),
            base_edge: Vec::new(),
            capacity: Vec::new(),
            cost: Vec::new(),
            fee: Vec::new(),
        };
        for (i, e) in inst.edges().iter().enumerate() {
            if e.capacity == 0 || (budget_free && e.fee > 0) {
                continue;
            }
            work.graph.arcs.push((e.tail, e.head));
            work.base_edge.push(Some(i));
            work.capacity.push(Some(e.capacity));
            work.cost.push(e.cost);
            work.fee.push(e.fee);
        }
        if with_return_arc {
            let circ = add_return_arc(inst);
            let r = circ.instance().edge(circ.return_arc());
            work.graph.arcs.push((r.tail, r.head));
            work.base_edge.push(None);
            work.capacity.push(None);
            work.cost.push(0);
            work.fee.push(0);
        }
        work
    }

    fn rows(&self, budget: i64) -> usize {
        self.capacity.iter().filter(|c| c.is_some()).count() + usize::from(budget > 0)
    }
}

/// Packing approximation with a `(1 + ε/4)`-approximate minimum ratio
/// cycle oracle on the circulation form. The result is feasible and costs
/// at most `(1 − ε)` times the optimum (both sides nonpositive).
pub fn solve_gk(inst: &Instance, epsilon: f64) -> Result<Solution> {
    solve_gk_with(inst, &GkOptions::new(epsilon)).map(|run| run.solution)
}

pub fn solve_gk_with(inst: &Instance, options: &GkOptions) -> Result<GkRun> {
    run(inst, options, OracleKind::Cycle, &mut |_| {})
}

/// Same loop on a DAG, with the exact minimum ratio s-t path as oracle:
/// every circulation cycle is an s-t path closed by the return arc.
pub fn solve_gk_acyclic(inst: &Instance, epsilon: f64) -> Result<Solution> {
    solve_gk_acyclic_with(inst, &GkOptions::new(epsilon), &mut |_| {}).map(|run| run.solution)
}

/// [`solve_gk_acyclic`] reporting every oracle call to `observer`.
pub fn solve_gk_acyclic_with(
    inst: &Instance,
    options: &GkOptions,
    observer: &mut dyn FnMut(&PathQuery),
) -> Result<GkRun> {
    if !inst.digraph().is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    run(inst, options, OracleKind::DagPath, observer)
}

fn run(
    inst: &Instance,
    options: &GkOptions,
    kind: OracleKind,
    observer: &mut dyn FnMut(&PathQuery),
) -> Result<GkRun> {
    let eps = options.epsilon;
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "epsilon {eps} is not in (0, 1)"
        )));
    }
    let eps_p = match kind {
        OracleKind::Cycle => eps / 4.0,
        OracleKind::DagPath => eps / 3.0,
    };
    let algorithm = match kind {
        OracleKind::Cycle => Algorithm::Gk,
        OracleKind::DagPath => Algorithm::GkAcyclic,
    };
    let work = WorkGraph::build(inst, kind == OracleKind::Cycle);
    let budget = inst.budget();
    let budget_f = budget as f64;
    let rows = work.rows(budget).max(1) as f64;

    let ln_delta = (1.0 + eps_p).ln() - ((1.0 + eps_p) * rows).ln() / eps_p;
    let phases = (((1.0 + eps_p).ln() - ln_delta) / (1.0 + eps_p).ln()).ceil();
    let cap = options
        .iteration_cap
        .unwrap_or_else(|| (rows * phases * 4.0).min(u64::MAX as f64) as u64);

    let mut dual = DualState {
        y_hat: work
            .capacity
            .iter()
            .map(|c| c.map_or(0.0, |u| 1.0 / u as f64))
            .collect(),
        mu_hat: if budget > 0 { 1.0 / budget_f } else { 0.0 },
        log_scale: ln_delta,
    };
    let den: Vec<f64> = work.cost.iter().map(|&c| -(c as f64)).collect();
    let mut routed: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    let mut log_dual = Vec::new();
    let mut iterations = 0u64;

    loop {
        let ln_d = dual.log_objective(&work, budget_f);
        if ln_d >= 0.0 {
            break;
        }
        log_dual.push(ln_d);
        let num: Vec<f64> = work
            .fee
            .iter()
            .zip(&dual.y_hat)
            .map(|(&b, y)| b as f64 * dual.mu_hat + y)
            .collect();
        let cycle = match kind {
            OracleKind::Cycle => min_ratio_cycle(&work.graph, &num, &den, eps_p).map(|r| r.edges),
            OracleKind::DagPath => {
                let found =
                    min_ratio_path_dag(&work.graph, &num, &den, inst.source(), inst.sink())?;
                observer(&PathQuery {
                    graph: &work.graph,
                    num: &num,
                    den: &den,
                    source: inst.source(),
                    sink: inst.sink(),
                    result: found.as_ref(),
                });
                found.map(|r| r.edges)
            }
        };
        let Some(cycle) = cycle else { break };

        let cost: i64 = cycle.iter().map(|&e| work.cost[e]).sum();
        if cost >= 0 {
            return Err(Error::Internal(
                "oracle returned a cycle of nonnegative cost".into(),
            ));
        }
        let fee: i64 = cycle.iter().map(|&e| work.fee[e]).sum();
        let mut amount = rat(cycle
            .iter()
            .filter_map(|&e| work.capacity[e])
            .min()
            .ok_or_else(|| Error::Internal("cycle without capacity row".into()))?);
        if budget > 0 && fee > 0 {
            amount = amount.min(Rational::new(budget.into(), fee.into()));
        }
        let amount_f = amount.to_f64().unwrap_or(f64::MAX);
        for &e in &cycle {
            if let Some(u) = work.capacity[e] {
                dual.y_hat[e] *= 1.0 + eps_p * amount_f / u as f64;
            }
        }
        if budget > 0 && fee > 0 {
            dual.mu_hat *= 1.0 + eps_p * amount_f * fee as f64 / budget_f;
        }
        dual.renormalize();

        let mut key = cycle;
        key.sort_unstable();
        *routed.entry(key).or_insert_with(Rational::zero) += amount;

        iterations += 1;
        if iterations > cap {
            return Err(Error::Internal(format!("exceeded iteration cap {cap}")));
        }
    }

    let mut x = vec![Rational::zero(); inst.edge_count()];
    for (cycle, amount) in &routed {
        for &e in cycle {
            if let Some(i) = work.base_edge[e] {
                x[i] += amount;
            }
        }
    }
    let raw = Flow::new(inst, x)?;
    let mut congestion = Rational::zero();
    for (e, v) in inst.edges().iter().zip(raw.values()) {
        if e.capacity > 0 {
            congestion = congestion.max(v / rat(e.capacity));
        }
    }
    if budget > 0 {
        congestion = congestion.max(raw.fee() / rat(budget));
    }
    let flow = if congestion.is_zero() {
        Flow::zero(inst)
    } else {
        raw.scaled(&(Rational::from_integer(1.into()) / &congestion))
    };
    Ok(GkRun {
        solution: Solution::new(flow, algorithm, iterations),
        log_dual_objective: log_dual,
        distinct_cycles: routed.len(),
        congestion,
    })
}
