mod common;

use bcmcf::exact::{
    budget_combination, enumerate_frontier, lambda_callback, solve_exact, CallbackVerdict,
};
use bcmcf::flowcore::rational::{rat, ratio};
use bcmcf::flowcore::{add_return_arc, Digraph, EdgeData, Rational, SolutionDocument};
use bcmcf::fptas::{min_ratio_path_dag, solve_gk_with, GkOptions};
use bcmcf::mcc::{is_optimal_circulation, lambda_cost, min_cost_circulation, FeeDirection};
use bcmcf::oracle::{
    enumerate_integral_flows, frontier_from_cloud, oracle_optimum, point_cloud, DEFAULT_GUARD,
};
use bcmcf::{instance_stats, preprocess, validate_flow, Instance};
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn instance(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = Instance> {
    (2..=max_nodes)
        .prop_flat_map(move |n| {
            let edge = (0..n, 0..n, 0i64..=3, -5i64..=5, 0i64..=5);
            (
                Just(n),
                prop::collection::vec(edge, 1..=max_edges),
                0i64..=20,
            )
        })
        .prop_map(|(n, edges, budget)| {
            let edges = edges
                .into_iter()
                .map(|(t, h, u, c, b)| EdgeData::new(t, h, u, c, b))
                .collect();
            Instance::new(n, 0, n - 1, budget, edges).unwrap()
        })
}

fn dag(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = (Digraph, Vec<i64>, Vec<i64>)> {
    (2..=max_nodes).prop_flat_map(move |n| {
        let arc = (0..n, 0..n).prop_filter_map("forward arc", |(a, b)| (a < b).then_some((a, b)));
        prop::collection::vec((arc, 0i64..=9, -4i64..=4), 1..=max_edges).prop_map(move |arcs| {
            let (arcs, rest): (Vec<_>, Vec<_>) =
                arcs.into_iter().map(|(a, n, d)| (a, (n, d))).unzip();
            let (num, den) = rest.into_iter().unzip();
            (Digraph::new(n, arcs), num, den)
        })
    })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 64,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn text_round_trip(inst in instance(6, 10)) {
        let text = inst.to_text();
        let back = Instance::parse(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn preprocess_is_idempotent(inst in instance(6, 10)) {
        let once = preprocess(&inst);
        let twice = preprocess(&once.instance);
        prop_assert_eq!(twice.removed_nodes(), 0);
        prop_assert_eq!(&twice.instance, &once.instance);
    }

    #[test]
    fn preprocess_keeps_the_optimum(inst in instance(5, 8)) {
        let reduced = preprocess(&inst);
        let full = oracle_optimum(&inst).unwrap();
        let small = oracle_optimum(&reduced.instance).unwrap();
        prop_assert_eq!(&full.objective, &small.objective);
        let lifted = reduced.lift_flow(&inst, &small.flow);
        prop_assert!(validate_flow(&inst, lifted.values()).unwrap().is_feasible());
    }

    #[test]
    fn stats_bound_every_flow(inst in instance(5, 8)) {
        let stats = instance_stats(&inst);
        let cbar = Rational::from_integer(stats.cbar.clone());
        let bbar = Rational::from_integer(stats.bbar.clone());
        for x in enumerate_integral_flows(&inst).unwrap() {
            prop_assert!(x.cost().abs() <= cbar);
            prop_assert!(*x.fee() <= bbar);
        }
    }

    #[test]
    fn circulation_is_optimal_and_lexicographic(inst in instance(5, 7), l in 0i64..=12) {
        let circ = add_return_arc(&inst);
        let c = circ.instance();
        let lambda = ratio(l, 2);
        let min = min_cost_circulation(c, &lambda_cost(c, &lambda, FeeDirection::Min).unwrap()).unwrap();
        let max = min_cost_circulation(c, &lambda_cost(c, &lambda, FeeDirection::Max).unwrap()).unwrap();
        let ints: Vec<i64> = min.values().iter().map(|v| v.to_integer().to_i64().unwrap()).collect();
        prop_assert!(is_optimal_circulation(c, &lambda_cost(c, &lambda, FeeDirection::Min).unwrap(), &ints));
        prop_assert!(validate_flow(&c.with_budget(i64::MAX / 4).unwrap(), min.values()).unwrap().is_feasible());

        // Reference: scan every integral s-t flow of the base instance.
        let value = |x: &bcmcf::Flow| x.cost() + &lambda * x.fee();
        let flows = enumerate_integral_flows(&inst).unwrap();
        let best = flows.iter().map(value).min().unwrap();
        prop_assert_eq!(value(&min), best.clone());
        prop_assert_eq!(value(&max), best.clone());
        let fees = flows.iter().filter(|x| value(x) == best).map(|x| x.fee().clone());
        let (lo, hi) = fees.fold((None::<Rational>, None::<Rational>), |(lo, hi), f| {
            (Some(lo.map_or(f.clone(), |v| v.min(f.clone()))), Some(hi.map_or(f.clone(), |v| v.max(f))))
        });
        prop_assert_eq!(min.fee(), &lo.unwrap());
        prop_assert_eq!(max.fee(), &hi.unwrap());
    }

    #[test]
    fn verdicts_are_monotone(inst in instance(5, 7), raw in prop::collection::vec(0i64..=400, 1..12)) {
        let circ = add_return_arc(&inst);
        let mut lambdas = raw;
        lambdas.sort_unstable();
        let mut last = 0;
        for l in lambdas {
            let rank = match lambda_callback(&circ, &ratio(l, 8)).unwrap() {
                CallbackVerdict::Below => 0,
                CallbackVerdict::Inside { .. } => 1,
                CallbackVerdict::Above => 2,
            };
            prop_assert!(rank >= last);
            last = rank;
        }
    }

    #[test]
    fn exact_matches_oracle(inst in instance(5, 8)) {
        let sol = solve_exact(&inst).unwrap();
        let reference = oracle_optimum(&inst).unwrap();
        prop_assert_eq!(&sol.objective, &reference.objective);
        prop_assert!(validate_flow(&inst, sol.flow.values()).unwrap().is_feasible());
        if let Some(lambda) = &sol.lambda {
            prop_assert!(!lambda.is_negative());
        }
    }

    #[test]
    fn frontier_matches_oracle_and_is_convex(inst in instance(5, 8)) {
        let front = enumerate_frontier(&inst).unwrap();
        let reference = frontier_from_cloud(&inst, &point_cloud(&inst, DEFAULT_GUARD).unwrap());
        let corners = |v: &[bcmcf::flowcore::FrontierPoint]| -> Vec<(Rational, Rational)> {
            v.iter().map(|p| (p.cost.clone(), p.fee.clone())).collect()
        };
        prop_assert_eq!(corners(&front), corners(&reference));
        let slopes: Vec<Rational> = front
            .windows(2)
            .map(|w| (&w[0].cost - &w[1].cost) / (&w[1].fee - &w[0].fee))
            .collect();
        prop_assert!(slopes.windows(2).all(|s| s[0] > s[1]));
        prop_assert!(slopes.iter().all(|s| s.is_positive()));
    }

    #[test]
    fn combination_hits_budget(inst in instance(5, 7), num in 0i64..=8) {
        let flows = enumerate_integral_flows(&inst).unwrap();
        let lo = flows.iter().min_by(|a, b| a.fee().cmp(b.fee())).unwrap();
        let hi = flows.iter().max_by(|a, b| a.fee().cmp(b.fee())).unwrap();
        let target = lo.fee() + (hi.fee() - lo.fee()) * ratio(num, 8);
        let x = budget_combination(lo, hi, &target).unwrap();
        if hi.fee() > lo.fee() {
            prop_assert_eq!(x.fee(), &target);
        }
        let loose = inst.with_budget(i64::MAX / 4).unwrap();
        prop_assert!(validate_flow(&loose, x.values()).unwrap().is_feasible());
    }

    #[test]
    fn gk_output_is_feasible_with_increasing_duals(inst in instance(5, 8)) {
        let run = solve_gk_with(&inst, &GkOptions::new(0.5)).unwrap();
        prop_assert!(validate_flow(&inst, run.solution.flow.values()).unwrap().is_feasible());
        prop_assert!(run.log_dual_objective.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(run.solution.objective <= rat(0));
    }

    #[test]
    fn dag_ratio_path_is_exact((graph, num, den) in dag(7, 14)) {
        let num: Vec<Rational> = num.into_iter().map(rat).collect();
        let den: Vec<Rational> = den.into_iter().map(rat).collect();
        let t = graph.node_count - 1;
        let got = min_ratio_path_dag(&graph, &num, &den, 0, t).unwrap();
        let want = common::brute_min_ratio_path(&graph, &num, &den, 0, t);
        prop_assert_eq!(got.as_ref().map(|r| r.ratio.clone()), want);
        if let Some(r) = got {
            prop_assert!(r.denominator.is_positive());
            prop_assert_eq!(graph.arcs[r.edges[0]].0, 0);
            prop_assert_eq!(graph.arcs[*r.edges.last().unwrap()].1, t);
        }
    }

    #[test]
    fn solution_documents_round_trip(inst in instance(5, 8)) {
        let sol = solve_exact(&inst).unwrap();
        let doc = sol.document();
        prop_assert_eq!(&SolutionDocument::parse(&doc.to_text()).unwrap(), &doc);
        prop_assert_eq!(&SolutionDocument::parse(&doc.to_json()).unwrap(), &doc);
        let flow = doc.flow(&inst).unwrap();
        prop_assert_eq!(flow.values(), sol.flow.values());
    }
}

#[test]
fn zero_is_a_valid_flow_everywhere() {
    for (_, inst) in common::corpus(30) {
        let zero = vec![Rational::zero(); inst.edge_count()];
        assert!(validate_flow(&inst, &zero).unwrap().is_feasible());
    }
}
