//! Shared corpora and brute-force references for the integration tests.
#![allow(dead_code)]

use bcmcf::flowcore::{Digraph, Rational};
use bcmcf::generate::{generate, BudgetMode, GenParams};
use bcmcf::Instance;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Desk-scale corpus: n ≤ 6, m ≤ 10, u ≤ 3, |c| ≤ 5, b ≤ 5, all budget
/// modes in rotation.
pub fn corpus(count: usize) -> Vec<(GenParams, Instance)> {
    let mut sizes = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..count)
        .map(|i| {
            let params = GenParams {
                nodes: sizes.random_range(2..=6),
                edges: sizes.random_range(1..=10),
                max_capacity: 3,
                max_cost: 5,
                max_fee: 5,
                budget_mode: BudgetMode::ALL[i % 3],
                acyclic: false,
                seed: 1000 + i as u64,
            };
            let inst = generate(&params).expect("valid parameters");
            (params, inst)
        })
        .collect()
}

/// Acyclic corpus: n ≤ 8, m ≤ 14.
pub fn dag_corpus(count: usize, max_capacity: i64) -> Vec<(GenParams, Instance)> {
    let mut sizes = ChaCha8Rng::seed_from_u64(0xda6);
    (0..count)
        .map(|i| {
            let params = GenParams {
                nodes: sizes.random_range(2..=8),
                edges: sizes.random_range(1..=14),
                max_capacity,
                max_cost: 5,
                max_fee: 5,
                budget_mode: BudgetMode::ALL[i % 3],
                acyclic: true,
                seed: 5000 + i as u64,
            };
            let inst = generate(&params).expect("valid parameters");
            (params, inst)
        })
        .collect()
}

/// Every s-t path of a DAG, as arc lists.
pub fn all_paths(graph: &Digraph, source: usize, sink: usize) -> Vec<Vec<usize>> {
    fn go(g: &Digraph, v: usize, sink: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == sink {
            out.push(path.clone());
            return;
        }
        for (a, &(tail, head)) in g.arcs.iter().enumerate() {
            if tail == v {
                path.push(a);
                go(g, head, sink, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(graph, source, sink, &mut Vec::new(), &mut out);
    out
}

/// Minimum `Σnum / Σden` over s-t paths with `Σden > 0`.
pub fn brute_min_ratio_path(
    graph: &Digraph,
    num: &[Rational],
    den: &[Rational],
    source: usize,
    sink: usize,
) -> Option<Rational> {
    all_paths(graph, source, sink)
        .into_iter()
        .filter_map(|p| {
            let n: Rational = p
                .iter()
                .map(|&a| num[a].clone())
                .fold(Rational::zero(), |x, y| x + y);
            let d: Rational = p
                .iter()
                .map(|&a| den[a].clone())
                .fold(Rational::zero(), |x, y| x + y);
            (d > Rational::zero()).then(|| n / d)
        })
        .min()
}

/// Every simple cycle, each listed once (rooted at its smallest node).
pub fn all_cycles(graph: &Digraph) -> Vec<Vec<usize>> {
    fn go(
        g: &Digraph,
        root: usize,
        v: usize,
        on_path: &mut Vec<bool>,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for (a, &(tail, head)) in g.arcs.iter().enumerate() {
            if tail != v || head < root {
                continue;
            }
            if head == root {
                path.push(a);
                out.push(path.clone());
                path.pop();
            } else if !on_path[head] {
                on_path[head] = true;
                path.push(a);
                go(g, root, head, on_path, path, out);
                path.pop();
                on_path[head] = false;
            }
        }
    }
    let mut out = Vec::new();
    for root in 0..graph.node_count {
        let mut on_path = vec![false; graph.node_count];
        on_path[root] = true;
        go(graph, root, root, &mut on_path, &mut Vec::new(), &mut out);
    }
    out
}

/// Minimum `Σnum / Σden` over simple cycles with `Σden > 0`.
pub fn brute_min_ratio_cycle(graph: &Digraph, num: &[f64], den: &[f64]) -> Option<f64> {
    all_cycles(graph)
        .into_iter()
        .filter_map(|c| {
            let n: f64 = c.iter().map(|&a| num[a]).sum();
            let d: f64 = c.iter().map(|&a| den[a]).sum();
            (d > 0.0).then_some(n / d)
        })
        .min_by(|a, b| a.partial_cmp(b).expect("finite ratios"))
}
