//! The DAG variant: oracle calls become minimum ratio s-t paths. The
//! observer counts how often the path oracle is queried.

use bcmcf::fptas::{solve_gk_acyclic_with, GkOptions};
use bcmcf::generate::{generate, GenParams};
use bcmcf::oracle::oracle_optimum;
use num_traits::ToPrimitive;

fn main() -> bcmcf::Result<()> {
    let params = GenParams {
        nodes: 6,
        edges: 10,
        acyclic: true,
        seed: 40,
        ..GenParams::default()
    };
    let inst = generate(&params)?;
    let best = oracle_optimum(&inst)?
        .objective
        .to_f64()
        .unwrap_or(f64::NAN);
    println!("optimum {best:.6}");
    for eps in [0.5, 0.2] {
        let mut queries = 0u64;
        let run = solve_gk_acyclic_with(&inst, &GkOptions::new(eps), &mut |_| queries += 1)?;
        let got = run.solution.objective.to_f64().unwrap_or(f64::NAN);
        println!("eps {eps}: cost {got:.6} after {queries} path queries");
    }
    Ok(())
}
