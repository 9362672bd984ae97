//! Run the approximation scheme at a few accuracies and compare with the
//! exact optimum.

use bcmcf::exact::solve_exact;
use bcmcf::fptas::{solve_gk_with, GkOptions};
use bcmcf::generate::{generate, GenParams};
use num_traits::ToPrimitive;

fn main() -> bcmcf::Result<()> {
    let inst = generate(&GenParams {
        nodes: 7,
        edges: 16,
        seed: 24,
        ..GenParams::default()
    })?;
    let opt = solve_exact(&inst)?.objective;
    println!("exact {:.6}", opt.to_f64().unwrap_or(f64::NAN));
    for eps in [0.5, 0.25, 0.1, 0.05] {
        let run = solve_gk_with(&inst, &GkOptions::new(eps))?;
        let got = run.solution.objective.to_f64().unwrap_or(f64::NAN);
        println!(
            "eps {eps:<5} cost {got:.6}  iterations {:>6}  cycles {:>3}",
            run.solution.iterations, run.distinct_cycles
        );
    }
    Ok(())
}
