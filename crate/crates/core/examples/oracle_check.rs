//! Cross-check the exact solver against brute-force enumeration on a batch
//! of random instances.

use bcmcf::exact::solve_exact;
use bcmcf::generate::{generate, BudgetMode, GenParams};
use bcmcf::oracle::{enumeration_size, oracle_optimum, DEFAULT_GUARD};

fn main() -> bcmcf::Result<()> {
    let mut checked = 0;
    for seed in 0..40 {
        let budget_mode = BudgetMode::ALL[seed as usize % BudgetMode::ALL.len()];
        let inst = generate(&GenParams {
            seed,
            budget_mode,
            ..GenParams::default()
        })?;
        if enumeration_size(&inst) > DEFAULT_GUARD {
            continue;
        }
        let exact = solve_exact(&inst)?.objective;
        let brute = oracle_optimum(&inst)?.objective;
        assert_eq!(exact, brute, "seed {seed}");
        checked += 1;
    }
    println!("{checked} instances agree");
    Ok(())
}
