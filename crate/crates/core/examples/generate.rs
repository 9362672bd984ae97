//! Write a reproducible random instance to stdout. Same seed, same bytes.
//!
//!     cargo run --example generate -- 17

use bcmcf::generate::{generate, BudgetMode, GenParams};

fn main() -> bcmcf::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let inst = generate(&GenParams {
        nodes: 5,
        edges: 9,
        budget_mode: BudgetMode::Slack,
        seed,
        ..GenParams::default()
    })?;
    print!("{}", inst.to_text());
    Ok(())
}
