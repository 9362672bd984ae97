//! Print the cost/fee frontier of a generated instance, plus the slope of
//! every efficient edge.

use bcmcf::exact::enumerate_frontier;
use bcmcf::flowcore::rational::format_rational;
use bcmcf::flowcore::{edge_slopes, frontier_plot_data};
use bcmcf::generate::{generate, GenParams};

fn main() -> bcmcf::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(26);
    let inst = generate(&GenParams {
        nodes: 6,
        edges: 12,
        seed,
        ..GenParams::default()
    })?;
    let points = enumerate_frontier(&inst)?;
    print!("{}", frontier_plot_data(&points));
    for s in edge_slopes(&points) {
        println!("# slope {}", format_rational(&s));
    }
    Ok(())
}
