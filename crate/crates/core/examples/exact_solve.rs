//! Solve a small instance exactly and print the certificate.
//!
//! Two parallel s-t edges: a cheap one that burns budget and a pricier free
//! one. With B = 2 the optimum splits the flow across both.

use bcmcf::exact::solve_exact;
use bcmcf::flowcore::rational::format_rational;
use bcmcf::Instance;

const TEXT: &str = "\
p bcmcf 2 2 2
n 1 s
n 2 t
a 1 2 2 -4 2
a 1 2 2 -1 0
";

fn main() -> bcmcf::Result<()> {
    let inst = Instance::parse(TEXT)?;
    let sol = solve_exact(&inst)?;
    println!("objective   {}", format_rational(&sol.objective));
    println!("budget used {}", format_rational(sol.flow.fee()));
    if let Some(l) = &sol.lambda {
        println!("multiplier  {}", format_rational(l));
    }
    println!("probes      {}", sol.iterations);
    for (i, x) in sol.flow.values().iter().enumerate() {
        println!("  x[{}] = {}", i + 1, format_rational(x));
    }
    Ok(())
}
