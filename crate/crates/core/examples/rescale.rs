//! Turn a flow that overshoots the budget by a factor of at most 1 + eps
//! into a feasible one by scaling it down.

use bcmcf::flowcore::rational::{format_rational, ratio};
use bcmcf::fptas::rescale_bicriteria;
use bcmcf::{validate_flow, EdgeData, Flow, Instance};

fn main() -> bcmcf::Result<()> {
    let inst = Instance::new(2, 0, 1, 2, vec![EdgeData::new(0, 1, 4, -3, 1)])?;
    let eps = ratio(1, 4);
    // fee 5/2 = (1 + 1/4)·B
    let loose = Flow::new(&inst, vec![ratio(5, 2)])?;
    let fixed = rescale_bicriteria(&loose, &eps)?;
    println!(
        "before: fee {} cost {}",
        format_rational(loose.fee()),
        format_rational(loose.cost())
    );
    println!(
        "after:  fee {} cost {}",
        format_rational(fixed.fee()),
        format_rational(fixed.cost())
    );
    println!(
        "feasible: {}",
        validate_flow(&inst, fixed.values())?.is_feasible()
    );
    Ok(())
}
