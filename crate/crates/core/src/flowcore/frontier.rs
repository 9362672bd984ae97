use super::flow::Flow;
use super::rational::{rat, Rational};

/// Extreme point of the lower-left (cost, fee) frontier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierPoint {
    pub cost: Rational,
    pub fee: Rational,
    pub witness: Flow,
    /// Multipliers λ for which this point minimizes `c + λ·b`:
    /// `(lower, upper)`, with `None` as an unbounded upper end.
    pub lambda_range: (Option<Rational>, Option<Rational>),
}

impl FrontierPoint {
    /// Builds the chain from witnesses sorted by increasing fee (and thus
    /// strictly decreasing cost), filling in the λ ranges.
    pub fn chain(witnesses: Vec<Flow>) -> Vec<FrontierPoint> {
        let k = witnesses.len();
        let slopes: Vec<Rational> = witnesses
            .windows(2)
            .map(|w| (w[0].cost() - w[1].cost()) / (w[1].fee() - w[0].fee()))
            .collect();
        witnesses
            .into_iter()
            .enumerate()
            .map(|(i, witness)| {
                let lower = if i + 1 == k {
                    Some(rat(0))
                } else {
                    Some(slopes[i].clone())
                };
                let upper = if i == 0 {
                    None
                } else {
                    Some(slopes[i - 1].clone())
                };
                FrontierPoint {
                    cost: witness.cost().clone(),
                    fee: witness.fee().clone(),
                    witness,
                    lambda_range: (lower, upper),
                }
            })
            .collect()
    }
}

/// Slopes `Δfee / Δcost` of consecutive efficient edges.
pub fn edge_slopes(points: &[FrontierPoint]) -> Vec<Rational> {
    points
        .windows(2)
        .map(|w| (&w[1].fee - &w[0].fee) / (&w[1].cost - &w[0].cost))
        .collect()
}

/// Plot data: one `cost fee` line per point, sorted by fee.
pub fn frontier_plot_data(points: &[FrontierPoint]) -> String {
    use super::rational::format_rational;
    points
        .iter()
        .map(|p| format!("{} {}\n", format_rational(&p.cost), format_rational(&p.fee)))
        .collect()
}
