use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::instance::Instance;
use super::rational::{rat, Rational};

/// Edge flow values with their exact cost `c(x)` and fee `b(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    values: Vec<Rational>,
    cost: Rational,
    fee: Rational,
}

impl Flow {
    pub fn new(inst: &Instance, values: Vec<Rational>) -> Result<Self> {
        if values.len() != inst.edge_count() {
            return Err(Error::Arity {
                expected: inst.edge_count(),
                found: values.len(),
            });
        }
        let (cost, fee) = aggregates(inst, &values);
        Ok(Self { values, cost, fee })
    }

    pub fn from_integers(inst: &Instance, values: &[i64]) -> Result<Self> {
        Self::new(inst, values.iter().map(|&v| rat(v)).collect())
    }

    pub fn zero(inst: &Instance) -> Self {
        Self {
            values: vec![Rational::zero(); inst.edge_count()],
            cost: Rational::zero(),
            fee: Rational::zero(),
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn value(&self, edge: usize) -> &Rational {
        &self.values[edge]
    }

    pub fn cost(&self) -> &Rational {
        &self.cost
    }

    pub fn fee(&self) -> &Rational {
        &self.fee
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `factor * x`; cost and fee scale linearly.
    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            values: self.values.iter().map(|v| v * factor).collect(),
            cost: &self.cost * factor,
            fee: &self.fee * factor,
        }
    }

    /// `alpha * a + (1 - alpha) * b` for flows over the same edge set.
    pub fn convex_combination(a: &Flow, alpha: &Rational, b: &Flow) -> Self {
        assert_eq!(a.len(), b.len(), "flows over different edge sets");
        let beta = Rational::one() - alpha;
        Self {
            values: a
                .values
                .iter()
                .zip(&b.values)
                .map(|(x, y)| x * alpha + y * &beta)
                .collect(),
            cost: &a.cost * alpha + &b.cost * &beta,
            fee: &a.fee * alpha + &b.fee * &beta,
        }
    }

    /// Keeps the first `len` values, recomputing aggregates on `inst`.
    pub(crate) fn truncated(&self, inst: &Instance) -> Self {
        let values = self.values[..inst.edge_count()].to_vec();
        let (cost, fee) = aggregates(inst, &values);
        Self { values, cost, fee }
    }
}

fn aggregates(inst: &Instance, values: &[Rational]) -> (Rational, Rational) {
    let mut cost = Rational::zero();
    let mut fee = Rational::zero();
    for (e, x) in inst.edges().iter().zip(values) {
        if x.is_zero() {
            continue;
        }
        if e.cost != 0 {
            cost += x * rat(e.cost);
        }
        if e.fee != 0 {
            fee += x * rat(e.fee);
        }
    }
    (cost, fee)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityViolation {
    pub edge: usize,
    pub value: Rational,
    pub capacity: i64,
}

/// Everything [`validate_flow`] found, plus recomputed aggregates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub capacity_violations: Vec<CapacityViolation>,
    /// `(node, inflow - outflow)` for interior nodes that are unbalanced.
    pub conservation_violations: Vec<(usize, Rational)>,
    /// Net outflow of the source when it is negative.
    pub negative_value: Option<Rational>,
    /// `b(x) - B` when positive.
    pub budget_excess: Option<Rational>,
    pub cost: Rational,
    pub fee: Rational,
    /// Net outflow of the source.
    pub flow_value: Rational,
}

impl ValidationReport {
    pub fn is_feasible(&self) -> bool {
        self.capacity_violations.is_empty()
            && self.conservation_violations.is_empty()
            && self.negative_value.is_none()
            && self.budget_excess.is_none()
    }
}

/// Checks `x` against capacities, conservation at every node other than
/// the source and sink, a nonnegative flow value, and the budget.
pub fn validate_flow(inst: &Instance, values: &[Rational]) -> Result<ValidationReport> {
    if values.len() != inst.edge_count() {
        return Err(Error::Arity {
            expected: inst.edge_count(),
            found: values.len(),
        });
    }
    let mut balance = vec![Rational::zero(); inst.node_count()];
    let mut capacity_violations = Vec::new();
    for (i, (e, x)) in inst.edges().iter().zip(values).enumerate() {
        if x.is_negative() || *x > rat(e.capacity) {
            capacity_violations.push(CapacityViolation {
                edge: i,
                value: x.clone(),
                capacity: e.capacity,
            });
        }
        balance[e.head] += x;
        balance[e.tail] -= x;
    }
    let conservation_violations = balance
        .iter()
        .enumerate()
        .filter(|&(v, r)| v != inst.source() && v != inst.sink() && !r.is_zero())
        .map(|(v, r)| (v, r.clone()))
        .collect();
    let flow_value = -balance[inst.source()].clone();
    let negative_value = flow_value.is_negative().then(|| flow_value.clone());
    let (cost, fee) = aggregates(inst, values);
    let excess = &fee - rat(inst.budget());
    let budget_excess = excess.is_positive().then_some(excess);
    Ok(ValidationReport {
        capacity_violations,
        conservation_violations,
        negative_value,
        budget_excess,
        cost,
        fee,
        flow_value,
    })
}
