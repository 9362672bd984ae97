use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::rational::Rational;

/// Two-level cost compared lexicographically: `primary` first, `secondary`
/// only to break ties.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexCost {
    pub primary: Rational,
    pub secondary: Rational,
}

impl LexCost {
    pub fn new(primary: Rational, secondary: Rational) -> Self {
        Self { primary, secondary }
    }
}

impl Ord for LexCost {
    fn cmp(&self, other: &Self) -> Ordering {
        self.primary
            .cmp(&other.primary)
            .then_with(|| self.secondary.cmp(&other.secondary))
    }
}

impl PartialOrd for LexCost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Zero for LexCost {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.primary.is_zero() && self.secondary.is_zero()
    }
}

impl Add for LexCost {
    type Output = LexCost;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.primary + rhs.primary, self.secondary + rhs.secondary)
    }
}

impl Sub for LexCost {
    type Output = LexCost;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.primary - rhs.primary, self.secondary - rhs.secondary)
    }
}

impl Neg for LexCost {
    type Output = LexCost;

    fn neg(self) -> Self {
        Self::new(-self.primary, -self.secondary)
    }
}
