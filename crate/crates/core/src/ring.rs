use std::fmt::{Debug, Display};

use crate::{Poly, Rational};

/// Entries of a [`Matrix`](crate::Matrix): an exact integral domain with
/// exact division where it exists.
pub trait RingEntry: Clone + PartialEq + Debug + Display + Send + Sync {
    /// Zero in the same ring (and polynomial context) as `self`.
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_entry(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `Some(q)` with `q · divisor = self`, or `None`.
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

impl RingEntry for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

impl RingEntry for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.nvars())
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }
}
