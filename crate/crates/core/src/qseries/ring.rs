use num_traits::{One, Zero};

use super::{MSeries, Rat};

/// Minimal commutative ring interface shared by series and plain rationals,
/// so determinant and path routines can run over either.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rat_like(&self, c: &Rat) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn negate(&self) -> Self {
        self.zero_like().minus(self)
    }
}

impl Ring for MSeries {
    fn zero_like(&self) -> Self {
        MSeries::zero_like(self)
    }
    fn one_like(&self) -> Self {
        MSeries::one_like(self)
    }
    fn from_rat_like(&self, c: &Rat) -> Self {
        self.constant_like(c.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn from_rat_like(&self, c: &Rat) -> Self {
        c.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}
