//! Exact arithmetic in the ring of integers extended by the square root of
//! fourteen, enough for the patch-growth closed form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An element `t + u * sqrt(14)` with arbitrary-precision coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadIntZ14 {
    pub t: BigInt,
    pub u: BigInt,
}

impl QuadIntZ14 {
    pub fn new(t: impl Into<BigInt>, u: impl Into<BigInt>) -> Self {
        QuadIntZ14 {
            t: t.into(),
            u: u.into(),
        }
    }

    pub fn one() -> Self {
        QuadIntZ14::new(1, 0)
    }

    /// The fundamental growth unit `15 + 4 * sqrt(14)`.
    pub fn growth_unit() -> Self {
        QuadIntZ14::new(15, 4)
    }

    pub fn conjugate(&self) -> Self {
        QuadIntZ14 {
            t: self.t.clone(),
            u: -self.u.clone(),
        }
    }

    /// Field norm `t^2 - 14 u^2`; equal to 1 exactly for units like the
    /// growth unit.
    pub fn norm(&self) -> BigInt {
        &self.t * &self.t - BigInt::from(14) * &self.u * &self.u
    }

    pub fn mul(&self, other: &Self) -> Self {
        QuadIntZ14 {
            t: &self.t * &other.t + BigInt::from(14) * &self.u * &other.u,
            u: &self.t * &other.u + &self.u * &other.t,
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadIntZ14::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.t.is_one() && self.u.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growth_unit_is_a_unit() {
        let unit = QuadIntZ14::growth_unit();
        assert_eq!(unit.norm(), BigInt::from(1));
        assert!(unit.mul(&unit.conjugate()).is_one());
    }

    #[test]
    fn powers_stay_exact() {
        let unit = QuadIntZ14::growth_unit();
        let square = unit.pow(2);
        assert_eq!(square, QuadIntZ14::new(449, 120));
        assert_eq!(unit.pow(5), unit.pow(2).mul(&unit.pow(3)));
        assert_eq!(square.norm(), BigInt::from(1));
    }
}
