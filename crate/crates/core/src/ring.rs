//! Minimal ring/field abstractions shared by scalars, series, polynomials,
//! matrices and jets.

use std::fmt::Debug;

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn from_i64(n: i64) -> Self {
        let neg = n < 0;
        let mut k = n.unsigned_abs();
        let mut acc = Self::zero();
        let mut pow = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&pow);
            }
            pow = pow.add(&pow);
            k >>= 1;
        }
        if neg {
            acc.neg()
        } else {
            acc
        }
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}
