//! High-precision fixed-point arithmetic for the transcendental potential
//! checks.
//!
//! Values are big integers scaled by 2^-SHIFT with SHIFT = 192, giving
//! roughly 38 guarded decimal digits beyond the 1e-25 tolerances used by
//! the potential verifications. The type implements the shared ring and
//! field traits so the jet machinery works over it unchanged.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::ring::{Field, Ring};

/// Binary scale: values represent v / 2^SHIFT.
pub const SHIFT: u32 = 192;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fix(pub BigInt);

impl fmt::Debug for Fix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.30}", self.to_f64_lossy())
    }
}

impl Fix {
    pub fn from_int(n: i64) -> Self {
        Fix(BigInt::from(n) << SHIFT)
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0);
        Fix((BigInt::from(p) << SHIFT) / BigInt::from(q))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fix(self.0.abs())
    }

    pub fn shl(&self, k: u32) -> Self {
        Fix(self.0.clone() << k)
    }

    pub fn shr(&self, k: u32) -> Self {
        Fix(self.0.clone() >> k)
    }

    /// Lossy conversion for display only.
    pub fn to_f64_lossy(&self) -> f64 {
        let hi = (self.0.clone() >> (SHIFT - 32))
            .to_string()
            .parse::<f64>()
            .unwrap_or(f64::NAN);
        hi / (2f64).powi(32)
    }

    /// 10^-k as a fixed-point threshold.
    pub fn pow10_neg(k: u32) -> Self {
        let mut den = BigInt::from(1);
        for _ in 0..k {
            den *= 10;
        }
        Fix((BigInt::from(1) << SHIFT) / den)
    }

    fn mul_raw(&self, other: &Self) -> Self {
        Fix((&self.0 * &other.0) >> SHIFT)
    }

    fn inv_raw(&self) -> Self {
        assert!(!self.0.is_zero(), "division by zero");
        Fix((BigInt::from(1) << (2 * SHIFT as usize)) / &self.0)
    }

    /// ln 2 = 2 atanh(1/3).
    pub fn ln2() -> Self {
        let third = Fix::from_ratio(1, 3);
        let mut term = third.clone();
        let z2 = third.mul_raw(&third);
        let mut acc = BigInt::zero();
        let mut k: i64 = 0;
        while !term.0.is_zero() {
            acc += &term.0 / (2 * k + 1);
            term = term.mul_raw(&z2);
            k += 1;
        }
        Fix(acc << 1)
    }

    /// exp(x) by range reduction modulo ln 2 and a Taylor series.
    pub fn exp(&self) -> Self {
        let ln2 = Self::ln2();
        // n = round(x / ln2)
        let n_big: BigInt = ((&self.0 << 1) + &ln2.0) / (&ln2.0 << 1);
        let n: i64 = n_big.to_string().parse().unwrap();
        let r = Fix(&self.0 - &(Fix(BigInt::from(n) << SHIFT).mul_raw(&ln2)).0);
        // Taylor on |r| <= ln2/2.
        let mut term = Fix::from_int(1);
        let mut acc = BigInt::zero();
        let mut k: i64 = 1;
        while !term.0.is_zero() {
            acc += &term.0;
            term = Fix(term.mul_raw(&r).0 / k);
            k += 1;
        }
        if n >= 0 {
            Fix(acc << (n as u32))
        } else {
            Fix(acc >> ((-n) as u32))
        }
    }

    /// Natural logarithm of a positive value.
    pub fn ln(&self) -> Self {
        assert!(self.0.is_positive(), "ln of nonpositive value");
        // Normalize to m in [1, 2).
        let bits = self.0.bits() as i64 - 1 - SHIFT as i64;
        let m = if bits >= 0 {
            Fix(self.0.clone() >> (bits as u32))
        } else {
            Fix(self.0.clone() << ((-bits) as u32))
        };
        // ln m = 2 atanh((m-1)/(m+1)).
        let z = m
            .sub(&Fix::from_int(1))
            .mul_raw(&m.add(&Fix::from_int(1)).inv_raw());
        let z2 = z.mul_raw(&z);
        let mut term = z.clone();
        let mut acc = BigInt::zero();
        let mut k: i64 = 0;
        while !term.0.is_zero() {
            acc += &term.0 / (2 * k + 1);
            term = term.mul_raw(&z2);
            k += 1;
        }
        let lnm = Fix(acc << 1);
        let ln2 = Self::ln2();
        lnm.add(&Fix(BigInt::from(bits) << SHIFT).mul_raw(&ln2))
    }

    fn sin_cos_series(&self, odd: bool) -> Self {
        // Σ (-1)^k x^(2k+odd) / (2k+odd)!
        let x2 = self.mul_raw(self);
        let mut term = if odd {
            self.clone()
        } else {
            Fix::from_int(1)
        };
        let mut acc = BigInt::zero();
        let mut k: i64 = if odd { 1 } else { 0 };
        let mut sign = true;
        while !term.0.is_zero() {
            if sign {
                acc += &term.0;
            } else {
                acc -= &term.0;
            }
            sign = !sign;
            term = Fix(term.mul_raw(&x2).0 / ((k + 1) * (k + 2)));
            k += 2;
        }
        Fix(acc)
    }

    pub fn sin(&self) -> Self {
        self.sin_cos_series(true)
    }

    pub fn cos(&self) -> Self {
        self.sin_cos_series(false)
    }

    pub fn cosh(&self) -> Self {
        let e = self.exp();
        Fix((&e.0 + &e.inv_raw().0) >> 1)
    }

    pub fn sinh(&self) -> Self {
        let e = self.exp();
        Fix((&e.0 - &e.inv_raw().0) >> 1)
    }
}

impl Ring for Fix {
    fn zero() -> Self {
        Fix(BigInt::zero())
    }
    fn one() -> Self {
        Fix(BigInt::from(1) << SHIFT)
    }
    fn add(&self, other: &Self) -> Self {
        Fix(&self.0 + &other.0)
    }
    fn neg(&self) -> Self {
        Fix(-&self.0)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_raw(other)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        Fix::from_int(n)
    }
}

impl Field for Fix {
    fn inv(&self) -> Self {
        self.inv_raw()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Fix, b: &Fix, digits: u32) -> bool {
        a.sub(b).abs() < Fix::pow10_neg(digits)
    }

    #[test]
    fn exp_and_ln_are_inverse() {
        for (p, q) in [(1, 2), (7, 3), (-5, 4), (11, 7)] {
            let x = Fix::from_ratio(p, q);
            assert!(close(&x.exp().ln(), &x, 45));
        }
    }

    #[test]
    fn trig_pythagoras() {
        let x = Fix::from_ratio(5, 7);
        let (s, c) = (x.sin(), x.cos());
        assert!(close(&s.mul(&s).add(&c.mul(&c)), &Fix::from_int(1), 45));
        let (sh, ch) = (x.sinh(), x.cosh());
        assert!(close(&ch.mul(&ch).sub(&sh.mul(&sh)), &Fix::from_int(1), 45));
    }

    #[test]
    fn exp_matches_known_value() {
        // e = 2.718281828459045235360287...
        let e = Fix::from_int(1).exp();
        let lo = Fix::from_ratio(2718281828459045235, 1000000000000000000);
        assert!(close(&e, &lo, 17));
    }
}
