//! Exact Gaussian rational numbers `re + im*i` over arbitrary-precision
//! rationals. This is the ground field for every exact computation in the
//! crate; purely real quantities simply have `im = 0`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{Field, Ring};

/// A Gaussian rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a real scalar.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// `(p/q) + (r/s) i`.
    pub fn from_parts(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::new(BigInt::from(r), BigInt::from(s)),
        }
    }

    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `re^2 + im^2` (a rational).
    pub fn norm2(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Absolute value of a real scalar. Panics if `im != 0`.
    pub fn abs_real(&self) -> BigRational {
        assert!(self.is_real(), "abs_real on non-real scalar");
        self.re.abs()
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        Scalar {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }
    fn neg(&self) -> Self {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Field for Scalar {
    fn inv(&self) -> Self {
        let n = self.norm2();
        assert!(!n.is_zero(), "division by zero scalar");
        Scalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Ring::$f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                Ring::$f(self, rhs)
            }
        }
    };
}
scalar_binop!(Add, add, add);
scalar_binop!(Sub, sub, sub);
scalar_binop!(Mul, mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        Field::div(&self, &rhs)
    }
}
impl<'a> Div<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        Field::div(self, rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Ring::neg(&self)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Text format `p/q`, `r/s*i`, or `p/q+r/s*i` (denominator omitted when 1).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", fmt_rational(&self.im));
        }
        let sign = if self.im.is_negative() { "" } else { "+" };
        write!(
            f,
            "{}{}{}*i",
            fmt_rational(&self.re),
            sign,
            fmt_rational(&self.im)
        )
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = String;

    /// Parses `p/q`, `r/s*i`, or `p/q+r/s*i` (also with `-` joining the parts).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(im_part) = s.strip_suffix("*i") {
            // Find the sign that splits real and imaginary parts, skipping a
            // leading sign and any sign inside the already-stripped suffix.
            let bytes = im_part.as_bytes();
            let mut split = None;
            for idx in (1..im_part.len()).rev() {
                if (bytes[idx] == b'+' || bytes[idx] == b'-')
                    && bytes[idx - 1] != b'/'
                    && bytes[idx - 1] != b'+'
                    && bytes[idx - 1] != b'-'
                {
                    split = Some(idx);
                    break;
                }
            }
            match split {
                Some(idx) => {
                    let re = parse_rational(&im_part[..idx])?;
                    let im_str = &im_part[idx..];
                    let im = if im_str == "+" || im_str == "-" {
                        return Err("dangling sign in imaginary part".into());
                    } else {
                        parse_rational(im_str)?
                    };
                    Ok(Scalar::new(re, im))
                }
                None => Ok(Scalar::new(BigRational::zero(), parse_rational(im_part)?)),
            }
        } else {
            Ok(Scalar::real(parse_rational(s)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let a = Scalar::from_parts(1, 2, -3, 4);
        let b = Scalar::from_parts(-5, 7, 2, 9);
        let prod = Ring::mul(&a, &b);
        let back = Field::div(&prod, &b);
        assert_eq!(back, a);
    }

    #[test]
    fn inverse_of_i() {
        let i = Scalar::i();
        assert_eq!(Field::inv(&i), Ring::neg(&i));
    }

    #[test]
    fn display_and_parse() {
        for s in [
            Scalar::from_ratio(3, 7),
            Scalar::from_parts(1, 2, 3, 4),
            Scalar::from_parts(-1, 2, -3, 4),
            Scalar::from_parts(0, 1, -3, 4),
            Scalar::from_int(-12),
            Scalar::zero(),
        ] {
            let text = s.to_string();
            let parsed: Scalar = text.parse().unwrap();
            assert_eq!(parsed, s, "round trip of {text}");
        }
        assert_eq!("2/3".parse::<Scalar>().unwrap(), Scalar::from_ratio(2, 3));
        assert_eq!(
            "1/2+3/4*i".parse::<Scalar>().unwrap(),
            Scalar::from_parts(1, 2, 3, 4)
        );
        assert_eq!(
            "-1/2-1/4*i".parse::<Scalar>().unwrap(),
            Scalar::from_parts(-1, 2, -1, 4)
        );
    }
}
