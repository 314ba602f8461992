//! Finite Laurent series in the contraction parameter ε.
//!
//! Every ε-scaling in the contraction catalog is a finite sum of powers of
//! ε (negative powers allowed), so exact series arithmetic plus a limit
//! extraction is all the calculus that is ever needed.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CoreError;
use crate::ring::{Field, Ring};
use crate::scalar::Scalar;

/// Σ c_k ε^k with finitely many nonzero terms and integer k of either sign.
#[derive(Clone, PartialEq)]
pub struct EpsSeries<C: Ring> {
    pub terms: BTreeMap<i64, C>,
}

/// The common concrete case: Laurent series with Gaussian-rational
/// coefficients.
pub type Eps = EpsSeries<Scalar>;

impl<C: Ring> EpsSeries<C> {
    pub fn monomial(k: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        EpsSeries { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// ε itself.
    pub fn eps() -> Self {
        Self::monomial(1, C::one())
    }

    /// ε^k for any integer k.
    pub fn eps_pow(k: i64) -> Self {
        Self::monomial(k, C::one())
    }

    fn insert(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// Multiply by ε^k.
    pub fn shift(&self, k: i64) -> Self {
        EpsSeries {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// ε→0 limit: the constant coefficient, provided no negative power
    /// survives.
    pub fn eps_limit(&self) -> Result<C, CoreError> {
        if let Some((&k, _)) = self.terms.iter().next() {
            if k < 0 {
                return Err(CoreError::DivergentLimit { exponent: k });
            }
        }
        Ok(self.terms.get(&0).cloned().unwrap_or_else(C::zero))
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    /// True when the series is a single monomial c·ε^k (or zero).
    pub fn as_monomial(&self) -> Option<(i64, &C)> {
        if self.terms.len() == 1 {
            let (&k, c) = self.terms.iter().next().unwrap();
            Some((k, c))
        } else {
            None
        }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> EpsSeries<D> {
        let mut out = EpsSeries::<D>::zero();
        for (&k, c) in &self.terms {
            out.insert(k, f(c));
        }
        out
    }

    /// Substitute a concrete value for ε (it must be invertible when
    /// negative powers are present).
    pub fn eval_at(&self, eps: &C) -> C
    where
        C: Field,
    {
        let mut out = C::zero();
        for (&k, c) in &self.terms {
            let p = if k >= 0 {
                eps.pow(k as u32)
            } else {
                eps.inv().pow((-k) as u32)
            };
            out = out.add(&c.mul(&p));
        }
        out
    }
}

impl<C: Field> EpsSeries<C> {
    /// Inverse of a monomial series c·ε^k. Returns `None` when the series
    /// is not a nonzero monomial (general Laurent inversion is never
    /// needed by the catalog).
    pub fn inv_monomial(&self) -> Option<Self> {
        let (k, c) = self.as_monomial()?;
        Some(Self::monomial(-k, c.inv()))
    }
}

impl<C: Ring> Ring for EpsSeries<C> {
    fn zero() -> Self {
        EpsSeries {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert(k, c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        EpsSeries {
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&k1, c1) in &self.terms {
            for (&k2, c2) in &other.terms {
                out.insert(k1 + k2, c1.mul(c2));
            }
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
}

impl<C: Ring + fmt::Display> fmt::Display for EpsSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*eps"),
                _ => format!("({c})*eps^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Ring> fmt::Debug for EpsSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&k, c)| match k {
                0 => format!("({c:?})"),
                1 => format!("({c:?})*eps"),
                _ => format!("({c:?})*eps^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Eps {
    pub fn from_int(n: i64) -> Self {
        Self::constant(Scalar::from_int(n))
    }
    pub fn scalar(c: Scalar) -> Self {
        Self::constant(c)
    }
    /// c · ε^k with c = p/q.
    pub fn term(p: i64, q: i64, k: i64) -> Self {
        Self::monomial(k, Scalar::from_ratio(p, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits() {
        // 3 + 2ε → 3
        let s = Eps::from_int(3).add(&Eps::term(2, 1, 1));
        assert_eq!(s.eps_limit().unwrap(), Scalar::from_int(3));
        // ε⁻¹ + 1 → divergent at k = −1
        let d = Eps::term(1, 1, -1).add(&Eps::from_int(1));
        match d.eps_limit() {
            Err(CoreError::DivergentLimit { exponent }) => assert_eq!(exponent, -1),
            other => panic!("expected divergence, got {other:?}"),
        }
        // pure positive powers vanish
        let v = Eps::term(7, 2, 2);
        assert_eq!(v.eps_limit().unwrap(), Scalar::zero());
    }

    #[test]
    fn limit_multiplicative_when_finite() {
        let s = Eps::from_int(2).add(&Eps::term(1, 3, 2));
        let t = Eps::from_int(-5).add(&Eps::term(4, 1, 1));
        let lhs = s.mul(&t).eps_limit().unwrap();
        let rhs = Ring::mul(&s.eps_limit().unwrap(), &t.eps_limit().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_inverse() {
        let s = Eps::term(3, 4, -2);
        let inv = s.inv_monomial().unwrap();
        assert_eq!(s.mul(&inv), Eps::one());
        let not_mono = Eps::from_int(1).add(&Eps::eps());
        assert!(not_mono.inv_monomial().is_none());
    }
}
