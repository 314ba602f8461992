//! Multivariate polynomials over an arbitrary exact ring, used for
//! parameter polynomials (coefficients in the potential parameters),
//! Poisson polynomials in Lie generators, and chart-coordinate
//! coefficient expressions.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::Ring;
use crate::scalar::Scalar;

/// A monomial: map from variable name to positive exponent.
pub type Mono = BTreeMap<String, u32>;

/// Sparse multivariate polynomial with coefficients in `R`.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq)]
pub struct MPoly<R: Ring> {
    pub terms: BTreeMap<Mono, R>,
}

/// Polynomial in named parameters over the Gaussian rationals.
pub type ParamPoly = MPoly<Scalar>;

impl<R: Ring> MPoly<R> {
    pub fn var(name: &str) -> Self {
        let mut m = Mono::new();
        m.insert(name.to_string(), 1);
        let mut terms = BTreeMap::new();
        terms.insert(m, R::one());
        MPoly { terms }
    }

    pub fn constant(c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(), c);
        }
        MPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(R::from_i64(n))
    }

    pub(crate) fn insert_term(&mut self, m: Mono, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.insert_term(m.clone(), v.mul(c));
        }
        out
    }

    /// Total degree; zero polynomial is reported as degree 0.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.values().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Partial derivative with respect to `name`.
    pub fn partial(&self, name: &str) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some(&e) = m.get(name) {
                let mut m2 = m.clone();
                if e == 1 {
                    m2.remove(name);
                } else {
                    m2.insert(name.to_string(), e - 1);
                }
                out.insert_term(m2, c.mul(&R::from_i64(e as i64)));
            }
        }
        out
    }

    /// Substitute every variable through `map`; variables absent from the
    /// map stay themselves.
    pub fn subst(&self, map: &BTreeMap<String, MPoly<R>>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (name, &e) in m {
                let factor = match map.get(name) {
                    Some(p) => p.pow(e),
                    None => Self::var(name).pow(e),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Full evaluation; every variable must be present in `vals`.
    pub fn eval(&self, vals: &BTreeMap<String, R>) -> R {
        let mut out = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (name, &e) in m {
                let v = vals
                    .get(name)
                    .unwrap_or_else(|| panic!("missing value for variable {name}"));
                t = t.mul(&v.pow(e));
            }
            out = out.add(&t);
        }
        out
    }

    /// Apply a ring map to all coefficients.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::<S>::zero();
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), f(c));
        }
        out
    }

    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.keys().cloned())
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

impl<R: Ring> Ring for MPoly<R> {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.neg());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (name, &e) in m2 {
                    *m.entry(name.clone()).or_insert(0) += e;
                }
                out.insert_term(m, c1.mul(c2));
            }
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Self::int(n)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .iter()
                    .map(|(n, &e)| {
                        if e == 1 {
                            n.clone()
                        } else {
                            format!("{n}^{e}")
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .iter()
                    .map(|(n, &e)| {
                        if e == 1 {
                            n.clone()
                        } else {
                            format!("{n}^{e}")
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format!("({c:?})")
                } else {
                    format!("({c:?})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Convenience constructors for polynomials over `Scalar`.
impl ParamPoly {
    pub fn sc(c: Scalar) -> Self {
        Self::constant(c)
    }
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::constant(Scalar::from_ratio(p, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn x() -> ParamPoly {
        ParamPoly::var("x")
    }
    fn y() -> ParamPoly {
        ParamPoly::var("y")
    }

    #[test]
    fn ring_identities() {
        let p = x().mul(&y()).add(&ParamPoly::int(3));
        let q = x().sub(&y().pow(2));
        assert_eq!(p.mul(&q), q.mul(&p));
        assert_eq!(p.sub(&p), ParamPoly::zero());
        let distributed = p.mul(&q.add(&x()));
        assert_eq!(distributed, p.mul(&q).add(&p.mul(&x())));
    }

    #[test]
    fn substitution() {
        // (x + y)^2 with x -> x - y collapses to x^2.
        let p = x().add(&y()).pow(2);
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), x().sub(&y()));
        assert_eq!(p.subst(&map), x().pow(2));
    }

    #[test]
    fn partial_derivative() {
        // d/dx (x^2 y + 3x) = 2xy + 3
        let p = x().pow(2).mul(&y()).add(&x().scale(&Scalar::from_int(3)));
        let expected = x()
            .mul(&y())
            .scale(&Scalar::from_int(2))
            .add(&ParamPoly::int(3));
        assert_eq!(p.partial("x"), expected);
    }
}
