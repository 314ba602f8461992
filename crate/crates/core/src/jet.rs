//! Exact two-variable truncated Taylor expansions (jets) at a base point.
//!
//! Jets are the evaluation carrier for differential operators: applying a
//! cataloged operator to a polynomial probe jet at a rational point stays
//! entirely inside exact arithmetic.

use std::fmt;

use crate::error::CoreError;
use crate::poly::MPoly;
use crate::ring::{Field, Ring};

/// Truncated Taylor expansion Σ_{i+j≤N} c_{ij} dx^i dy^j around a base
/// point, with exact coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct Jet2<R: Ring> {
    pub base: (R, R),
    pub order: usize,
    /// Coefficient grid, row-major on (i, j) with i, j ≤ order; entries
    /// with i + j > order are identically zero.
    c: Vec<R>,
}

impl<R: Ring> Jet2<R> {
    pub fn zero(base: (R, R), order: usize) -> Self {
        Jet2 {
            base,
            order,
            c: vec![R::zero(); (order + 1) * (order + 1)],
        }
    }

    pub fn constant(v: R, base: (R, R), order: usize) -> Self {
        let mut j = Self::zero(base, order);
        j.set(0, 0, v);
        j
    }

    /// The jet of the first coordinate function.
    pub fn var_x(base: (R, R), order: usize) -> Self {
        let mut j = Self::constant(base.0.clone(), base, order);
        if j.order >= 1 {
            j.set(1, 0, R::one());
        }
        j
    }

    /// The jet of the second coordinate function.
    pub fn var_y(base: (R, R), order: usize) -> Self {
        let mut j = Self::constant(base.1.clone(), base, order);
        if j.order >= 1 {
            j.set(0, 1, R::one());
        }
        j
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.c[i * (self.order + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        let n = self.order + 1;
        self.c[i * n + j] = v;
    }

    /// Value at the base point.
    pub fn value(&self) -> &R {
        self.get(0, 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.base, other.base, "jet base point mismatch");
        let ord = self.order.min(other.order);
        let mut out = Self::zero(self.base.clone(), ord);
        for i in 0..=ord {
            for j in 0..=(ord - i) {
                out.set(i, j, self.get(i, j).add(other.get(i, j)));
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.c {
            *v = v.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = self.clone();
        for v in &mut out.c {
            *v = v.mul(s);
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.base, other.base, "jet base point mismatch");
        let ord = self.order.min(other.order);
        let mut out = Self::zero(self.base.clone(), ord);
        for i1 in 0..=self.order.min(ord) {
            for j1 in 0..=(self.order.min(ord) - i1) {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=(ord - i1 - j1) {
                    for j2 in 0..=(ord - i1 - j1 - i2) {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        let cur = out.get(i1 + i2, j1 + j2).add(&a.mul(b));
                        out.set(i1 + i2, j1 + j2, cur);
                    }
                }
            }
        }
        out
    }

    /// Partial derivative along axis 0 (x) or 1 (y); lowers the available
    /// order by exactly one.
    pub fn partial(&self, axis: usize) -> Self {
        assert!(self.order >= 1, "cannot differentiate an order-0 jet");
        let ord = self.order - 1;
        let mut out = Self::zero(self.base.clone(), ord);
        for i in 0..=ord {
            for j in 0..=(ord - i) {
                let v = match axis {
                    0 => self.get(i + 1, j).mul(&R::from_i64((i + 1) as i64)),
                    1 => self.get(i, j + 1).mul(&R::from_i64((j + 1) as i64)),
                    _ => panic!("axis must be 0 or 1"),
                };
                out.set(i, j, v);
            }
        }
        out
    }

    /// Drop terms above `order` (no-op when already lower).
    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let mut out = Self::zero(self.base.clone(), order);
        for i in 0..=order {
            for j in 0..=(order - i) {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(R::one(), self.base.clone(), self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact jet of a polynomial in the two chart variables.
    ///
    /// The polynomial's variables are read in sorted-name order as
    /// (x, y); it must use at most the two names in `names`.
    pub fn from_poly(p: &MPoly<R>, names: (&str, &str), base: (R, R), order: usize) -> Self {
        let jx = Self::var_x(base.clone(), order);
        let jy = Self::var_y(base.clone(), order);
        let mut out = Self::zero(base, order);
        for (m, coeff) in &p.terms {
            let mut t = Self::constant(coeff.clone(), out.base.clone(), order);
            for (name, &e) in m {
                let v = if name == names.0 {
                    &jx
                } else if name == names.1 {
                    &jy
                } else {
                    panic!("polynomial variable {name} not a chart coordinate");
                };
                t = t.mul(&v.pow(e));
            }
            out = out.add(&t);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(R::is_zero)
    }
}

impl<R: Field> Jet2<R> {
    /// Multiplicative inverse of a jet whose value at the base point is
    /// nonzero (formal power series inversion).
    pub fn recip(&self) -> Result<Self, CoreError> {
        if self.value().is_zero() {
            return Err(CoreError::PoleAtBasePoint(
                "denominator vanishes at the base point".into(),
            ));
        }
        let a0_inv = self.value().inv();
        let mut out = Self::zero(self.base.clone(), self.order);
        // Solve (Σ a b)_{ij} = δ_{ij,00} degree by degree.
        for d in 0..=self.order {
            for i in 0..=d {
                let j = d - i;
                let mut acc = if i == 0 && j == 0 {
                    R::one()
                } else {
                    R::zero()
                };
                // subtract Σ_{(p,q) < (i,j)} a_{i-p, j-q} b_{p,q}
                for p in 0..=i {
                    for q in 0..=j {
                        if p == i && q == j {
                            continue;
                        }
                        let a = self.get(i - p, j - q);
                        let b = out.get(p, q);
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        acc = acc.sub(&a.mul(b));
                    }
                }
                out.set(i, j, acc.mul(&a0_inv));
            }
        }
        Ok(out)
    }
}

impl<R: Ring> fmt::Debug for Jet2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet2(order {}; ", self.order)?;
        let mut first = true;
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                let v = self.get(i, j);
                if !v.is_zero() {
                    if !first {
                        write!(f, " + ")?;
                    }
                    write!(f, "({v:?})dx^{i}dy^{j}")?;
                    first = false;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    type J = Jet2<Scalar>;

    fn base(x: i64, y: i64) -> (Scalar, Scalar) {
        (Scalar::from_int(x), Scalar::from_int(y))
    }

    #[test]
    fn bilinear_expansion() {
        // jet of x*y at (1,2), order 2: c00=2, c10=2, c01=1, c11=1
        let b = base(1, 2);
        let j = J::var_x(b.clone(), 2).mul(&J::var_y(b, 2));
        assert_eq!(*j.get(0, 0), Scalar::from_int(2));
        assert_eq!(*j.get(1, 0), Scalar::from_int(2));
        assert_eq!(*j.get(0, 1), Scalar::from_int(1));
        assert_eq!(*j.get(1, 1), Scalar::from_int(1));
    }

    #[test]
    fn derivative_of_square() {
        // d/dx of x^2 = 2x
        let b = base(3, 0);
        let j = J::var_x(b.clone(), 3).pow(2).partial(0);
        let expected = J::var_x(b, 2).scale(&Scalar::from_int(2));
        assert_eq!(j, expected);
    }

    #[test]
    fn product_rule() {
        let b = base(2, 5);
        let f = J::var_x(b.clone(), 4)
            .pow(2)
            .add(&J::var_y(b.clone(), 4).scale(&Scalar::from_int(3)));
        let g = J::var_x(b.clone(), 4).mul(&J::var_y(b.clone(), 4)).add(&J::constant(
            Scalar::from_int(7),
            b,
            4,
        ));
        let lhs = f.mul(&g).partial(0);
        let rhs = f.partial(0).mul(&g.truncate(3)).add(&f.truncate(3).mul(&g.partial(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute() {
        let b = base(1, 1);
        let f = J::var_x(b.clone(), 5).pow(3).mul(&J::var_y(b, 5).pow(2));
        assert_eq!(f.partial(0).partial(1), f.partial(1).partial(0));
    }

    #[test]
    fn reciprocal() {
        let b = base(1, 2);
        let f = J::var_x(b.clone(), 5).add(&J::var_y(b.clone(), 5));
        let r = f.recip().unwrap();
        let one = J::constant(Scalar::from_int(1), b, 5);
        assert_eq!(f.mul(&r), one);
        // pole detection
        let g = J::var_x(base(0, 0), 3);
        assert!(g.recip().is_err());
    }
}
