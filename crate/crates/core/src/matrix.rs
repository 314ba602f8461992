//! Dense matrices over an arbitrary exact ring, with the bracket
//! operations used throughout the structure-equation checks.

use std::fmt;

use crate::error::CoreError;
use crate::ring::{Field, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, E>>()?,
        })
    }

    /// Determinant by cofactor expansion; fine for the small matrices used
    /// here (basis maps are 3×3, model matrices at most 6×6).
    pub fn det(&self) -> R {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut acc = R::zero();
        for j in 0..n {
            let c = &self[(0, j)];
            if c.is_zero() {
                continue;
            }
            let minor = self.minor(0, j);
            let term = c.mul(&minor.det());
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let mut m = Self::zero(self.rows - 1, self.cols - 1);
        let mut r = 0;
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let mut c = 0;
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                m[(r, c)] = self[(i, j)].clone();
                c += 1;
            }
            r += 1;
        }
        m
    }

    /// Adjugate matrix: `adj(A) * A = det(A) * I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        Self::from_fn(n, n, |i, j| {
            // cofactor C_{ji}
            let m = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                m
            } else {
                m.neg()
            }
        })
    }
}

impl<R: Field> Matrix<R> {
    /// Exact inverse via Gauss-Jordan elimination over a field.
    pub fn inverse(&self) -> Result<Self, CoreError> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or_else(|| CoreError::NotInvertible("singular matrix".into()))?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(pivot, j)].clone();
                    a[(pivot, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                    let tmp = inv[(pivot, j)].clone();
                    inv[(pivot, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = tmp;
                }
            }
            let p = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].mul(&p);
                inv[(col, j)] = inv[(col, j)].mul(&p);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    a[(r, j)] = a[(r, j)].sub(&f.mul(&a[(col, j)]));
                    inv[(r, j)] = inv[(r, j)].sub(&f.mul(&inv[(col, j)]));
                }
            }
        }
        Ok(inv)
    }
}

impl<R: Ring> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R: Ring> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Commutator [A,B] = AB − BA.
pub fn commutator<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    a.mul(b).sub(&b.mul(a))
}

/// Anticommutator {A,B} = AB + BA.
pub fn anticommutator<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    a.mul(b).add(&b.mul(a))
}

/// Full three-argument symmetrizer: the sum of all six ordered products.
pub fn symmetrizer3<R: Ring>(a: &Matrix<R>, b: &Matrix<R>, c: &Matrix<R>) -> Matrix<R> {
    let mut acc = Matrix::zero(a.rows, a.cols);
    for (x, y, z) in [
        (a, b, c),
        (a, c, b),
        (b, a, c),
        (b, c, a),
        (c, a, b),
        (c, b, a),
    ] {
        acc = acc.add(&x.mul(y).mul(z));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn m2(vals: [i64; 4]) -> Matrix<Scalar> {
        Matrix::from_fn(2, 2, |i, j| Scalar::from_int(vals[i * 2 + j]))
    }

    #[test]
    fn bracket_basics() {
        let a = m2([1, 2, 3, 4]);
        let b = m2([0, 1, -1, 0]);
        // [A,A] = 0
        assert!(commutator(&a, &a).is_zero());
        // {I,B} = 2B
        let i = Matrix::<Scalar>::identity(2);
        assert_eq!(anticommutator(&i, &b), b.scale(&Scalar::from_int(2)));
        // symmetrizer3(I,I,B) = 6B
        assert_eq!(symmetrizer3(&i, &i, &b), b.scale(&Scalar::from_int(6)));
    }

    #[test]
    fn symmetrizer_permutation_invariant() {
        let a = m2([1, 2, 3, 4]);
        let b = m2([0, 1, -1, 0]);
        let c = m2([2, 0, 5, -3]);
        let s = symmetrizer3(&a, &b, &c);
        assert_eq!(s, symmetrizer3(&b, &c, &a));
        assert_eq!(s, symmetrizer3(&c, &a, &b));
        assert_eq!(s, symmetrizer3(&b, &a, &c));
    }

    #[test]
    fn adjugate_and_inverse() {
        let a = m2([2, 1, 7, 4]);
        let adj = a.adjugate();
        let d = a.det();
        assert_eq!(a.mul(&adj), Matrix::identity(2).scale(&d));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
    }
}
