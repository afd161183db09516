//! Dense matrices over exact rings, with fraction-free determinants.

use std::fmt;

use crate::error::AlgebraError;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::rational::Rational;

/// The operations matrices need from their entries.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; `None` when `d` is zero or does not divide.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    /// Rough size, used to pick cheap pivots.
    fn weight(&self) -> usize {
        1
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        d.recip().map(|r| self * &r)
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        Poly::div_exact(self, d)
    }
    fn weight(&self) -> usize {
        self.len()
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        RatFunc::div(self, d).ok()
    }
    fn weight(&self) -> usize {
        self.num().len() + self.den().len()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for t in 0..self.cols {
                let (a, b) = (self.get(i, t), other.get(t, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        }))
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = T::zero();
                for (i, vi) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !vi.is_zero() && !a.is_zero() {
                        acc = acc.add(&vi.mul(a));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, n: u32) -> Result<Self, AlgebraError> {
        self.square_dim()?;
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        *e == T::one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self, AlgebraError> {
        for &i in rows {
            if i >= self.rows {
                return Err(AlgebraError::IndexOutOfRange { index: i, dim: self.rows });
            }
        }
        for &j in cols {
            if j >= self.cols {
                return Err(AlgebraError::IndexOutOfRange { index: j, dim: self.cols });
            }
        }
        let mut r = rows.to_vec();
        let mut c = cols.to_vec();
        r.sort_unstable();
        c.sort_unstable();
        Ok(Matrix::from_fn(r.len(), c.len(), |i, j| self.get(r[i], c[j]).clone()))
    }

    fn square_dim(&self) -> Result<usize, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    /// Bareiss fraction-free elimination; the empty determinant is 1.
    pub fn det(&self) -> Result<T, AlgebraError> {
        let n = self.square_dim()?;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            let pivot = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].weight());
            let p = match pivot {
                Some(p) => p,
                None => return Ok(T::zero()),
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in rest.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let t = row[j].mul(&pivot_row[k]);
                    let t = if lead.is_zero() { t } else { t.sub(&lead.mul(&pivot_row[j])) };
                    row[j] = t.div_exact(&prev).expect("Bareiss division is exact");
                }
                row[k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Determinant of the rows `rows` and columns `cols`, each taken in
    /// increasing order.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<T, AlgebraError> {
        if rows.len() != cols.len() {
            return Err(AlgebraError::CardinalityMismatch(rows.len(), cols.len()));
        }
        self.submatrix(rows, cols)?.det()
    }

    /// Transposed cofactor matrix.
    pub fn adjugate(&self) -> Result<Self, AlgebraError> {
        let n = self.square_dim()?;
        if n == 1 {
            return Ok(Matrix::identity(1));
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let m = self.minor(&rows, &cols)?;
                out.set(j, i, if (i + j) % 2 == 0 { m } else { m.neg() });
            }
        }
        Ok(out)
    }
}

impl Matrix<Poly> {
    /// Exact inverse over the fraction field, entries reduced.
    pub fn inverse(&self) -> Result<Matrix<RatFunc>, AlgebraError> {
        let det = self.det()?;
        if det.is_zero() {
            return Err(AlgebraError::Singular(det.to_string()));
        }
        let adj = self.adjugate()?;
        adj.try_map(|e| RatFunc::new(e.clone(), det.clone()))
    }

    pub fn to_ratfunc(&self) -> Matrix<RatFunc> {
        self.map(RatFunc::from_poly)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::Var;

    fn b(i: u32) -> Poly {
        Poly::var(Var::b(i))
    }
    fn lam(i: u32) -> Poly {
        Poly::var(Var::lam(i))
    }

    fn tri(k: usize) -> Matrix<Poly> {
        Matrix::from_fn(k + 1, k + 1, |i, j| {
            if i == j {
                b(i as u32)
            } else if j == i + 1 {
                Poly::one()
            } else if i == j + 1 {
                lam(i as u32)
            } else {
                Poly::zero()
            }
        })
    }

    fn ones_tri(k: usize) -> Matrix<Poly> {
        tri(k).map(|e| if e.is_zero() { Poly::zero() } else { Poly::one() })
    }

    #[test]
    fn small_dets() {
        assert_eq!(Matrix::from_rows(vec![vec![b(0)]]).det().unwrap(), b(0));
        assert_eq!(ones_tri(1).det().unwrap(), Poly::zero());
        assert_eq!(ones_tri(2).det().unwrap(), Poly::int(-1));
        assert_eq!(tri(1).det().unwrap(), b(0).mul(&b(1)).sub(&lam(1)));
        let empty: Matrix<Poly> = Matrix::zeros(0, 0);
        assert_eq!(empty.det().unwrap(), Poly::one());
    }

    #[test]
    fn cofactor_expansion_agrees() {
        let a = tri(3);
        let d = a.det().unwrap();
        let mut expect = Poly::zero();
        for j in 0..4 {
            let rows = [1, 2, 3];
            let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
            let m = a.minor(&rows, &cols).unwrap();
            let t = a.get(0, j).mul(&m);
            expect = if j % 2 == 0 { expect.add(&t) } else { expect.sub(&t) };
        }
        assert_eq!(d, expect);
    }

    #[test]
    fn minors() {
        let a = tri(2);
        assert_eq!(a.minor(&[], &[]).unwrap(), Poly::one());
        assert_eq!(a.minor(&[0], &[1]).unwrap(), Poly::one());
        assert_eq!(a.minor(&[1, 2], &[0, 1]).unwrap(), lam(1).mul(&lam(2)));
        assert!(matches!(a.minor(&[0], &[0, 1]), Err(AlgebraError::CardinalityMismatch(1, 2))));
        let r: Matrix<Poly> = Matrix::zeros(2, 3);
        assert!(matches!(r.det(), Err(AlgebraError::NonSquare { .. })));
    }

    #[test]
    fn inverses() {
        let id: Matrix<Poly> = Matrix::identity(3);
        assert!(id.inverse().unwrap().is_identity());
        let one = Matrix::from_rows(vec![vec![b(0)]]).inverse().unwrap();
        assert_eq!(one.get(0, 0), &RatFunc::new(Poly::one(), b(0)).unwrap());
        let a = tri(1);
        let inv = a.inverse().unwrap();
        let d = b(0).mul(&b(1)).sub(&lam(1));
        let expect = [[b(1), Poly::int(-1)], [lam(1).neg(), b(0)]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(inv.get(i, j), &RatFunc::new(expect[i][j].clone(), d.clone()).unwrap());
            }
        }
        assert!(a.to_ratfunc().mul(&inv).unwrap().is_identity());
        let sing = ones_tri(1);
        assert!(matches!(sing.inverse(), Err(AlgebraError::Singular(_))));
    }
}
