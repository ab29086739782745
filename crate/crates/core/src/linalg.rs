//! Small dense exact matrices.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Index, IndexMut, Mul};

use crate::scalar::Scalar;

/// Row-major dense matrix over an exact scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Hash for Matrix<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_usize(self.rows);
        state.write_usize(self.cols);
        for x in &self.data {
            x.hash_reduced(state);
        }
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<T>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x.clone()).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "apply dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m[(r, c)].clone();
            for j in 0..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let delta = f.clone() * m[(r, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Symmetric bilinear form `u^T g v`.
pub fn bilinear<T: Scalar>(g: &Matrix<T>, u: &[T], v: &[T]) -> T {
    dot(u, &g.apply(v))
}

pub fn dot<T: Scalar>(u: &[T], v: &[T]) -> T {
    u.iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

pub fn add_vec<T: Scalar>(u: &[T], v: &[T]) -> Vec<T> {
    u.iter().zip(v).map(|(a, b)| a.clone() + b.clone()).collect()
}

pub fn sub_vec<T: Scalar>(u: &[T], v: &[T]) -> Vec<T> {
    u.iter().zip(v).map(|(a, b)| a.clone() - b.clone()).collect()
}

pub fn scale_vec<T: Scalar>(c: &T, v: &[T]) -> Vec<T> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn neg_vec<T: Scalar>(v: &[T]) -> Vec<T> {
    v.iter().map(|x| -x.clone()).collect()
}

pub fn is_zero_vec<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type M = Matrix<Rational64>;

    #[test]
    fn inverse_of_cartan_a2() {
        let a = M::from_i64_rows(&[vec![2, -1], vec![-1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv[(0, 0)], Rational64::new(2, 3));
        assert_eq!(inv[(0, 1)], Rational64::new(1, 3));
        assert!(a.matmul(&inv).is_identity());
        assert!(M::from_i64_rows(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn nullspace_has_full_dimension() {
        let a = M::from_i64_rows(&[vec![1, 1, 0], vec![2, 2, 0]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vec(&a.apply(v)));
        }
        assert_eq!(a.rank(), 1);
    }
}
