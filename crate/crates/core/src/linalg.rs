//! Dense exact linear algebra over prime fields `F_p`.
//!
//! Everything is Gaussian elimination with first-nonzero pivoting; no
//! randomization anywhere, so ranks, kernels and complements are stable
//! across runs. Matrices act on column vectors.

use crate::error::UsageError;
use serde::{Deserialize, Serialize};

/// A prime modulus for the base field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    /// Validates that `p` is a prime in `2 ..= 2^31 - 1`.
    pub fn new(p: u64) -> Result<Self, UsageError> {
        if p < 2 || p >= (1 << 31) {
            return Err(UsageError::new(format!(
                "field modulus {p} out of range 2..2^31"
            )));
        }
        if !is_prime(p) {
            return Err(UsageError::new(format!("field modulus {p} is not prime")));
        }
        Ok(FieldSpec { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over `F_p`, row-major, entries reduced mod `p`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} mod {} [", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows; entries may be unreduced.
    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Single-column matrix from a vector.
    pub fn column(p: u64, entries: &[u64]) -> Self {
        let mut m = Matrix::zeros(p, entries.len(), 1);
        for (i, &x) in entries.iter().enumerate() {
            m.set(i, 0, x);
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v % self.p;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.get(i, j);
        self.set(i, j, (cur + v % self.p) % self.p);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        assert_eq!(self.p, other.p, "field mismatch in matmul");
        let p = self.p;
        let mut out = Matrix::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.add_at(i, j, a * b % p);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.p, other.p);
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.add_at(i, j, other.get(i, j));
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.p, other.p);
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = (self.p + out.get(i, j) - other.get(i, j)) % self.p;
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = *x * (c % self.p) % self.p;
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = Matrix::zeros(self.p, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Vertical concatenation, `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut out = Matrix::zeros(self.p, self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                out.set(self.rows + i, j, other.get(i, j));
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat: p prime, a != 0.
        debug_assert!(a % self.p != 0);
        pow_mod(a, self.p - 2, self.p)
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let mut pivot_row = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(pi) = pivot_row else { continue };
            if pi != r {
                for j in 0..self.cols {
                    let tmp = self.get(r, j);
                    let v = self.get(pi, j);
                    self.set(r, j, v);
                    self.set(pi, j, tmp);
                }
            }
            let inv = self.inv_mod(self.get(r, c));
            for j in c..self.cols {
                let v = self.get(r, j) * inv % p;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r {
                    let f = self.get(i, c);
                    if f != 0 {
                        for j in c..self.cols {
                            let v = (self.get(i, j) + (p - f) * self.get(r, j)) % p;
                            self.set(i, j, v);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank by forward elimination only; the hot path of the Ext engine.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut data = self.data.clone();
        let mut rank = 0usize;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let mut pivot = None;
            for r in rank..rows {
                if data[r * cols + c] != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot else { continue };
            if pr != rank {
                for j in c..cols {
                    data.swap(rank * cols + j, pr * cols + j);
                }
            }
            let inv = pow_mod(data[rank * cols + c], p - 2, p);
            for j in c..cols {
                data[rank * cols + j] = data[rank * cols + j] * inv % p;
            }
            for r in rank + 1..rows {
                let f = data[r * cols + c];
                if f != 0 {
                    let neg = p - f;
                    for j in c..cols {
                        data[r * cols + j] =
                            (data[r * cols + j] + neg * data[rank * cols + j]) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of `{x : self · x = 0}`, returned as the columns of a matrix.
    pub fn kernel_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut ker = Matrix::zeros(self.p, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            ker.set(fc, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m.get(r, fc);
                if v != 0 {
                    ker.set(pc, k, self.p - v);
                }
            }
        }
        ker
    }

    /// Any solution `X` of `self · X = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        assert_eq!(self.p, b.p);
        let mut aug = self.hstack(b);
        let pivots = aug.rref();
        // A pivot in the right block means inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.p, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.get(r, self.cols + j));
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(self.p, n));
        let pivots = aug.rref();
        // A pivot escaping into the identity block means the left block is
        // rank-deficient.
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Deterministic complement of the column space: unit columns `e_i`
    /// indexed by the non-pivot rows of the column space, so that
    /// `[column-space basis | complement]` is a basis of `F_p^rows`.
    pub fn column_space_complement(&self) -> (Matrix, Vec<usize>) {
        // Pivot rows of the column space = pivot columns of the transpose.
        let mut t = self.transpose();
        let pivot_rows = t.rref();
        let mut is_pivot = vec![false; self.rows];
        for &r in &pivot_rows {
            is_pivot[r] = true;
        }
        let free: Vec<usize> = (0..self.rows).filter(|&r| !is_pivot[r]).collect();
        let mut comp = Matrix::zeros(self.p, self.rows, free.len());
        for (k, &r) in free.iter().enumerate() {
            comp.set(r, k, 1);
        }
        (comp, free)
    }

    /// Column-space basis as the nonzero rows of the transposed echelon form,
    /// re-transposed into columns.
    pub fn column_space_basis(&self) -> Matrix {
        let mut t = self.transpose();
        let pivots = t.rref();
        let rank = pivots.len();
        let mut basis = Matrix::zeros(self.p, self.rows, rank);
        for r in 0..rank {
            for j in 0..self.rows {
                basis.set(j, r, t.get(r, j));
            }
        }
        basis
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_accepts_primes_only() {
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(5).is_ok());
        assert!(FieldSpec::new(2147483647).is_ok());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(6).is_err());
        assert!(FieldSpec::new(1 << 31).is_err());
    }

    #[test]
    fn rref_and_rank() {
        let m = Matrix::from_rows(5, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let id = Matrix::identity(7, 4);
        assert_eq!(id.rank(), 4);
    }

    #[test]
    fn kernel_is_killed_by_matrix() {
        let m = Matrix::from_rows(5, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.matmul(&k).is_zero());
        // rank-nullity
        assert_eq!(m.rank() + k.cols(), m.cols());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_rows(5, &[vec![1, 1], vec![0, 1], vec![1, 2]]);
        let x = Matrix::column(5, &[3, 4]);
        let b = a.matmul(&x);
        let got = a.solve(&b).unwrap();
        assert_eq!(a.matmul(&got), b);

        let bad = Matrix::column(5, &[1, 0, 0]);
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(7, &[vec![1, 2, 0], vec![0, 1, 4], vec![5, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(7, 3));
        let singular = Matrix::from_rows(7, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 0]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn complement_completes_column_space() {
        let m = Matrix::from_rows(2, &[vec![1, 1], vec![1, 1], vec![0, 1]]);
        let basis = m.column_space_basis();
        let (comp, free) = m.column_space_complement();
        assert_eq!(basis.cols() + comp.cols(), m.rows());
        assert_eq!(free.len(), comp.cols());
        let full = basis.hstack(&comp);
        assert!(full.is_invertible());
    }
}
