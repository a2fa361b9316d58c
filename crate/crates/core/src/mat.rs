//! Dense matrices over a prime field, with exact Gaussian elimination.
//!
//! Storage is row-major `u64`, entries always reduced into `[0, p)`. Vectors
//! are rows by default: a module element `v` acts through `v * A`. Right
//! kernels (column vectors) are exposed for the few places that need them.
//!
//! Large `F_2` instances are routed through the bit-packed kernels in
//! [`crate::f2`]; callers never see the difference.

use crate::f2::BitMat;
use crate::field::{LinalgError, PrimeField};

/// Matrices above this entry count take the packed path when p = 2.
const PACK_THRESHOLD: usize = 4096;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "Mat {}x{} over F_{} [",
            self.rows,
            self.cols,
            self.field.modulus()
        )?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        if self.rows > 16 {
            writeln!(f, "  ...")?;
        }
        write!(f, "]")
    }
}

/// Result of reduced row echelon form.
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Mat {
    pub fn new(field: PrimeField, rows: usize, cols: usize, mut entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        for e in entries.iter_mut() {
            *e %= field.modulus();
        }
        Mat {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            entries.extend_from_slice(r);
        }
        Mat::new(field, rows.len(), cols, entries)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.field.modulus();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c)))
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, s: u64) -> Mat {
        let s = s % self.field.modulus();
        let entries = self.entries.iter().map(|&a| self.field.mul(a, s)).collect();
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Matrix product. Uses the packed `F_2` kernel for large inputs and a
    /// delayed-reduction accumulation loop otherwise.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert_eq!(self.field, other.field);
        let p = self.field.modulus();
        if p == 2 && self.rows * other.cols >= PACK_THRESHOLD && self.cols >= 64 {
            let a = BitMat::from_entries(self.rows, self.cols, &self.entries);
            let b = BitMat::from_entries(other.rows, other.cols, &other.entries);
            let c = a.mul(&b);
            return Mat {
                field: self.field,
                rows: self.rows,
                cols: other.cols,
                entries: c.to_entries(),
            };
        }
        let mut out = vec![0u64; self.rows * other.cols];
        if (p - 1)
            .checked_mul(p - 1)
            .map(|sq| sq.checked_mul(self.cols.max(1) as u64))
            .flatten()
            .is_some()
        {
            // Accumulate without intermediate reductions; the guard above
            // ensures no overflow for any row length we can hit.
            for i in 0..self.rows {
                let a_row = self.row(i);
                let out_row = &mut out[i * other.cols..(i + 1) * other.cols];
                for (k, &a) in a_row.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let b_row = other.row(k);
                    for (o, &b) in out_row.iter_mut().zip(b_row) {
                        *o += a * b;
                    }
                }
                for o in out_row.iter_mut() {
                    *o %= p;
                }
            }
        } else {
            for i in 0..self.rows {
                for (k, &a) in self.row(i).iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let b_row = other.row(k);
                    let out_row = &mut out[i * other.cols..(i + 1) * other.cols];
                    for (o, &b) in out_row.iter_mut().zip(b_row) {
                        *o = (*o + a * b % p) % p;
                    }
                }
            }
        }
        Mat {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            entries: out,
        }
    }

    /// `v * self` for a row vector `v`.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "row vector length must equal row count");
        let p = self.field.modulus();
        let mut out = vec![0u64; self.cols];
        let delayed = (p - 1)
            .checked_mul(p - 1)
            .map(|sq| sq.checked_mul(self.rows.max(1) as u64))
            .flatten()
            .is_some();
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = self.row(k);
            if delayed {
                for (o, &b) in out.iter_mut().zip(row) {
                    *o += a * b;
                }
            } else {
                for (o, &b) in out.iter_mut().zip(row) {
                    *o = (*o + a * b % p) % p;
                }
            }
        }
        if delayed {
            for o in out.iter_mut() {
                *o %= p;
            }
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        Mat {
            field: self.field,
            rows: self.rows,
            cols,
            entries,
        }
    }

    /// Kronecker product: `(A ⊗ B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l]`.
    pub fn kron(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field);
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Mat::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = self.field.mul(a, other.get(k, l));
                        out.entries[(i * other.rows + k) * cols + (j * other.cols + l)] = v;
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form (pivots normalized to 1, cleared above and
    /// below). Row space is preserved.
    pub fn rref(&self) -> Rref {
        if self.field.modulus() == 2 && self.entries.len() >= PACK_THRESHOLD {
            let mut b = BitMat::from_entries(self.rows, self.cols, &self.entries);
            let pivots = b.rref();
            let mat = Mat {
                field: self.field,
                rows: self.rows,
                cols: self.cols,
                entries: b.to_entries(),
            };
            return Rref { mat, pivots };
        }
        let mut m = self.clone();
        let p = m.field.modulus();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut pr = None;
            for r in row..m.rows {
                if m.get(r, col) != 0 {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != row {
                for c in 0..m.cols {
                    m.entries.swap(row * m.cols + c, pr * m.cols + c);
                }
            }
            let inv = m.field.inv(m.get(row, col)).expect("pivot nonzero");
            if inv != 1 {
                for c in col..m.cols {
                    let v = m.field.mul(m.get(row, c), inv);
                    m.entries[row * m.cols + c] = v;
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col);
                if f == 0 {
                    continue;
                }
                let fneg = p - f;
                for c in col..m.cols {
                    let add = m.field.mul(fneg, m.get(row, c));
                    let v = m.field.add(m.get(r, c), add);
                    m.entries[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{v : v * self = 0}` as the rows of the returned matrix.
    ///
    /// Implemented by reducing `[self | I]`: rows whose left block vanishes
    /// carry kernel coordinates in the right block.
    pub fn left_nullspace(&self) -> Mat {
        let aug = self.hstack(&Mat::identity(self.field, self.rows));
        let red = aug.rref();
        let mut rows = Vec::new();
        for r in 0..red.mat.rows {
            let left_zero = (0..self.cols).all(|c| red.mat.get(r, c) == 0);
            if left_zero {
                let right: Vec<u64> = (0..self.rows)
                    .map(|c| red.mat.get(r, self.cols + c))
                    .collect();
                if right.iter().any(|&x| x != 0) {
                    rows.push(right);
                }
            }
        }
        Mat::from_rows(self.field, self.rows, &rows)
    }

    /// Basis of `{v : self * v = 0}` as the columns of the returned matrix.
    pub fn nullspace(&self) -> Mat {
        self.transpose().left_nullspace().transpose()
    }

    /// Solves `self * x = b` for a column vector `x`. Returns `Ok(None)` when
    /// `b` is outside the column space.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let bcol = Mat::new(self.field, self.rows, 1, b.to_vec());
        let aug = self.hstack(&bcol);
        let red = aug.rref();
        // A pivot in the b column means inconsistency.
        if red.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u64; self.cols];
        for (r, &pc) in red.pivots.iter().enumerate() {
            x[pc] = red.mat.get(r, self.cols);
        }
        Ok(Some(x))
    }

    /// Solves `x * self = b` for a row vector `x` (left division).
    pub fn solve_left(&self, b: &[u64]) -> Result<Option<Vec<u64>>, LinalgError> {
        self.transpose().solve(b)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let aug = self.hstack(&Mat::identity(self.field, self.rows));
        let red = aug.rref();
        if red.pivots.len() != self.rows || red.pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        let mut out = Mat::zeros(self.field, self.rows, self.rows);
        for r in 0..self.rows {
            for c in 0..self.rows {
                out.entries[r * self.rows + c] = red.mat.get(r, self.rows + c);
            }
        }
        Some(out)
    }
}

pub fn scale_vec(field: PrimeField, v: &[u64], s: u64) -> Vec<u64> {
    v.iter().map(|&a| field.mul(a, s)).collect()
}

pub fn add_vecs(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
}

pub fn sub_vecs(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| field.sub(x, y)).collect()
}
