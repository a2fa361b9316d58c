//! Subspaces of `F_p^n` kept in reduced row echelon form.
//!
//! A `Subspace` owns an RREF basis, which makes membership, coordinates and
//! quotient constructions cheap pivot lookups. Sums, intersections and
//! complements are the workhorses behind submodule and quotient-module
//! construction.

use crate::field::{LinalgError, PrimeField};
use crate::mat::Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    /// RREF basis, one vector per row; no zero rows.
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Mat) -> Self {
        let red = m.rref();
        let rank = red.rank();
        let mut rows = Vec::with_capacity(rank);
        for r in 0..rank {
            rows.push(red.mat.row(r).to_vec());
        }
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis: Mat::from_rows(m.field(), m.cols(), &rows),
            pivots: red.pivots,
        }
    }

    pub fn from_vectors(field: PrimeField, ambient: usize, vecs: &[Vec<u64>]) -> Self {
        Subspace::from_rows(&Mat::from_rows(field, ambient, vecs))
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// `v` minus its projection onto the span; zero iff `v` is a member.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c != 0 {
                let row = self.basis.row(r);
                for (wj, &bj) in w.iter_mut().zip(row) {
                    *wj = self.field.sub(*wj, self.field.mul(c, bj));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Coordinates for a batch of member rows, as a `rows x dim` matrix.
    /// Panics if any row is outside the span.
    pub fn coords_mat(&self, m: &Mat) -> Mat {
        let mut out = Mat::zeros(self.field, m.rows(), self.dim());
        for r in 0..m.rows() {
            let row = m.row(r);
            debug_assert!(self.contains(row), "row outside subspace in coords_mat");
            for (j, &pc) in self.pivots.iter().enumerate() {
                out.set(r, j, row[pc]);
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_rows(&self.basis.vstack(&other.basis))
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let zero_block = Mat::zeros(self.field, other.dim(), n);
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&zero_block);
        let red = top.vstack(&bottom).rref();
        let mut inter_rows = Vec::new();
        for r in 0..red.rank() {
            let row = red.mat.row(r);
            if row[..n].iter().all(|&x| x == 0) {
                let right = row[n..].to_vec();
                if right.iter().any(|&x| x != 0) {
                    inter_rows.push(right);
                }
            }
        }
        Subspace::from_vectors(self.field, n, &inter_rows)
    }

    /// Basis vectors extending `self`'s echelon basis to `larger`'s, i.e. a
    /// complement of `self` inside `larger`. Errors unless `self ⊆ larger`.
    pub fn complement_in(&self, larger: &Subspace) -> Result<Vec<Vec<u64>>, LinalgError> {
        if !larger.contains_space(self) {
            return Err(LinalgError::NotASubspacePair);
        }
        let mut acc = self.clone();
        let mut ext = Vec::new();
        for r in 0..larger.dim() {
            let reduced = acc.reduce(larger.basis.row(r));
            if reduced.iter().any(|&x| x != 0) {
                acc.insert(&reduced);
                ext.push(reduced);
            }
        }
        debug_assert_eq!(acc.dim(), larger.dim());
        Ok(ext)
    }

    /// Adds one vector to the span incrementally, returning whether the
    /// dimension grew. Keeps the basis in RREF without a full re-reduction.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut reduced = self.reduce(v);
        let Some(pivot) = reduced.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(reduced[pivot]).expect("nonzero pivot");
        if inv != 1 {
            for x in reduced.iter_mut() {
                *x = self.field.mul(*x, inv);
            }
        }
        let mut rows: Vec<Vec<u64>> = (0..self.dim())
            .map(|r| self.basis.row(r).to_vec())
            .collect();
        for row in rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for (rj, &nj) in row.iter_mut().zip(&reduced) {
                    *rj = self.field.sub(*rj, self.field.mul(c, nj));
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        rows.insert(pos, reduced);
        self.pivots.insert(pos, pivot);
        self.basis = Mat::from_rows(self.field, self.ambient, &rows);
        true
    }
}

/// The quotient `F_p^n / W` with explicit projection and section matrices.
///
/// `proj` is `n x q` (row vectors map by `v * proj`); `lift` is `q x n` with
/// `lift * proj = id`, sending quotient coordinates to the representatives at
/// the non-pivot columns of `W`.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    pub dim: usize,
    pub proj: Mat,
    pub lift: Mat,
}

impl QuotientSpace {
    pub fn new(w: &Subspace) -> Self {
        let n = w.ambient();
        let field = w.field();
        let pivset: Vec<bool> = {
            let mut v = vec![false; n];
            for &p in w.pivots() {
                v[p] = true;
            }
            v
        };
        let nonpivots: Vec<usize> = (0..n).filter(|&c| !pivset[c]).collect();
        let q = nonpivots.len();
        let mut proj = Mat::zeros(field, n, q);
        for c in 0..n {
            let reduced = w.reduce(&unit_vec(n, c));
            for (j, &np) in nonpivots.iter().enumerate() {
                proj.set(c, j, reduced[np]);
            }
        }
        let mut lift = Mat::zeros(field, q, n);
        for (j, &np) in nonpivots.iter().enumerate() {
            lift.set(j, np, 1);
        }
        QuotientSpace { dim: q, proj, lift }
    }
}

pub fn unit_vec(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    v[i] = 1;
    v
}
