//! Finite-dimensional associative unital algebras given by structure
//! constants, together with the constructors used throughout the toolkit:
//! truncated polynomial rings, products, matrix algebras, and lower
//! triangular matrix algebras of arbitrary degree.

use std::fmt;
use std::sync::Arc;

use crate::field::PrimeField;
use crate::mat::Mat;
use crate::subspace::Subspace;

/// An associative unital `F_p`-algebra of dimension `d`, presented by the
/// coefficient vectors of all basis products `e_i * e_j`.
///
/// Values are immutable after construction; consumers share them through
/// `Arc`. Equality is structural (same field, same tables, the name is
/// ignored), which is what module-compatibility checks rely on.
#[derive(Clone)]
pub struct StructureAlgebra {
    field: PrimeField,
    dim: usize,
    /// `mult[i * dim + j]` is the coefficient vector of `e_i * e_j`.
    mult: Vec<Vec<u64>>,
    unit: Vec<u64>,
    name: String,
}

impl fmt::Debug for StructureAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "StructureAlgebra({}, dim {}, F_{})",
            self.name,
            self.dim,
            self.field.modulus()
        )
    }
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
    }
}

impl Eq for StructureAlgebra {}

/// A violated axiom found by [`StructureAlgebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `(e_i e_j) e_l != e_i (e_j e_l)`.
    Associativity { i: usize, j: usize, l: usize },
    /// `1 * e_i != e_i`.
    LeftUnit { i: usize },
    /// `e_i * 1 != e_i`.
    RightUnit { i: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Associativity { i, j, l } => {
                write!(f, "associativity fails at basis triple ({i}, {j}, {l})")
            }
            AxiomViolation::LeftUnit { i } => write!(f, "left unit axiom fails at basis index {i}"),
            AxiomViolation::RightUnit { i } => {
                write!(f, "right unit axiom fails at basis index {i}")
            }
        }
    }
}

impl StructureAlgebra {
    /// Builds an algebra from raw tables without validating the axioms; call
    /// [`validate`](Self::validate) to check them.
    pub fn from_tables(
        field: PrimeField,
        dim: usize,
        mult: Vec<Vec<u64>>,
        unit: Vec<u64>,
        name: impl Into<String>,
    ) -> Self {
        assert!(dim >= 1, "algebras here are unital, so dim >= 1");
        assert_eq!(mult.len(), dim * dim);
        assert!(mult.iter().all(|v| v.len() == dim));
        assert_eq!(unit.len(), dim);
        let p = field.modulus();
        let mult = mult
            .into_iter()
            .map(|v| v.into_iter().map(|c| c % p).collect())
            .collect();
        let unit = unit.into_iter().map(|c| c % p).collect();
        StructureAlgebra {
            field,
            dim,
            mult,
            unit,
            name: name.into(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        &self.mult[i * self.dim + j]
    }

    /// Product of arbitrary elements given by coefficient vectors.
    pub fn multiply(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let mut out = vec![0u64; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = self.field.mul(ai, bj);
                for (o, &m) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o = self.field.add(*o, self.field.mul(c, m));
                }
            }
        }
        out
    }

    /// Matrix of right multiplication by `a` (row convention: `x -> x * a`).
    pub fn right_mult_matrix(&self, a: &[u64]) -> Mat {
        let mut rows = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut e = vec![0u64; self.dim];
            e[i] = 1;
            rows.push(self.multiply(&e, a));
        }
        Mat::from_rows(self.field, self.dim, &rows)
    }

    /// Matrix of left multiplication by `a` (row convention: `x -> a * x`).
    pub fn left_mult_matrix(&self, a: &[u64]) -> Mat {
        let mut rows = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut e = vec![0u64; self.dim];
            e[i] = 1;
            rows.push(self.multiply(a, &e));
        }
        Mat::from_rows(self.field, self.dim, &rows)
    }

    /// Checks associativity on all basis triples and both unit axioms.
    /// Returns every violation found, in deterministic order.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let d = self.dim;
        for i in 0..d {
            let mut e = vec![0u64; d];
            e[i] = 1;
            if self.multiply(&self.unit, &e) != e {
                out.push(AxiomViolation::LeftUnit { i });
            }
            if self.multiply(&e, &self.unit) != e {
                out.push(AxiomViolation::RightUnit { i });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j).to_vec();
                for l in 0..d {
                    let mut el = vec![0u64; d];
                    el[l] = 1;
                    let left = self.multiply(&ij, &el);
                    let jl = self.basis_product(j, l).to_vec();
                    let mut ei = vec![0u64; d];
                    ei[i] = 1;
                    let right = self.multiply(&ei, &jl);
                    if left != right {
                        out.push(AxiomViolation::Associativity { i, j, l });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The opposite algebra: `mult_op(i, j) = mult(j, i)`.
    pub fn opposite(&self) -> StructureAlgebra {
        let d = self.dim;
        let mut mult = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mult.push(self.mult[j * d + i].clone());
            }
        }
        StructureAlgebra {
            field: self.field,
            dim: d,
            mult,
            unit: self.unit.clone(),
            name: format!("op({})", self.name),
        }
    }

    /// A small generating set of basis indices, found greedily: repeatedly
    /// adjoin the first basis vector outside the unital subalgebra generated
    /// so far. Intertwining systems only need constraints for these.
    pub fn generator_indices(&self) -> Vec<usize> {
        let d = self.dim;
        let mut gens = Vec::new();
        let mut span = Subspace::from_vectors(self.field, d, &[self.unit.clone()]);
        loop {
            // close the span under multiplication
            loop {
                let rows: Vec<Vec<u64>> = (0..span.dim())
                    .map(|r| span.basis().row(r).to_vec())
                    .collect();
                let mut grew = false;
                for a in &rows {
                    for b in &rows {
                        if span.insert(&self.multiply(a, b)) {
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            if span.is_full() {
                return gens;
            }
            let mut e = vec![0u64; d];
            let next = (0..d)
                .find(|&i| {
                    e.iter_mut().for_each(|x| *x = 0);
                    e[i] = 1;
                    !span.contains(&e)
                })
                .expect("span not full, so some basis vector is missing");
            let mut g = vec![0u64; d];
            g[next] = 1;
            span.insert(&g);
            gens.push(next);
        }
    }
}

/// The field `F_p` viewed as a one-dimensional algebra.
pub fn prime_field_algebra(p: u64) -> StructureAlgebra {
    let field = PrimeField::new(p).expect("prime modulus");
    StructureAlgebra::from_tables(field, 1, vec![vec![1]], vec![1], format!("F{p}"))
}

/// `F_p[x]/(x^n)` with basis `1, x, ..., x^(n-1)`.
pub fn truncated_polynomial(p: u64, n: usize) -> StructureAlgebra {
    assert!(n >= 1);
    let field = PrimeField::new(p).expect("prime modulus");
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut v = vec![0u64; n];
            if i + j < n {
                v[i + j] = 1;
            }
            mult.push(v);
        }
    }
    let mut unit = vec![0u64; n];
    unit[0] = 1;
    StructureAlgebra::from_tables(field, n, mult, unit, format!("F{p}[x]/(x^{n})"))
}

/// Direct product `A x B` with componentwise multiplication.
pub fn product(a: &StructureAlgebra, b: &StructureAlgebra) -> StructureAlgebra {
    assert_eq!(a.field, b.field, "product requires a common base field");
    let (da, db) = (a.dim, b.dim);
    let d = da + db;
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut v = vec![0u64; d];
            if i < da && j < da {
                v[..da].copy_from_slice(a.basis_product(i, j));
            } else if i >= da && j >= da {
                v[da..].copy_from_slice(b.basis_product(i - da, j - da));
            }
            mult.push(v);
        }
    }
    let mut unit = vec![0u64; d];
    unit[..da].copy_from_slice(&a.unit);
    unit[da..].copy_from_slice(&b.unit);
    StructureAlgebra::from_tables(a.field, d, mult, unit, format!("({} x {})", a.name, b.name))
}

/// The full matrix algebra `M_n(F_p)` on the basis `E_ij` in lexicographic
/// order of `(i, j)`; `E_ij E_kl = delta_jk E_il`.
pub fn matrix_algebra(p: u64, n: usize) -> StructureAlgebra {
    assert!(n >= 1);
    let field = PrimeField::new(p).expect("prime modulus");
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let mut mult = Vec::with_capacity(d * d);
    for a in 0..d {
        let (i, j) = (a / n, a % n);
        for b in 0..d {
            let (k, l) = (b / n, b % n);
            let mut v = vec![0u64; d];
            if j == k {
                v[idx(i, l)] = 1;
            }
            mult.push(v);
        }
    }
    let mut unit = vec![0u64; d];
    for i in 0..n {
        unit[idx(i, i)] = 1;
    }
    StructureAlgebra::from_tables(field, d, mult, unit, format!("M{n}(F{p})"))
}

/// The commutative local algebra `F_p<x,y>/(x,y)^2` with basis `1, x, y`;
/// its simple module has unbounded syzygy growth, which exercises the
/// censored-dimension paths.
pub fn local_rad_square_zero(p: u64) -> StructureAlgebra {
    let field = PrimeField::new(p).expect("prime modulus");
    let d = 3;
    let mut mult = vec![vec![0u64; d]; d * d];
    // basis 0 = 1, 1 = x, 2 = y; all products of x, y vanish
    for i in 0..d {
        mult[i] = {
            let mut v = vec![0u64; d];
            v[i] = 1;
            v
        }; // 1 * e_i
        mult[i * d] = {
            let mut v = vec![0u64; d];
            v[i] = 1;
            v
        }; // e_i * 1
    }
    StructureAlgebra::from_tables(field, d, mult, vec![1, 0, 0], format!("locrad2(F{p})"))
}

/// Path algebra of the quiver `1 -> 2`; isomorphic to the 2x2 lower
/// triangular matrix algebra.
pub fn path_algebra_a2(p: u64) -> StructureAlgebra {
    lower_triangular(&prime_field_algebra(p), 2).with_name(format!("pathA2(F{p})"))
}

/// Lower triangular matrix algebra `T_t(A)` of degree `t >= 1`.
///
/// Basis `E_ij (x) e_a` for `1 <= j <= i <= t` and `a < dim A`, ordered
/// lexicographically by `(i, j, a)` so serialized output is reproducible.
/// Multiplication: `(E_ij (x) a)(E_kl (x) b) = delta_jk E_il (x) ab`; the
/// unit is the sum of the diagonal idempotents.
pub fn lower_triangular(a: &StructureAlgebra, t: usize) -> StructureAlgebra {
    assert!(t >= 1);
    let da = a.dim;
    let cells: Vec<(usize, usize)> = (1..=t).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    let d = cells.len() * da;
    let cell_index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j)).unwrap();
    let slot = |i: usize, j: usize, x: usize| cell_index(i, j) * da + x;
    let mut mult = vec![vec![0u64; d]; d * d];
    for (c1, &(i, j)) in cells.iter().enumerate() {
        for x in 0..da {
            let b1 = c1 * da + x;
            for (c2, &(k, l)) in cells.iter().enumerate() {
                for y in 0..da {
                    let b2 = c2 * da + y;
                    if j != k {
                        continue;
                    }
                    let prod = a.basis_product(x, y);
                    let mut v = vec![0u64; d];
                    for (z, &c) in prod.iter().enumerate() {
                        if c != 0 {
                            v[slot(i, l, z)] = c;
                        }
                    }
                    mult[b1 * d + b2] = v;
                }
            }
        }
    }
    let mut unit = vec![0u64; d];
    for i in 1..=t {
        for (z, &c) in a.unit.iter().enumerate() {
            unit[slot(i, i, z)] = c;
        }
    }
    StructureAlgebra::from_tables(a.field, d, mult, unit, format!("T{t}({})", a.name))
}

pub type AlgebraRef = Arc<StructureAlgebra>;

/// Structural equality test used for module-compatibility checks; `Arc`
/// identity short-circuits the common case.
pub fn same_algebra(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
