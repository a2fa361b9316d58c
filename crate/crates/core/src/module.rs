//! Finite-dimensional right modules and their maps.
//!
//! A module is one action matrix per algebra basis element under the global
//! row-vector convention `v * e_i = v * Act_i`. Submodules and quotients are
//! derived from echelonized subspaces; homomorphism spaces are solved from
//! the intertwining equations restricted to a generating set of the algebra.

use std::sync::Arc;

use crate::algebra::{same_algebra, AlgebraRef};
use crate::field::PrimeField;
use crate::mat::Mat;
use crate::rng::SplitMix64;
use crate::subspace::{unit_vec, QuotientSpace, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleError {
    AlgebraMismatch,
    /// The module axioms fail (unit action or a structure-constant identity).
    InvalidAction {
        detail: String,
    },
}

impl std::fmt::Display for ModuleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModuleError::AlgebraMismatch => write!(f, "modules live over different algebras"),
            ModuleError::InvalidAction { detail } => write!(f, "module axioms fail: {detail}"),
        }
    }
}

impl std::error::Error for ModuleError {}

/// A right module over a [`StructureAlgebra`](crate::algebra::StructureAlgebra).
///
/// Cheap to clone: the action matrices sit behind an `Arc`.
#[derive(Clone)]
pub struct RightModule {
    algebra: AlgebraRef,
    mdim: usize,
    action: Arc<Vec<Mat>>,
}

impl std::fmt::Debug for RightModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RightModule(dim {} over {})",
            self.mdim,
            self.algebra.name()
        )
    }
}

impl PartialEq for RightModule {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.mdim == other.mdim
            && *self.action == *other.action
    }
}

impl RightModule {
    pub fn new(algebra: AlgebraRef, mdim: usize, action: Vec<Mat>) -> Self {
        assert_eq!(action.len(), algebra.dim());
        for a in &action {
            assert_eq!((a.rows(), a.cols()), (mdim, mdim));
        }
        RightModule {
            algebra,
            mdim,
            action: Arc::new(action),
        }
    }

    pub fn zero(algebra: AlgebraRef) -> Self {
        let d = algebra.dim();
        let field = algebra.field();
        RightModule {
            algebra,
            mdim: 0,
            action: Arc::new(vec![Mat::zeros(field, 0, 0); d]),
        }
    }

    /// The regular module `A_A`: `Act_i` is right multiplication by `e_i`.
    pub fn regular(algebra: AlgebraRef) -> Self {
        let d = algebra.dim();
        let mut action = Vec::with_capacity(d);
        for i in 0..d {
            let e = unit_vec(d, i);
            action.push(algebra.right_mult_matrix(&e));
        }
        RightModule {
            algebra,
            mdim: d,
            action: Arc::new(action),
        }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn is_zero(&self) -> bool {
        self.mdim == 0
    }

    pub fn act(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    /// Action matrix of the algebra element with coefficient vector `a`.
    pub fn act_by(&self, a: &[u64]) -> Mat {
        assert_eq!(a.len(), self.algebra.dim());
        let field = self.field();
        let mut out = Mat::zeros(field, self.mdim, self.mdim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    /// `v * a` for a row vector `v` and algebra element `a`.
    pub fn apply(&self, v: &[u64], a: &[u64]) -> Vec<u64> {
        let field = self.field();
        let mut out = vec![0u64; self.mdim];
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.action[i].apply_row(v);
            for (o, &x) in out.iter_mut().zip(&img) {
                *o = field.add(*o, field.mul(c, x));
            }
        }
        out
    }

    /// Checks the module axioms: the unit acts as the identity and the
    /// action respects every structure constant.
    pub fn validate(&self) -> Result<(), ModuleError> {
        let d = self.algebra.dim();
        if self.act_by(self.algebra.unit()) != Mat::identity(self.field(), self.mdim) {
            return Err(ModuleError::InvalidAction {
                detail: "unit does not act as identity".into(),
            });
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act_by(self.algebra.basis_product(i, j));
                if lhs != rhs {
                    return Err(ModuleError::InvalidAction {
                        detail: format!("action disagrees with e_{i} * e_{j}"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &RightModule) -> RightModule {
        assert!(same_algebra(&self.algebra, &other.algebra));
        let m = self.mdim + other.mdim;
        let field = self.field();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for i in 0..self.algebra.dim() {
            let mut block = Mat::zeros(field, m, m);
            for r in 0..self.mdim {
                for c in 0..self.mdim {
                    block.set(r, c, self.action[i].get(r, c));
                }
            }
            for r in 0..other.mdim {
                for c in 0..other.mdim {
                    block.set(self.mdim + r, self.mdim + c, other.action[i].get(r, c));
                }
            }
            action.push(block);
        }
        RightModule {
            algebra: self.algebra.clone(),
            mdim: m,
            action: Arc::new(action),
        }
    }

    /// The linear dual as a right module over the opposite algebra: the
    /// action of `e_i^op` is the transpose of `Act_i`. `op_algebra` must be
    /// structurally equal to `self.algebra().opposite()`.
    pub fn dual(&self, op_algebra: &AlgebraRef) -> RightModule {
        debug_assert_eq!(**op_algebra, self.algebra.opposite());
        let action = self.action.iter().map(|a| a.transpose()).collect();
        RightModule {
            algebra: op_algebra.clone(),
            mdim: self.mdim,
            action: Arc::new(action),
        }
    }

    /// Smallest submodule containing the given row vectors.
    pub fn spin(&self, seeds: &[Vec<u64>]) -> Subspace {
        let gens = self.algebra.generator_indices();
        let mut space = Subspace::zero(self.field(), self.mdim);
        let mut queue: Vec<Vec<u64>> = Vec::new();
        for s in seeds {
            if space.insert(s) {
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for &g in &gens {
                let img = self.action[g].apply_row(&v);
                if space.insert(&img) {
                    queue.push(img);
                }
            }
        }
        space
    }

    /// The annihilator ideal `{a : M * a = 0}`, as coefficient vectors.
    pub fn annihilator(&self) -> Vec<Vec<u64>> {
        let d = self.algebra.dim();
        let m2 = self.mdim * self.mdim;
        let mut big = Mat::zeros(self.field(), m2, d);
        for i in 0..d {
            for (k, &e) in self.action[i].entries().iter().enumerate() {
                big.set(k, i, e);
            }
        }
        let ns = big.nullspace();
        (0..ns.cols())
            .map(|c| (0..d).map(|r| ns.get(r, c)).collect())
            .collect()
    }
}

/// A homomorphism of right modules, stored as an `mdim(source) x
/// mdim(target)` matrix acting on row vectors.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: RightModule,
    pub target: RightModule,
    pub matrix: Mat,
}

impl ModuleMap {
    pub fn new(source: RightModule, target: RightModule, matrix: Mat) -> Self {
        assert!(same_algebra(source.algebra(), target.algebra()));
        assert_eq!(
            (matrix.rows(), matrix.cols()),
            (source.mdim(), target.mdim())
        );
        let map = ModuleMap {
            source,
            target,
            matrix,
        };
        debug_assert!(map.intertwines(), "matrix does not intertwine the actions");
        map
    }

    pub fn identity(m: &RightModule) -> Self {
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: Mat::identity(m.field(), m.mdim()),
        }
    }

    pub fn zero(source: &RightModule, target: &RightModule) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Mat::zeros(source.field(), source.mdim(), target.mdim()),
        }
    }

    pub fn intertwines(&self) -> bool {
        let gens = self.source.algebra().generator_indices();
        gens.iter()
            .all(|&g| self.source.act(g).mul(&self.matrix) == self.matrix.mul(self.target.act(g)))
    }

    pub fn compose(&self, then: &ModuleMap) -> ModuleMap {
        assert_eq!(self.target.mdim(), then.source.mdim());
        ModuleMap {
            source: self.source.clone(),
            target: then.target.clone(),
            matrix: self.matrix.mul(&then.matrix),
        }
    }

    pub fn kernel_space(&self) -> Subspace {
        Subspace::from_rows(&self.matrix.left_nullspace())
    }

    pub fn image_space(&self) -> Subspace {
        Subspace::from_rows(&self.matrix)
    }

    pub fn is_monic(&self) -> bool {
        self.matrix.rank() == self.source.mdim()
    }

    pub fn is_epic(&self) -> bool {
        self.matrix.rank() == self.target.mdim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.mdim() == self.target.mdim() && self.matrix.is_invertible()
    }
}

/// Restricts a module to an action-closed subspace, returning the abstract
/// submodule and its inclusion. Panics if the subspace is not closed.
pub fn submodule(m: &RightModule, space: &Subspace) -> (RightModule, ModuleMap) {
    assert_eq!(space.ambient(), m.mdim());
    let d = m.algebra().dim();
    let k = space.dim();
    let mut action = Vec::with_capacity(d);
    for i in 0..d {
        let imgs = space.basis().mul(m.act(i));
        for r in 0..k {
            assert!(space.contains(imgs.row(r)), "subspace is not action-closed");
        }
        action.push(space.coords_mat(&imgs));
    }
    let sub = RightModule::new(m.algebra().clone(), k, action);
    let incl = ModuleMap::new(sub.clone(), m.clone(), space.basis().clone());
    (sub, incl)
}

/// Quotient of a module by an action-closed subspace, with the projection.
pub fn quotient(m: &RightModule, space: &Subspace) -> (RightModule, ModuleMap) {
    assert_eq!(space.ambient(), m.mdim());
    let q = QuotientSpace::new(space);
    let d = m.algebra().dim();
    let mut action = Vec::with_capacity(d);
    for i in 0..d {
        action.push(q.lift.mul(m.act(i)).mul(&q.proj));
    }
    let quot = RightModule::new(m.algebra().clone(), q.dim, action);
    let proj = ModuleMap::new(m.clone(), quot.clone(), q.proj);
    (quot, proj)
}

/// Basis of `Hom_A(M, N)`, solved from the intertwining equations for a
/// generating set of the algebra. The equations are applied iteratively to a
/// shrinking solution space, so no `mn x mn` Kronecker system is formed.
pub fn hom_space(m: &RightModule, n: &RightModule) -> Result<Vec<Mat>, ModuleError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let field = m.field();
    let (md, nd) = (m.mdim(), n.mdim());
    if md == 0 || nd == 0 {
        return Ok(Vec::new());
    }
    let gens = m.algebra().generator_indices();
    // Current solution basis as vectorized matrices (row-major), one per row.
    let mut basis = Mat::identity(field, md * nd);
    for &g in &gens {
        if basis.rows() == 0 {
            break;
        }
        let am = m.act(g);
        let an = n.act(g);
        let mut defect_rows = Vec::with_capacity(basis.rows());
        for r in 0..basis.rows() {
            let h = Mat::new(field, md, nd, basis.row(r).to_vec());
            let defect = am.mul(&h).sub(&h.mul(an));
            defect_rows.push(defect.entries().to_vec());
        }
        let defect = Mat::from_rows(field, md * nd, &defect_rows);
        let null = defect.left_nullspace();
        basis = null.mul(&basis);
    }
    let echelon = Subspace::from_rows(&basis);
    let mats = (0..echelon.dim())
        .map(|r| Mat::new(field, md, nd, echelon.basis().row(r).to_vec()))
        .collect();
    Ok(mats)
}

/// Decides isomorphism by searching `Hom(M, N)` for an invertible element.
/// Small projectivized hom spaces are enumerated exhaustively; larger ones
/// are randomly sampled before giving up.
pub fn is_isomorphic(m: &RightModule, n: &RightModule) -> Result<bool, ModuleError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.mdim() != n.mdim() {
        return Ok(false);
    }
    if m.mdim() == 0 {
        return Ok(true);
    }
    let homs = hom_space(m, n)?;
    let h = homs.len();
    if h == 0 {
        return Ok(false);
    }
    let p = m.field().modulus();
    let field = m.field();
    // candidates in the projectivization: (p^h - 1)/(p - 1)
    let count = {
        let mut c: u128 = 0;
        let mut pw: u128 = 1;
        for _ in 0..h {
            c += pw;
            if c > 1 << 21 {
                break;
            }
            pw *= p as u128;
        }
        c
    };
    let combine = |coeffs: &[u64]| -> Mat {
        let mut acc = Mat::zeros(field, m.mdim(), n.mdim());
        for (c, hmat) in coeffs.iter().zip(&homs) {
            if *c != 0 {
                acc = acc.add(&hmat.scale(*c));
            }
        }
        acc
    };
    if count <= 1 << 20 {
        // enumerate coefficient vectors whose first nonzero entry is 1
        let mut coeffs = vec![0u64; h];
        for lead in 0..h {
            coeffs.iter_mut().for_each(|c| *c = 0);
            coeffs[lead] = 1;
            loop {
                if combine(&coeffs).is_invertible() {
                    return Ok(true);
                }
                // increment positions after `lead`
                let mut pos = h;
                for i in (lead + 1..h).rev() {
                    if coeffs[i] + 1 < p {
                        coeffs[i] += 1;
                        pos = i;
                        break;
                    }
                    coeffs[i] = 0;
                }
                if pos == h {
                    break;
                }
            }
        }
        Ok(false)
    } else {
        let mut rng = SplitMix64::new(0xA05);
        for _ in 0..4096 {
            let coeffs: Vec<u64> = (0..h).map(|_| rng.below(p)).collect();
            if combine(&coeffs).is_invertible() {
                return Ok(true);
            }
        }
        panic!(
            "isomorphism test inconclusive: hom space of dimension {h} over F_{p} \
             is too large to enumerate and sampling found no unit"
        );
    }
}

/// `M * J` as a subspace, for `J` given by algebra coefficient vectors.
pub fn radical_subspace(m: &RightModule, j_elements: &[Vec<u64>]) -> Subspace {
    let mut rows = Vec::new();
    for j in j_elements {
        let act = m.act_by(j);
        for r in 0..m.mdim() {
            rows.push(act.row(r).to_vec());
        }
    }
    Subspace::from_vectors(m.field(), m.mdim(), &rows)
}

/// `{v : v * J = 0}` as a subspace; over an Artinian algebra this is the
/// socle once `J` is the Jacobson radical.
pub fn socle_subspace(m: &RightModule, j_elements: &[Vec<u64>]) -> Subspace {
    let mut space = Subspace::full(m.field(), m.mdim());
    for j in j_elements {
        if space.is_zero() {
            break;
        }
        let act = m.act_by(j);
        let imgs = space.basis().mul(&act);
        let null = imgs.left_nullspace();
        let new_basis = null.mul(space.basis());
        space = Subspace::from_rows(&new_basis);
    }
    space
}

/// The socle as an abstract module with its inclusion.
pub fn socle(m: &RightModule, j_elements: &[Vec<u64>]) -> (RightModule, ModuleMap) {
    submodule(m, &socle_subspace(m, j_elements))
}

/// The top `M / MJ` as an abstract module with its projection.
pub fn top(m: &RightModule, j_elements: &[Vec<u64>]) -> (RightModule, ModuleMap) {
    quotient(m, &radical_subspace(m, j_elements))
}
