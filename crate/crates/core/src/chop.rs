//! Splitting modules into composition factors, simplicity certification, and
//! the Jacobson radical.
//!
//! The splitter follows the classical pattern: pick algebra elements (every
//! basis element first, then a bounded pool of seeded random elements), take
//! an irreducible factor `f` of the minimal polynomial of the action matrix,
//! and spin null vectors of `f(theta)`. When all null vectors generate and a
//! null vector of the transposed action generates the dual, and the nullity
//! equals `deg f`, the module is certified simple; a proper spin on either
//! side yields a proper submodule.

use crate::algebra::AlgebraRef;
use crate::module::{is_isomorphic, quotient, submodule, RightModule};
use crate::poly::{distinct_irreducible_factors, min_poly};
use crate::rng::SplitMix64;
use crate::subspace::Subspace;

const RANDOM_ELEMENT_DRAWS: usize = 64;

/// Searches for a proper nonzero submodule. `None` means simple: either
/// certified (the usual case) or, for pathological inputs, declared after
/// the candidate pool is exhausted.
pub fn find_proper_submodule(m: &RightModule, rng: &mut SplitMix64) -> Option<Subspace> {
    let mdim = m.mdim();
    if mdim <= 1 {
        return None;
    }
    let d = m.algebra().dim();
    let p = m.field().modulus();
    let mut candidates: Vec<Vec<u64>> = (0..d)
        .map(|i| {
            let mut v = vec![0u64; d];
            v[i] = 1;
            v
        })
        .collect();
    for _ in 0..RANDOM_ELEMENT_DRAWS {
        candidates.push((0..d).map(|_| rng.below(p)).collect());
    }
    for elt in &candidates {
        let theta = m.act_by(elt);
        let mp = min_poly(&theta);
        if mp.degree() < 1 {
            continue;
        }
        for f in distinct_irreducible_factors(&mp, rng) {
            let w = f.eval_mat(&theta);
            let null = w.left_nullspace();
            if null.rows() == 0 {
                continue;
            }
            for r in 0..null.rows() {
                let span = m.spin(&[null.row(r).to_vec()]);
                if span.dim() < mdim {
                    return Some(span);
                }
            }
            // Dual side: spin one null vector of the transposed action. A
            // square matrix has equal left and right nullity, so a vector
            // exists here.
            let conull = w.nullspace();
            debug_assert_eq!(conull.cols(), null.rows());
            let wvec: Vec<u64> = (0..mdim).map(|r| conull.get(r, 0)).collect();
            let dual_span = spin_transposed(m, &wvec);
            if dual_span.dim() < mdim {
                // The annihilator of a dual submodule is a submodule.
                let orth = Subspace::from_rows(&dual_span.basis().transpose().left_nullspace());
                debug_assert!(orth.dim() > 0 && orth.dim() < mdim);
                return Some(orth);
            }
            if null.rows() == f.degree() as usize {
                // Certified simple: every null vector generates, one dual
                // null vector generates the dual, and the nullity matches
                // the factor degree.
                return None;
            }
        }
    }
    None
}

/// Spin inside the dual module (transposed actions).
fn spin_transposed(m: &RightModule, seed: &[u64]) -> Subspace {
    let gens = m.algebra().generator_indices();
    let mut space = Subspace::zero(m.field(), m.mdim());
    let mut queue = Vec::new();
    if space.insert(seed) {
        queue.push(seed.to_vec());
    }
    while let Some(v) = queue.pop() {
        for &g in &gens {
            // action of the opposite algebra on the dual is Act^T
            let img = m.act(g).transpose().apply_row(&v);
            if space.insert(&img) {
                queue.push(img);
            }
        }
    }
    space
}

pub fn is_simple(m: &RightModule, seed: u64) -> bool {
    if m.mdim() == 0 {
        return false;
    }
    let mut rng = SplitMix64::new(seed);
    find_proper_submodule(m, &mut rng).is_none()
}

/// Composition factors with multiplicity (Jordan-Hoelder factors). The
/// multiset of isomorphism classes is independent of the seed.
pub fn chop(m: &RightModule, seed: u64) -> Vec<RightModule> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::new();
    chop_rec(m, &mut rng, &mut out);
    out.sort_by_key(|f| f.mdim());
    out
}

fn chop_rec(m: &RightModule, rng: &mut SplitMix64, out: &mut Vec<RightModule>) {
    if m.mdim() == 0 {
        return;
    }
    match find_proper_submodule(m, rng) {
        Some(space) => {
            let (sub, _) = submodule(m, &space);
            let (quot, _) = quotient(m, &space);
            chop_rec(&sub, rng, out);
            chop_rec(&quot, rng, out);
        }
        None => out.push(m.clone()),
    }
}

/// All simple right modules up to isomorphism, as composition factors of the
/// regular module, deduplicated.
pub fn simple_modules(algebra: &AlgebraRef, seed: u64) -> Vec<RightModule> {
    let reg = RightModule::regular(algebra.clone());
    let factors = chop(&reg, seed);
    let mut out: Vec<RightModule> = Vec::new();
    for f in factors {
        let mut known = false;
        for s in &out {
            if is_isomorphic(&f, s).expect("same algebra") {
                known = true;
                break;
            }
        }
        if !known {
            out.push(f);
        }
    }
    out
}

/// The Jacobson radical of the algebra.
#[derive(Clone, Debug)]
pub struct Radical {
    /// Echelon basis of `J` as a subspace of the algebra.
    pub space: Subspace,
    /// The same basis as coefficient vectors, for action computations.
    pub elements: Vec<Vec<u64>>,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// Computes `J(A)` as the intersection of the annihilators of all simple
/// right modules. Correct in any characteristic.
pub fn radical(algebra: &AlgebraRef, seed: u64) -> Radical {
    let d = algebra.dim();
    let field = algebra.field();
    let simples = simple_modules(algebra, seed);
    let mut space = Subspace::full(field, d);
    for s in &simples {
        let ann = s.annihilator();
        let ann_space = Subspace::from_vectors(field, d, &ann);
        space = space.intersect(&ann_space);
    }
    let elements = (0..space.dim())
        .map(|r| space.basis().row(r).to_vec())
        .collect();
    Radical { space, elements }
}
