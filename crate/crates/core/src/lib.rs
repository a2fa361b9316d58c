//! Exact computational homological algebra for finite-dimensional algebras
//! over prime fields.
//!
//! The crate computes minimal injective and projective resolutions, extended
//! homological dimensions, and the dimension profiles of lower triangular
//! matrix algebras, entirely in exact `F_p` arithmetic. On top of that it
//! decides the profile-bound conditions (`gnk`, `lnop`, dominant indices)
//! and verifies, per concrete algebra, the identities relating a base
//! algebra's profile to those of its triangular extensions.
//!
//! Layering, bottom up:
//! - [`field`], [`mat`], [`subspace`], [`poly`]: exact linear algebra and
//!   polynomial factorization over `F_p` (with bit-packed `F_2` kernels in
//!   [`f2`]);
//! - [`algebra`], [`bimodule`]: structure-constant algebras and the
//!   triangular matrix ring constructions;
//! - [`module`], [`chop`]: right modules, homomorphism spaces, composition
//!   factors, the radical;
//! - [`homology`]: envelopes, covers, minimal resolutions, Ext, projective
//!   dimension, and the dimension profile with its two independent routes;
//! - [`triple`]: the `(X, Y)_f` description of modules over a triangular
//!   algebra and the constructive flat resolutions;
//! - [`check`], [`corpus`], [`textio`]: condition reports, theorem
//!   verification, the built-in corpus, and the file formats.
//!
//! The `auslab` binary exposes all of this on the command line; the
//! `pyauslab` crate exports the main types to Python.

pub mod algebra;
pub mod bimodule;
pub mod check;
pub mod chop;
pub mod corpus;
pub mod extdim;
pub mod f2;
pub mod field;
pub mod homology;
pub mod mat;
pub mod module;
pub mod poly;
pub mod rng;
pub mod subspace;
pub mod textio;
pub mod triple;

pub use algebra::{
    local_rad_square_zero, lower_triangular, matrix_algebra, path_algebra_a2, prime_field_algebra,
    product, truncated_polynomial, AlgebraRef, AxiomViolation, StructureAlgebra,
};
pub use bimodule::{tensor_over, triangular_from_bimodule, BimoduleData, TriangularData};
pub use extdim::ExtDim;
pub use field::{LinalgError, PrimeField};
pub use homology::{AnalysisSession, MinResolution, RfdProfile};
pub use mat::{Mat, Rref};
pub use module::{ModuleMap, RightModule};
pub use rng::{SplitMix64, DEFAULT_SEED};
pub use subspace::{QuotientSpace, Subspace};
