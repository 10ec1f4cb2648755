//! Exact homological algebra over finite-dimensional bound quiver algebras
//! `kQ/I` with `k = F_p`.
//!
//! Modules are quiver representations; paths compose left to right and the
//! indecomposable projective `P(v)` is spanned by the residue paths starting
//! at `v`. Modules over the opposite algebra stand in for right modules.

pub mod algebra;
pub mod error;
pub mod field;
pub mod format;
pub mod homology;
pub mod matrix;
pub mod nakayama;
pub mod quiver;
pub mod rep;

pub use algebra::{BoundQuiverAlgebra, BuildOptions, Element};
pub use error::{AlgebraError, FormatError, HomologyError, ParseError, RepError};
pub use field::Fp;
pub use matrix::Matrix;
pub use quiver::{Path, PathElement, Quiver};
pub use rep::{hom_dim, hom_space, is_isomorphic, IsoWitness, Isomorphism, Morphism, Representation, Side};
