//! Verification harness: algebra generators, theorem sweeps over Nakayama
//! algebras, a seeded fuzzer and JSON reports.

pub mod checks;
pub mod cli;
pub mod fuzz;
pub mod generators;
pub mod report;

use gorenstein_core::homology::DEFAULT_BOUND;
use gorenstein_core::{AlgebraError, FormatError, HomologyError, RepError};
use thiserror::Error;

pub use checks::{
    gpc_check, projectivity_equivalence_check, self_orthogonal_closure_check, symmetry_check,
    verify_cyclic_simples,
};
pub use fuzz::{fuzz, FuzzAlgebra};
pub use generators::cyclic_radical_square_zero;
pub use report::{Status, VerificationReport};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("fuzz generation failed after {0} attempts")]
    GenerationExhausted(usize),
}

impl HarnessError {
    /// 2 for undecided isomorphism tests, 3 for everything caused by input.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Homology(HomologyError::UndeterminedIsomorphism { .. }) => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub bound: usize,
    /// Include isomorphism witnesses in reports.
    pub verbose: bool,
    /// Record per-phase wall-clock time.
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            bound: DEFAULT_BOUND,
            verbose: false,
            timing: false,
        }
    }
}
