//! Graded-commutative algebras over F2 given by generators and homogeneous
//! relations: normal forms, graded bases, homomorphisms and their duals,
//! Steenrod squares, Wu and Stiefel–Whitney classes.
//!
//! In characteristic two graded commutativity is plain commutativity, so
//! normal forms come from a commutative Gröbner basis. The term order is
//! weighted degree, then lexicographic in a per-algebra generator precedence.

mod algebra;
pub mod builtin;
mod groebner;
pub mod json;
pub mod linalg;
mod poly;
mod steenrod;

use thiserror::Error;

pub use algebra::{AlgebraSpec, GeneratorSpec, PoincareSpec, PresentedF2Algebra, DEFAULT_DEGREE_BOUND, DEFAULT_ORACLE_DEGREE};
pub use hom::GradedHom;
pub use poly::{F2Element, Monomial};
pub use steenrod::{solve_unknown_squares, SteenrodData};

mod hom;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F2Error {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("relation {0} is not homogeneous")]
    InhomogeneousRelation(usize),
    #[error("presentation does not complete: {0}")]
    NonConfluentPresentation(String),
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },
    #[error("Poincaré structure rejected: {0}")]
    Poincare(String),
    #[error("algebra has no Poincaré structure")]
    NoPoincareStructure,
    #[error("invalid homomorphism: {0}")]
    Hom(String),
    #[error("algebras do not match")]
    AlgebraMismatch,
    #[error("inconsistent Steenrod data: {0}")]
    InconsistentSteenrodData(String),
    #[error("missing Sq^{i}({generator})")]
    MissingSteenrodValue { generator: String, i: u32 },
    #[error("pairing is degenerate in degree {degree}")]
    DegeneratePairing { degree: u32 },
    #[error("unknown builtin algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// Parity of a binomial coefficient by Lucas' theorem: `C(n, k)` is odd iff
/// every binary digit of `k` is at most the corresponding digit of `n`.
pub fn binomial_is_odd(n: u64, k: u64) -> bool {
    k <= n && n & k == k
}
