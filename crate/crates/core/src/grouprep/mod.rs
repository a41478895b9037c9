//! Finite groups, character tables, virtual characters, restriction along
//! inclusions, and fixed-point-free unitary representations.
//!
//! Groups are small (order at most 64), so everything is stored explicitly
//! and checked by brute force.

mod free_rep;
mod group;
mod inclusion;
pub mod json;
mod table;
mod virtual_char;

use thiserror::Error;

pub use free_rep::{cyclic_free_rep, cyclic_free_rep_on, quaternion_free_rep, quaternion_free_rep_on, FreeUnitaryRep};
pub use group::{ConjugacyClass, FiniteGroup, GroupTag, MAX_CYCLIC_ORDER};
pub use inclusion::{restrict_virtual, Inclusion};
pub use table::CharacterTable;
pub use virtual_char::{frobenius_schur, VirtualCharacter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("unsupported group {0:?}")]
    UnsupportedGroup(String),
    #[error("cannot evaluate group word {0:?}")]
    BadWord(String),
    #[error("unknown character {0:?}")]
    UnknownCharacter(String),
    #[error("not a subgroup map: {0}")]
    NotASubgroupMap(String),
    #[error("character is not irreducible")]
    NotIrreducible,
    #[error("class function is not an integer combination of irreducibles")]
    NotVirtualCharacter,
    #[error("representation is not fixed-point free: {0}")]
    NotFree(String),
    #[error("weight tuple has odd length {0}")]
    OddLength(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error at {position}: {message}")]
    ParseExpr { position: usize, message: String },
    #[error("invalid table (row {row:?}, class {class:?}): {message}")]
    TableValidation { row: Option<usize>, class: Option<usize>, message: String },
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// Shorthand for a builtin character table behind an `Arc`.
pub fn builtin_table(tag: GroupTag) -> Result<std::sync::Arc<CharacterTable>, GroupError> {
    CharacterTable::builtin(tag).map(std::sync::Arc::new)
}
