//! Formula language: construction, concrete syntax, substitution and
//! bounded enumeration.

mod enumerate;
mod formula;
mod parse;
mod print;
mod sequent;
mod set;
mod substitution;
mod tree;

use thiserror::Error;

pub use enumerate::{
    enumerate_formulas, enumerate_formulas_capped, enumerate_sequents, enumerate_sequents_capped,
    formula_count, sequent_at, side_count, FormulaStream, SequentIndices, SequentStream, Subsets,
    DEFAULT_ENUMERATION_CAP,
};
pub use formula::{Atom, Binary, Formula};
pub use parse::{parse_formula, parse_sequent};
pub use print::print_formula;
pub use sequent::{atoms_of, AtomsOf, Sequent};
pub use set::FormulaSet;
pub use substitution::{substitute, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown token `{text}` at byte {offset}")]
    UnknownToken { offset: usize, text: String },
    #[error("syntax error at byte {offset}: found {found}, expected {}", .expected.join(" or "))]
    Unexpected {
        offset: usize,
        found: String,
        expected: Vec<&'static str>,
    },
    #[error("missing `|-` separator in sequent")]
    MissingTurnstile,
    #[error("`{name}` is not a valid atom name (expected [a-z][a-z0-9_]*)")]
    InvalidAtom { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration needs at least one atom")]
    NoAtoms,
    #[error("enumeration would produce {count} items, above the cap of {cap}")]
    TooLarge { count: u128, cap: u128 },
}
