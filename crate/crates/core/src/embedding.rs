//! Translation of BDL into CL: push negations down to the atoms, then read
//! each negated atom `~p` as a fresh atom `p_neg`.
//!
//! The translated sequent is CL-valid exactly when the source is BDL-valid.
//! Atom names ending in [`NEGATED_SUFFIX`] are reserved for the
//! translation; inputs that use one are rejected.

use std::fmt;

use thiserror::Error;

use crate::syntax::{Atom, Formula, Sequent};

/// Suffix marking the fresh atom that stands for a negated atom.
pub const NEGATED_SUFFIX: &str = "_neg";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("atom `{0}` uses the reserved suffix `{NEGATED_SUFFIX}`")]
    ReservedName(Atom),
    #[error("formula `{0}` is not in negation normal form")]
    NotNnf(Formula),
}

/// A formula in which `~` only applies to atoms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NnfFormula(Formula);

impl NnfFormula {
    pub fn as_formula(&self) -> &Formula {
        &self.0
    }

    pub fn into_formula(self) -> Formula {
        self.0
    }
}

impl TryFrom<Formula> for NnfFormula {
    type Error = EmbedError;

    fn try_from(f: Formula) -> Result<NnfFormula, EmbedError> {
        if is_nnf(&f) {
            Ok(NnfFormula(f))
        } else {
            Err(EmbedError::NotNnf(f))
        }
    }
}

impl fmt::Display for NnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for NnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_nnf(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) | Formula::Falsum => true,
        Formula::Not(a) => matches!(**a, Formula::Atom(_)),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => is_nnf(a) && is_nnf(b),
    }
}

/// Negation normal form by the rewrites `~~A => A`, `~(A & B) => ~A | ~B`,
/// `~(A | B) => ~A & ~B`, `~(A -> B) => A & ~B` and `~# => # -> #`.
///
/// The result is designated under exactly the same valuations as `f` in
/// every logic, though its value may differ.
pub fn nnf(f: &Formula) -> NnfFormula {
    NnfFormula(positive(f))
}

fn positive(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Falsum => f.clone(),
        Formula::Not(a) => negative(a),
        Formula::And(a, b) => Formula::and(positive(a), positive(b)),
        Formula::Or(a, b) => Formula::or(positive(a), positive(b)),
        Formula::Implies(a, b) => Formula::implies(positive(a), positive(b)),
    }
}

/// NNF of `~f`.
fn negative(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => Formula::not(f.clone()),
        Formula::Falsum => Formula::verum(),
        Formula::Not(a) => positive(a),
        Formula::And(a, b) => Formula::or(negative(a), negative(b)),
        Formula::Or(a, b) => Formula::and(negative(a), negative(b)),
        Formula::Implies(a, b) => Formula::and(positive(a), negative(b)),
    }
}

/// Name of the fresh atom standing for `~p`.
pub fn negated_atom(p: &Atom) -> Atom {
    Atom::new(&format!("{}{NEGATED_SUFFIX}", p.name())).expect("suffix keeps the lexical class")
}

fn check_names<'a>(atoms: impl IntoIterator<Item = &'a Atom>) -> Result<(), EmbedError> {
    for p in atoms {
        if p.name().ends_with(NEGATED_SUFFIX) {
            return Err(EmbedError::ReservedName(p.clone()));
        }
    }
    Ok(())
}

/// Replaces every `~p` by the fresh atom `p_neg`; the result has no `~`.
pub fn rename_literals(f: &NnfFormula) -> Result<Formula, EmbedError> {
    check_names(&f.0.atoms())?;
    Ok(rename(&f.0))
}

fn rename(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Falsum => f.clone(),
        Formula::Not(a) => match &**a {
            Formula::Atom(p) => Formula::Atom(negated_atom(p)),
            _ => unreachable!("input is in negation normal form"),
        },
        Formula::And(a, b) => Formula::and(rename(a), rename(b)),
        Formula::Or(a, b) => Formula::or(rename(a), rename(b)),
        Formula::Implies(a, b) => Formula::implies(rename(a), rename(b)),
    }
}

/// Translates both sides of `s` formula by formula.
pub fn embed_sequent(s: &Sequent) -> Result<Sequent, EmbedError> {
    check_names(&s.atoms())?;
    Ok(s.map(embed_formula_unchecked))
}

/// `rename_literals(nnf(f))`.
pub fn embed_formula(f: &Formula) -> Result<Formula, EmbedError> {
    check_names(&f.atoms())?;
    Ok(embed_formula_unchecked(f))
}

fn embed_formula_unchecked(f: &Formula) -> Formula {
    rename(&positive(f))
}
