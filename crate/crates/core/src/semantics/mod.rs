//! Many-valued matrix semantics for CL, LP, K3 and BDL, and the
//! brute-force consequence oracle built on it.
//!
//! All four matrices are restrictions of one table on Belnap's four values;
//! correctness statements in this crate are phrased in terms of designation,
//! never of equality of values.

mod consequence;
mod logic;
mod matrix;
mod table;
mod valuation;
mod value;

use thiserror::Error;

use crate::syntax::Atom;

pub use consequence::{
    countermodel, countermodel_capped, eval, matrix_consequence, matrix_consequence_capped,
    refutes, DesignationMasks, DEFAULT_ATOM_CAP,
};
pub use logic::LogicId;
pub use matrix::{logic_matrix, Matrix};
pub use table::{truth_table, truth_table_capped, TableRow, TruthTable};
pub use valuation::{Valuation, Valuations};
pub use value::TruthValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("valuation does not assign atom `{0}`")]
    MissingAtom(Atom),
    #[error("{count} atoms exceed the cap of {cap} for exhaustive valuation")]
    TooManyAtoms { count: usize, cap: usize },
}
