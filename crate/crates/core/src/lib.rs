//! Classical logic, LP, K3 and Belnap-Dunn logic with implication and
//! falsum (BDL), decided two ways: by brute force over their logical
//! matrices and by a terminating invertible sequent calculus.
//!
//! ```
//! use paradef::{parse_sequent, prove, LogicId};
//!
//! let explosion = parse_sequent("p, ~p |- q").unwrap();
//! assert!(prove(LogicId::Cl, &explosion).is_valid());
//! let r = prove(LogicId::Bdl, &explosion);
//! assert_eq!(r.countermodel().unwrap().to_string(), "p=b, q=n");
//! ```

pub mod embedding;
pub mod prover;
pub mod selftest;
pub mod semantics;
pub mod syntax;

pub use embedding::{embed_sequent, nnf, rename_literals, EmbedError, NnfFormula};
pub use prover::{
    classify, closure, prove, prove_cl_general, ClosureReason, ProofNode, ProofResult, Prover,
    ProverError,
};
pub use semantics::{
    countermodel, eval, logic_matrix, matrix_consequence, truth_table, LogicId, Matrix,
    SemanticsError, TruthValue, Valuation,
};
pub use syntax::{
    atoms_of, enumerate_formulas, parse_formula, parse_sequent, print_formula, substitute, Atom,
    EnumerationError, Formula, ParseError, Sequent, Substitution,
};
