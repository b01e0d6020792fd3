//! Terminating backward proof search.
//!
//! All four logics share one set of invertible two-sided rules (one pair
//! per connective and per negated connective, plus two inert removals).
//! They differ only in the closure conditions at atomic leaves: CL and K3
//! close `p, ~p` on the left, CL and LP close `p, ~p` on the right.
//! Because every rule is invertible, an open leaf yields a countermodel for
//! the root.

mod proof;
mod rules;
mod search;

use thiserror::Error;

use crate::syntax::Formula;

pub use proof::{ClosureReason, ProofNode, ProofResult, Step};
pub use rules::{
    general_rule_set, matching_rule, rank, rule_set, sequent_rank, Premise, Rule, RuleName,
    RuleSystem, Side,
};
pub use search::{classify, closure, prove, prove_cl_general, Prover, Selection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("sequent is not atomic: `{0}` can still be reduced")]
    NonAtomic(Formula),
}
