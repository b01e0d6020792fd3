use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use super::RuleName;
use crate::semantics::Valuation;
use crate::syntax::{Atom, Formula, Sequent};

/// Why a leaf is closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClosureReason {
    /// A formula occurs on both sides.
    Overlap { formula: Formula },
    /// `#` on the left.
    FalsumLeft,
    /// `~#` on the right.
    NotFalsumRight,
    /// `p` and `~p` on the left; needs non-contradiction.
    Lnc { atom: Atom },
    /// `p` and `~p` on the right; needs excluded middle.
    Lem { atom: Atom },
}

impl fmt::Display for ClosureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureReason::Overlap { formula } => write!(f, "overlap on {formula}"),
            ClosureReason::FalsumLeft => f.write_str("# on the left"),
            ClosureReason::NotFalsumRight => f.write_str("~# on the right"),
            ClosureReason::Lnc { atom } => write!(f, "non-contradiction on {atom}"),
            ClosureReason::Lem { atom } => write!(f, "excluded middle on {atom}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Step {
    Closed {
        reason: ClosureReason,
    },
    Rule {
        rule: RuleName,
        principal: Formula,
        children: Vec<ProofNode>,
    },
}

/// A node of a closed proof tree. Children are the premises of the rule in
/// rule order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofNode {
    pub sequent: Sequent,
    #[serde(flatten)]
    pub step: Step,
}

impl ProofNode {
    pub fn leaves(&self) -> Vec<&ProofNode> {
        match &self.step {
            Step::Closed { .. } => vec![self],
            Step::Rule { children, .. } => children.iter().flat_map(|c| c.leaves()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        match &self.step {
            Step::Closed { .. } => 1,
            Step::Rule { children, .. } => 1 + children.iter().map(ProofNode::size).sum::<usize>(),
        }
    }

    /// One line per node, children indented by two spaces.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let indent = "  ".repeat(depth);
        match &self.step {
            Step::Closed { reason } => {
                let _ = writeln!(out, "{indent}{}    closed: {reason}", self.sequent);
            }
            Step::Rule {
                rule,
                principal,
                children,
            } => {
                let _ = writeln!(out, "{indent}{}    by {rule} on {principal}", self.sequent);
                for child in children {
                    child.render_into(out, depth + 1);
                }
            }
        }
    }
}

/// Outcome of proof search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ProofResult {
    Valid {
        proof: ProofNode,
    },
    Invalid {
        countermodel: Valuation,
        open_leaf: Sequent,
    },
}

impl ProofResult {
    pub fn is_valid(&self) -> bool {
        matches!(self, ProofResult::Valid { .. })
    }

    pub fn proof(&self) -> Option<&ProofNode> {
        match self {
            ProofResult::Valid { proof } => Some(proof),
            ProofResult::Invalid { .. } => None,
        }
    }

    pub fn countermodel(&self) -> Option<&Valuation> {
        match self {
            ProofResult::Valid { .. } => None,
            ProofResult::Invalid { countermodel, .. } => Some(countermodel),
        }
    }
}
