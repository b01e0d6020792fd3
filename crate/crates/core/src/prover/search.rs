use std::collections::BTreeMap;

use super::proof::{ClosureReason, ProofNode, ProofResult, Step};
use super::rules::{Expansion, Rule, RuleName, RuleSystem, Side};
use super::ProverError;
use crate::semantics::{LogicId, TruthValue, Valuation};
use crate::syntax::{Formula, FormulaSet, Sequent};

/// How the principal formula is picked when several are reducible.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Selection {
    /// First reducible formula of the left side in canonical order, else the
    /// first of the right side.
    #[default]
    Leftmost,
    /// Last reducible formula of the right side, else the last of the left.
    Rightmost,
}

/// Backward proof search with a fixed rule system and closure flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prover {
    system: RuleSystem,
    lnc: bool,
    lem: bool,
    selection: Selection,
}

/// The rule reducing `f` on `side`, if `f` is not a leaf formula there.
fn reduction(system: RuleSystem, side: Side, f: &Formula) -> Option<RuleName> {
    use Formula::*;
    use Side::*;
    Some(match (side, f) {
        (_, Atom(_)) => return None,
        (Left, Falsum) => return None,
        (Right, Falsum) => RuleName::FalsumR,
        (Left, And(..)) => RuleName::AndL,
        (Right, And(..)) => RuleName::AndR,
        (Left, Or(..)) => RuleName::OrL,
        (Right, Or(..)) => RuleName::OrR,
        (Left, Implies(..)) => RuleName::ImpL,
        (Right, Implies(..)) => RuleName::ImpR,
        (Left, Not(_)) if system == RuleSystem::GeneralNegation => RuleName::NotL,
        (Right, Not(_)) if system == RuleSystem::GeneralNegation => RuleName::NotR,
        (side, Not(inner)) => match (side, &**inner) {
            (_, Atom(_)) => return None,
            (Left, Falsum) => RuleName::NotFalsumL,
            (Right, Falsum) => return None,
            (Left, Not(_)) => RuleName::NotNotL,
            (Right, Not(_)) => RuleName::NotNotR,
            (Left, And(..)) => RuleName::NotAndL,
            (Right, And(..)) => RuleName::NotAndR,
            (Left, Or(..)) => RuleName::NotOrL,
            (Right, Or(..)) => RuleName::NotOrR,
            (Left, Implies(..)) => RuleName::NotImpL,
            (Right, Implies(..)) => RuleName::NotImpR,
        },
    })
}

/// Closure conditions of an atomic sequent, in precedence order: overlap,
/// `#` left, `~#` right, non-contradiction (if `lnc`), excluded middle (if
/// `lem`).
fn closure_reason(s: &Sequent, lnc: bool, lem: bool) -> Option<ClosureReason> {
    if let Some(f) = s.left().iter().find(|f| s.right().contains(f)) {
        return Some(ClosureReason::Overlap { formula: f.clone() });
    }
    if s.left().contains(&Formula::Falsum) {
        return Some(ClosureReason::FalsumLeft);
    }
    if s.right()
        .iter()
        .any(|f| matches!(f, Formula::Not(inner) if **inner == Formula::Falsum))
    {
        return Some(ClosureReason::NotFalsumRight);
    }
    let clash = |side: &FormulaSet| {
        side.iter().find_map(|f| match f {
            Formula::Not(inner) => match &**inner {
                Formula::Atom(p) if side.contains(inner) => Some(p.clone()),
                _ => None,
            },
            _ => None,
        })
    };
    if lnc {
        if let Some(atom) = clash(s.left()) {
            return Some(ClosureReason::Lnc { atom });
        }
    }
    if lem {
        if let Some(atom) = clash(s.right()) {
            return Some(ClosureReason::Lem { atom });
        }
    }
    None
}

/// Closure check for an atomic sequent under `id`.
///
/// Fails if some formula of `s` can still be reduced by the rules.
pub fn closure(id: LogicId, s: &Sequent) -> Result<Option<ClosureReason>, ProverError> {
    let reducible = s
        .left()
        .iter()
        .map(|f| (Side::Left, f))
        .chain(s.right().iter().map(|f| (Side::Right, f)))
        .find(|(side, f)| reduction(RuleSystem::Specific, *side, f).is_some());
    if let Some((_, f)) = reducible {
        return Err(ProverError::NonAtomic(f.clone()));
    }
    Ok(closure_reason(s, id.lnc(), id.lem()))
}

impl Prover {
    pub fn for_logic(id: LogicId) -> Prover {
        Prover {
            system: RuleSystem::Specific,
            lnc: id.lnc(),
            lem: id.lem(),
            selection: Selection::Leftmost,
        }
    }

    /// Classical prover whose only negation rules are `L~` and `R~`.
    pub fn classical_general() -> Prover {
        Prover {
            system: RuleSystem::GeneralNegation,
            lnc: false,
            lem: false,
            selection: Selection::Leftmost,
        }
    }

    pub fn without_lnc(mut self) -> Prover {
        self.lnc = false;
        self
    }

    pub fn without_lem(mut self) -> Prover {
        self.lem = false;
        self
    }

    pub fn with_selection(mut self, selection: Selection) -> Prover {
        self.selection = selection;
        self
    }

    pub fn system(&self) -> RuleSystem {
        self.system
    }

    /// The logic whose consequence relation this prover decides.
    pub fn logic(&self) -> LogicId {
        match self.system {
            RuleSystem::Specific => LogicId::from_flags(self.lnc, self.lem),
            RuleSystem::GeneralNegation => LogicId::Cl,
        }
    }

    fn principal<'a>(&self, s: &'a Sequent) -> Option<(Side, &'a Formula, RuleName)> {
        let pick =
            |side: Side, f: &'a Formula| reduction(self.system, side, f).map(|r| (side, f, r));
        match self.selection {
            Selection::Leftmost => s
                .left()
                .iter()
                .find_map(|f| pick(Side::Left, f))
                .or_else(|| s.right().iter().find_map(|f| pick(Side::Right, f))),
            Selection::Rightmost => s
                .right()
                .iter()
                .rev()
                .find_map(|f| pick(Side::Right, f))
                .or_else(|| s.left().iter().rev().find_map(|f| pick(Side::Left, f))),
        }
    }

    fn search(&self, s: Sequent) -> Result<ProofNode, Sequent> {
        let Some((side, principal, name)) = self.principal(&s) else {
            let (lnc, lem) = self.closure_flags();
            return match closure_reason(&s, lnc, lem) {
                Some(reason) => Ok(ProofNode {
                    sequent: s,
                    step: Step::Closed { reason },
                }),
                None => Err(s),
            };
        };
        let principal = principal.clone();
        let rule = Rule { name, side };
        let children = match rule
            .expand(&principal, s.clone())
            .expect("selected rule matches its principal formula")
        {
            Expansion::One(p) => vec![self.search(p)?],
            Expansion::Two(a, b) => vec![self.search(a)?, self.search(b)?],
        };
        Ok(ProofNode {
            sequent: s,
            step: Step::Rule {
                rule: name,
                principal,
                children,
            },
        })
    }

    fn closure_flags(&self) -> (bool, bool) {
        match self.system {
            RuleSystem::Specific => (self.lnc, self.lem),
            RuleSystem::GeneralNegation => (false, false),
        }
    }

    fn decide(&self, s: Sequent) -> bool {
        let Some((side, principal, name)) = self.principal(&s) else {
            let (lnc, lem) = self.closure_flags();
            return closure_reason(&s, lnc, lem).is_some();
        };
        let principal = principal.clone();
        let rule = Rule { name, side };
        match rule
            .expand(&principal, s)
            .expect("selected rule matches its principal formula")
        {
            Expansion::One(p) => self.decide(p),
            Expansion::Two(a, b) => self.decide(a) && self.decide(b),
        }
    }

    /// Decides `s`, returning a closed proof tree or a countermodel read
    /// off the first open leaf.
    pub fn prove(&self, s: &Sequent) -> ProofResult {
        match self.search(s.clone()) {
            Ok(proof) => ProofResult::Valid { proof },
            Err(open_leaf) => ProofResult::Invalid {
                countermodel: self.read_countermodel(s, &open_leaf),
                open_leaf,
            },
        }
    }

    /// Same verdict as [`Prover::prove`] without building the proof tree.
    pub fn is_valid(&self, s: &Sequent) -> bool {
        self.decide(s.clone())
    }

    /// Valuation of the root's atoms that refutes an open leaf.
    ///
    /// An atom occurring positively or negatively on the left is forced
    /// (`b` if both, else `t` or `f`). Every other atom only needs to stay
    /// undesignated, together with its negation where that occurs on the
    /// right; it gets `n` when the carrier has it, otherwise `t` if `~p` is
    /// on the right and `f` if not.
    fn read_countermodel(&self, root: &Sequent, leaf: &Sequent) -> Valuation {
        let general = self.system == RuleSystem::GeneralNegation;
        let has_n = !general && !self.lem;
        root.atoms()
            .into_iter()
            .map(|p| {
                let pos = Formula::Atom(p.clone());
                let neg = Formula::not(pos.clone());
                let pos_left = leaf.left().contains(&pos);
                let value = if general {
                    if pos_left {
                        TruthValue::T
                    } else {
                        TruthValue::F
                    }
                } else {
                    let neg_left = leaf.left().contains(&neg);
                    match (pos_left, neg_left) {
                        (true, true) => TruthValue::B,
                        (true, false) => TruthValue::T,
                        (false, true) => TruthValue::F,
                        (false, false) if has_n => TruthValue::N,
                        (false, false) if leaf.right().contains(&neg) => TruthValue::T,
                        (false, false) => TruthValue::F,
                    }
                };
                (p, value)
            })
            .collect()
    }
}

/// Decides `s` in logic `id` with the negated-connective rules.
pub fn prove(id: LogicId, s: &Sequent) -> ProofResult {
    Prover::for_logic(id).prove(s)
}

/// Decides `s` classically with general negation rules and no
/// non-contradiction or excluded-middle closures.
pub fn prove_cl_general(s: &Sequent) -> ProofResult {
    Prover::classical_general().prove(s)
}

/// Validity of `s` in each of the four logics.
pub fn classify(s: &Sequent) -> BTreeMap<LogicId, bool> {
    LogicId::ALL
        .into_iter()
        .map(|id| (id, Prover::for_logic(id).is_valid(s)))
        .collect()
}
