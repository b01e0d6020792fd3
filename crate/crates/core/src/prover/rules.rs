use std::fmt;

use serde::{Serialize, Serializer};

use crate::semantics::LogicId;
use crate::syntax::{Formula, FormulaSet, Sequent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Rule names. `L`/`R` is the side of the principal formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleName {
    AndL,
    AndR,
    OrL,
    OrR,
    ImpL,
    ImpR,
    NotNotL,
    NotNotR,
    NotAndL,
    NotAndR,
    NotOrL,
    NotOrR,
    NotImpL,
    NotImpR,
    /// Drop `#` from the right.
    FalsumR,
    /// Drop `~#` from the left.
    NotFalsumL,
    /// General negation: `~A` on the left becomes `A` on the right.
    NotL,
    /// General negation: `~A` on the right becomes `A` on the left.
    NotR,
}

impl RuleName {
    pub fn symbol(self) -> &'static str {
        match self {
            RuleName::AndL => "L&",
            RuleName::AndR => "R&",
            RuleName::OrL => "L|",
            RuleName::OrR => "R|",
            RuleName::ImpL => "L->",
            RuleName::ImpR => "R->",
            RuleName::NotNotL => "L~~",
            RuleName::NotNotR => "R~~",
            RuleName::NotAndL => "L~&",
            RuleName::NotAndR => "R~&",
            RuleName::NotOrL => "L~|",
            RuleName::NotOrR => "R~|",
            RuleName::NotImpL => "L~->",
            RuleName::NotImpR => "R~->",
            RuleName::FalsumR => "R#",
            RuleName::NotFalsumL => "L~#",
            RuleName::NotL => "L~",
            RuleName::NotR => "R~",
        }
    }

    pub fn side(self) -> Side {
        match self {
            RuleName::AndL
            | RuleName::OrL
            | RuleName::ImpL
            | RuleName::NotNotL
            | RuleName::NotAndL
            | RuleName::NotOrL
            | RuleName::NotImpL
            | RuleName::NotFalsumL
            | RuleName::NotL => Side::Left,
            _ => Side::Right,
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for RuleName {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.symbol())
    }
}

/// Which treatment of negation the rules use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSystem {
    /// One rule pair per negated connective; shared by all four logics.
    Specific,
    /// Classical only: `~A` flips sides, whatever `A` is.
    GeneralNegation,
}

/// Formulas added to the (principal-free) conclusion to form one premise.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Premise {
    pub left: Vec<Formula>,
    pub right: Vec<Formula>,
}

/// A backward sequent rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub name: RuleName,
    pub side: Side,
}

impl Rule {
    fn new(name: RuleName) -> Rule {
        Rule {
            name,
            side: name.side(),
        }
    }

    /// Whether `f` has this rule's principal shape.
    pub fn matches(&self, f: &Formula) -> bool {
        self.decompose(f).is_some()
    }

    fn parts(&self, f: &Formula) -> Option<Parts> {
        use Formula::*;
        use Side::{Left as L, Right as R};
        let c = |x: &std::sync::Arc<Formula>| Formula::clone(x);
        let neg = |x: &std::sync::Arc<Formula>| Formula::not(c(x));
        Some(match (self.name, f) {
            (RuleName::AndL, And(a, b)) => Parts::One([Some((L, c(a))), Some((L, c(b)))]),
            (RuleName::AndR, And(a, b)) => Parts::Two((R, c(a)), (R, c(b))),
            (RuleName::OrL, Or(a, b)) => Parts::Two((L, c(a)), (L, c(b))),
            (RuleName::OrR, Or(a, b)) => Parts::One([Some((R, c(a))), Some((R, c(b)))]),
            (RuleName::ImpL, Implies(a, b)) => Parts::Two((R, c(a)), (L, c(b))),
            (RuleName::ImpR, Implies(a, b)) => Parts::One([Some((L, c(a))), Some((R, c(b)))]),
            (RuleName::FalsumR, Falsum) => Parts::One([None, None]),
            (RuleName::NotL, Not(a)) => Parts::One([Some((R, c(a))), None]),
            (RuleName::NotR, Not(a)) => Parts::One([Some((L, c(a))), None]),
            (name, Not(inner)) => match (name, &**inner) {
                (RuleName::NotFalsumL, Falsum) => Parts::One([None, None]),
                (RuleName::NotNotL, Not(a)) => Parts::One([Some((L, c(a))), None]),
                (RuleName::NotNotR, Not(a)) => Parts::One([Some((R, c(a))), None]),
                (RuleName::NotAndL, And(a, b)) => Parts::Two((L, neg(a)), (L, neg(b))),
                (RuleName::NotAndR, And(a, b)) => {
                    Parts::One([Some((R, neg(a))), Some((R, neg(b)))])
                }
                (RuleName::NotOrL, Or(a, b)) => Parts::One([Some((L, neg(a))), Some((L, neg(b)))]),
                (RuleName::NotOrR, Or(a, b)) => Parts::Two((R, neg(a)), (R, neg(b))),
                (RuleName::NotImpL, Implies(a, b)) => {
                    Parts::One([Some((L, c(a))), Some((L, neg(b)))])
                }
                (RuleName::NotImpR, Implies(a, b)) => Parts::Two((R, c(a)), (R, neg(b))),
                _ => return None,
            },
            _ => return None,
        })
    }

    /// Premise additions for principal formula `f`, or `None` if `f` does
    /// not have the rule's shape. Zero-premise-addition rules (the inert
    /// removals) yield one empty premise.
    pub fn decompose(&self, f: &Formula) -> Option<Vec<Premise>> {
        let premise = |adds: &mut dyn Iterator<Item = (Side, Formula)>| {
            let mut p = Premise::default();
            for (side, g) in adds {
                match side {
                    Side::Left => p.left.push(g),
                    Side::Right => p.right.push(g),
                }
            }
            p
        };
        Some(match self.parts(f)? {
            Parts::One(adds) => vec![premise(&mut adds.into_iter().flatten())],
            Parts::Two(a, b) => vec![
                premise(&mut std::iter::once(a)),
                premise(&mut std::iter::once(b)),
            ],
        })
    }

    /// Premises of the backward step on `principal` in `conclusion`.
    pub fn apply(&self, principal: &Formula, conclusion: &Sequent) -> Option<Vec<Sequent>> {
        Some(match self.expand(principal, conclusion.clone())? {
            Expansion::One(s) => vec![s],
            Expansion::Two(a, b) => vec![a, b],
        })
    }

    pub(crate) fn expand(&self, principal: &Formula, conclusion: Sequent) -> Option<Expansion> {
        let parts = self.parts(principal)?;
        let (mut left, mut right) = conclusion.into_sides();
        match self.side {
            Side::Left => left.remove(principal),
            Side::Right => right.remove(principal),
        };
        let add = |l: &mut FormulaSet, r: &mut FormulaSet, (side, g): (Side, Formula)| {
            match side {
                Side::Left => l.insert(g),
                Side::Right => r.insert(g),
            };
        };
        Some(match parts {
            Parts::One(adds) => {
                for a in adds.into_iter().flatten() {
                    add(&mut left, &mut right, a);
                }
                Expansion::One(Sequent::new(left, right))
            }
            Parts::Two(a, b) => {
                let (mut l, mut r) = (left.clone(), right.clone());
                add(&mut l, &mut r, a);
                add(&mut left, &mut right, b);
                Expansion::Two(Sequent::new(l, r), Sequent::new(left, right))
            }
        })
    }
}

pub(crate) enum Expansion {
    One(Sequent),
    Two(Sequent, Sequent),
}

/// Additions for a rule instance: one premise receiving up to two formulas,
/// or two premises receiving one formula each.
enum Parts {
    One([Option<(Side, Formula)>; 2]),
    Two((Side, Formula), (Side, Formula)),
}

const SPECIFIC: [RuleName; 16] = [
    RuleName::AndR,
    RuleName::OrL,
    RuleName::ImpR,
    RuleName::NotNotL,
    RuleName::NotAndL,
    RuleName::NotOrR,
    RuleName::NotImpL,
    RuleName::AndL,
    RuleName::OrR,
    RuleName::ImpL,
    RuleName::NotNotR,
    RuleName::NotAndR,
    RuleName::NotOrL,
    RuleName::NotImpR,
    RuleName::FalsumR,
    RuleName::NotFalsumL,
];

const GENERAL: [RuleName; 9] = [
    RuleName::AndR,
    RuleName::OrL,
    RuleName::ImpR,
    RuleName::AndL,
    RuleName::OrR,
    RuleName::ImpL,
    RuleName::NotL,
    RuleName::NotR,
    RuleName::FalsumR,
];

/// The rule set used for `id`. It is the same for all four logics: the
/// logics differ only in which closure conditions are enabled.
///
/// The first seven rules are the stated biconditional directions, the next
/// seven their duals, and the last two drop `#` on the right and `~#` on
/// the left.
pub fn rule_set(_id: LogicId) -> Vec<Rule> {
    SPECIFIC.into_iter().map(Rule::new).collect()
}

/// Classical rules with general negation (`L~`, `R~`) in place of all the
/// negated-connective rules.
pub fn general_rule_set() -> Vec<Rule> {
    GENERAL.into_iter().map(Rule::new).collect()
}

pub(crate) fn rules_of(system: RuleSystem) -> &'static [RuleName] {
    match system {
        RuleSystem::Specific => &SPECIFIC,
        RuleSystem::GeneralNegation => &GENERAL,
    }
}

/// The unique rule of `system` that reduces `f` on `side`, if any.
pub fn matching_rule(system: RuleSystem, side: Side, f: &Formula) -> Option<Rule> {
    rules_of(system)
        .iter()
        .map(|&n| Rule::new(n))
        .find(|r| r.side == side && r.matches(f))
}

/// Termination measure: atoms and `#` count 1, a binary node adds 1 to its
/// children, and negation doubles. Every rule application strictly lowers
/// the sum over a sequent, including the negated-connective rules that keep
/// plain [`Formula::weight`] unchanged.
pub fn rank(f: &Formula) -> u64 {
    match f {
        Formula::Atom(_) | Formula::Falsum => 1,
        Formula::Not(a) => rank(a).saturating_mul(2),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            rank(a).saturating_add(rank(b)).saturating_add(1)
        }
    }
}

pub fn sequent_rank(s: &Sequent) -> u64 {
    s.formulas().map(rank).fold(0, u64::saturating_add)
}
