use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::ParseError;

/// A propositional variable.
///
/// Names follow the lexical class `[a-z][a-z0-9_]*`, which keeps them
/// disjoint from every connective token.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Atom, ParseError> {
        if is_atom_name(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(ParseError::InvalidAtom {
                name: name.to_string(),
            })
        }
    }

    /// The `index`-th atom of the default supply: `p, q, r, s, t, u, v, w`,
    /// then `p8, p9, ...`.
    pub fn nth(index: usize) -> Atom {
        const NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];
        match NAMES.get(index) {
            Some(name) => Atom(Arc::from(*name)),
            None => Atom(Arc::from(format!("p{index}").as_str())),
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A formula over the fixed signature `#` (falsum), `~`, `&`, `|`, `->`.
///
/// Subformulas are reference counted, so cloning is cheap and values can be
/// shared freely between threads.
///
/// The `Ord` instance is the canonical formula order used for sequent sides
/// and principal-formula selection: by [`Formula::weight`] first, then
/// structurally (atoms < `#` < `~` < `&` < `|` < `->`, children left to
/// right). It agrees with structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Atom),
    Falsum,
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Implies(Arc<Formula>, Arc<Formula>),
}

/// Binary connectives, in the order the enumerator emits them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Binary {
    And,
    Or,
    Implies,
}

impl Binary {
    pub const ALL: [Binary; 3] = [Binary::And, Binary::Or, Binary::Implies];

    pub fn apply(self, lhs: Formula, rhs: Formula) -> Formula {
        match self {
            Binary::And => Formula::and(lhs, rhs),
            Binary::Or => Formula::or(lhs, rhs),
            Binary::Implies => Formula::implies(lhs, rhs),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Binary::And => "&",
            Binary::Or => "|",
            Binary::Implies => "->",
        }
    }
}

impl Formula {
    pub fn atom(name: &str) -> Result<Formula, ParseError> {
        Atom::new(name).map(Formula::Atom)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Formula) -> Formula {
        Formula::Not(Arc::new(inner))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Formula {
        Formula::And(Arc::new(lhs), Arc::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Or(Arc::new(lhs), Arc::new(rhs))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Arc::new(lhs), Arc::new(rhs))
    }

    /// `# -> #`, the designated constant used where a primitive truth
    /// constant would otherwise be needed.
    pub fn verum() -> Formula {
        Formula::implies(Formula::Falsum, Formula::Falsum)
    }

    /// Number of nodes: atoms and `#` weigh 1, every connective adds 1.
    pub fn weight(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum => 1,
            Formula::Not(a) => 1 + a.weight(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.weight() + b.weight()
            }
        }
    }

    /// Tree depth; atoms and `#` have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsum => 0,
            Formula::Not(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) | Formula::Falsum => Vec::new(),
            Formula::Not(a) => vec![a],
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => vec![a, b],
        }
    }

    pub fn as_binary(&self) -> Option<(Binary, &Formula, &Formula)> {
        match self {
            Formula::And(a, b) => Some((Binary::And, a, b)),
            Formula::Or(a, b) => Some((Binary::Or, a, b)),
            Formula::Implies(a, b) => Some((Binary::Implies, a, b)),
            _ => None,
        }
    }

    /// `p` or `~p`.
    pub fn is_literal(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Not(a) => matches!(**a, Formula::Atom(_)),
            _ => false,
        }
    }

    /// Distinct atoms in first-occurrence (left to right) order.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Formula::Atom(p) => {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
            Formula::Falsum => {}
            Formula::Not(a) => a.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn tag_rank(&self) -> u8 {
        match self {
            Formula::Atom(_) => 0,
            Formula::Falsum => 1,
            Formula::Not(_) => 2,
            Formula::And(..) => 3,
            Formula::Or(..) => 4,
            Formula::Implies(..) => 5,
        }
    }

    fn structural_cmp(&self, other: &Formula) -> Ordering {
        match (self, other) {
            (Formula::Atom(p), Formula::Atom(q)) => p.cmp(q),
            (Formula::Falsum, Formula::Falsum) => Ordering::Equal,
            (Formula::Not(a), Formula::Not(b)) => a.structural_cmp(b),
            (Formula::And(a1, a2), Formula::And(b1, b2))
            | (Formula::Or(a1, a2), Formula::Or(b1, b2))
            | (Formula::Implies(a1, a2), Formula::Implies(b1, b2)) => {
                a1.structural_cmp(b1).then_with(|| a2.structural_cmp(b2))
            }
            _ => self.tag_rank().cmp(&other.tag_rank()),
        }
    }
}

impl Ord for Formula {
    fn cmp(&self, other: &Formula) -> Ordering {
        if std::ptr::eq(self, other) {
            return Ordering::Equal;
        }
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.structural_cmp(other))
    }
}

impl PartialOrd for Formula {
    fn partial_cmp(&self, other: &Formula) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Atom> for Formula {
    fn from(atom: Atom) -> Formula {
        Formula::Atom(atom)
    }
}
