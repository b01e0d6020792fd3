use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Atom, Formula, Sequent};

/// A map from atoms to formulas; atoms without an entry map to themselves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<Atom, Formula>,
}

impl Substitution {
    pub fn identity() -> Substitution {
        Substitution::default()
    }

    pub fn insert(&mut self, atom: Atom, image: Formula) -> &mut Substitution {
        if image == Formula::Atom(atom.clone()) {
            self.map.remove(&atom);
        } else {
            self.map.insert(atom, image);
        }
        self
    }

    pub fn with(mut self, atom: Atom, image: Formula) -> Substitution {
        self.insert(atom, image);
        self
    }

    pub fn image(&self, atom: &Atom) -> Formula {
        self.map
            .get(atom)
            .cloned()
            .unwrap_or_else(|| Formula::Atom(atom.clone()))
    }

    pub fn apply(&self, f: &Formula) -> Formula {
        if self.map.is_empty() {
            return f.clone();
        }
        self.apply_inner(f)
    }

    fn apply_inner(&self, f: &Formula) -> Formula {
        match f {
            Formula::Atom(p) => self.image(p),
            Formula::Falsum => Formula::Falsum,
            Formula::Not(a) => Formula::Not(Arc::new(self.apply_inner(a))),
            Formula::And(a, b) => Formula::and(self.apply_inner(a), self.apply_inner(b)),
            Formula::Or(a, b) => Formula::or(self.apply_inner(a), self.apply_inner(b)),
            Formula::Implies(a, b) => Formula::implies(self.apply_inner(a), self.apply_inner(b)),
        }
    }

    pub fn apply_sequent(&self, s: &Sequent) -> Sequent {
        s.map(|f| self.apply(f))
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Substitution) -> Substitution {
        let mut out = Substitution::identity();
        for (atom, image) in &first.map {
            out.insert(atom.clone(), self.apply(image));
        }
        for (atom, image) in &self.map {
            if !first.map.contains_key(atom) {
                out.insert(atom.clone(), image.clone());
            }
        }
        out
    }
}

/// Homomorphic replacement of atoms.
pub fn substitute(s: &Substitution, f: &Formula) -> Formula {
    s.apply(f)
}
