use serde::{Deserialize, Serialize};

use super::{Atom, Formula, FormulaSet};

/// A pair of finite formula sets `left |- right`.
///
/// Both sides iterate in the canonical formula order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Sequent {
    left: FormulaSet,
    right: FormulaSet,
}

impl Sequent {
    pub fn new(left: FormulaSet, right: FormulaSet) -> Sequent {
        Sequent { left, right }
    }

    pub fn from_sides<L, R>(left: L, right: R) -> Sequent
    where
        L: IntoIterator<Item = Formula>,
        R: IntoIterator<Item = Formula>,
    {
        Sequent {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
        }
    }

    pub fn left(&self) -> &FormulaSet {
        &self.left
    }

    pub fn right(&self) -> &FormulaSet {
        &self.right
    }

    pub fn with_left(mut self, f: Formula) -> Sequent {
        self.left.insert(f);
        self
    }

    pub fn with_right(mut self, f: Formula) -> Sequent {
        self.right.insert(f);
        self
    }

    /// Union of both sides pairwise: `self.left ∪ other.left |- self.right ∪ other.right`.
    pub fn union(&self, other: &Sequent) -> Sequent {
        Sequent {
            left: self.left.union(&other.left),
            right: self.right.union(&other.right),
        }
    }

    pub fn map(&self, mut f: impl FnMut(&Formula) -> Formula) -> Sequent {
        Sequent {
            left: self.left.iter().map(&mut f).collect(),
            right: self.right.iter().map(&mut f).collect(),
        }
    }

    /// Sum of formula weights over both sides.
    pub fn weight(&self) -> usize {
        self.left
            .iter()
            .chain(&self.right)
            .map(Formula::weight)
            .sum()
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.left.iter().chain(&self.right)
    }

    /// Distinct atoms in first-occurrence order: left side, then right side,
    /// each in canonical formula order.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        for f in self.formulas() {
            f.collect_atoms(&mut out);
        }
        out
    }

    pub(crate) fn into_sides(self) -> (FormulaSet, FormulaSet) {
        (self.left, self.right)
    }
}

/// Atoms of a formula or sequent, in first-occurrence order.
pub trait AtomsOf {
    fn atoms_of(&self) -> Vec<Atom>;
}

impl AtomsOf for Formula {
    fn atoms_of(&self) -> Vec<Atom> {
        self.atoms()
    }
}

impl AtomsOf for Sequent {
    fn atoms_of(&self) -> Vec<Atom> {
        self.atoms()
    }
}

pub fn atoms_of<T: AtomsOf + ?Sized>(x: &T) -> Vec<Atom> {
    x.atoms_of()
}
