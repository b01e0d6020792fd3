use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::TruthValue;
use crate::syntax::Atom;

/// Assignment of truth values to a finite, ordered set of atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Valuation(IndexMap<Atom, TruthValue>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn get(&self, atom: &Atom) -> Option<TruthValue> {
        self.0.get(atom).copied()
    }

    pub fn set(&mut self, atom: Atom, value: TruthValue) {
        self.0.insert(atom, value);
    }

    pub fn with(mut self, atom: Atom, value: TruthValue) -> Valuation {
        self.set(atom, value);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, TruthValue)> {
        self.0.iter().map(|(a, v)| (a, *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Atom, TruthValue)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Atom, TruthValue)>>(iter: I) -> Valuation {
        Valuation(iter.into_iter().collect())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (atom, value)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{atom}={value}")?;
        }
        Ok(())
    }
}

/// Every valuation of `atoms` into `carrier`, as an odometer: the last atom
/// varies fastest, values in carrier order.
#[derive(Clone, Debug)]
pub struct Valuations {
    atoms: Vec<Atom>,
    carrier: Vec<TruthValue>,
    digits: Option<Vec<usize>>,
}

impl Valuations {
    pub fn new(atoms: Vec<Atom>, carrier: &[TruthValue]) -> Valuations {
        let digits = if carrier.is_empty() && !atoms.is_empty() {
            None
        } else {
            Some(vec![0; atoms.len()])
        };
        Valuations {
            atoms,
            carrier: carrier.to_vec(),
            digits,
        }
    }
}

impl Iterator for Valuations {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        let digits = self.digits.as_mut()?;
        let current = self
            .atoms
            .iter()
            .zip(digits.iter())
            .map(|(a, &d)| (a.clone(), self.carrier[d]))
            .collect();
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.carrier.len() {
                break;
            }
            digits[pos] = 0;
        }
        Some(current)
    }
}
