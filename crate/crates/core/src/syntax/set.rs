use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Formula;

/// A finite set of formulas kept sorted in the canonical formula order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormulaSet(Vec<Formula>);

impl FormulaSet {
    pub fn new() -> FormulaSet {
        FormulaSet::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.0.iter()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.binary_search(f).is_ok()
    }

    /// Returns `false` if `f` was already present.
    pub fn insert(&mut self, f: Formula) -> bool {
        match self.0.binary_search(&f) {
            Ok(_) => false,
            Err(at) => {
                self.0.insert(at, f);
                true
            }
        }
    }

    pub fn remove(&mut self, f: &Formula) -> bool {
        match self.0.binary_search(f) {
            Ok(at) => {
                self.0.remove(at);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &FormulaSet) -> FormulaSet {
        let mut out = self.clone();
        out.extend(other.iter().cloned());
        out
    }

    pub fn as_slice(&self) -> &[Formula] {
        &self.0
    }
}

impl Extend<Formula> for FormulaSet {
    fn extend<I: IntoIterator<Item = Formula>>(&mut self, iter: I) {
        for f in iter {
            self.insert(f);
        }
    }
}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> FormulaSet {
        let mut v: Vec<Formula> = iter.into_iter().collect();
        v.sort();
        v.dedup();
        FormulaSet(v)
    }
}

impl IntoIterator for FormulaSet {
    type Item = Formula;
    type IntoIter = std::vec::IntoIter<Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for FormulaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl Serialize for FormulaSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FormulaSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<FormulaSet, D::Error> {
        Ok(Vec::<Formula>::deserialize(deserializer)?
            .into_iter()
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;
    use proptest::prelude::*;

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    #[test]
    fn insert_remove() {
        let mut s = FormulaSet::new();
        assert!(s.insert(f("~p")));
        assert!(s.insert(f("q")));
        assert!(!s.insert(f("q")));
        assert_eq!(
            s.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["q", "~p"]
        );
        assert!(s.remove(&f("q")));
        assert!(!s.remove(&f("q")));
        assert_eq!(s.len(), 1);
    }

    proptest! {
        #[test]
        fn behaves_like_btreeset(ops in proptest::collection::vec((0usize..6, any::<bool>()), 0..40)) {
            let pool = ["p", "q", "~p", "p & q", "#", "q -> p"].map(f);
            let mut ours = FormulaSet::new();
            let mut reference = std::collections::BTreeSet::new();
            for (i, add) in ops {
                let g = pool[i].clone();
                if add {
                    prop_assert_eq!(ours.insert(g.clone()), reference.insert(g));
                } else {
                    prop_assert_eq!(ours.remove(&g), reference.remove(&g));
                }
            }
            prop_assert!(ours.iter().eq(reference.iter()));
        }
    }
}
