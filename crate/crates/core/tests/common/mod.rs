#![allow(dead_code)]

use paradef::{Atom, Formula, Sequent};
use proptest::prelude::*;

/// Formulas over the first `atoms` default atoms, up to `depth` nested
/// connectives.
pub fn formula(atoms: usize, depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => (0..atoms).prop_map(|i| Formula::Atom(Atom::nth(i))),
        1 => Just(Formula::Falsum),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

pub fn sequent(atoms: usize, depth: u32, per_side: usize) -> impl Strategy<Value = Sequent> {
    let side = || proptest::collection::vec(formula(atoms, depth), 0..=per_side);
    (side(), side()).prop_map(|(l, r)| Sequent::from_sides(l, r))
}
