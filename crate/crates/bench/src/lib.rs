//! Fixtures shared by the benchmarks.

use paradef::syntax::enumerate_formulas;
use paradef::{parse_sequent, Formula, Sequent};

/// Named sequents of increasing size.
pub fn sequents() -> Vec<(&'static str, Sequent)> {
    [
        ("explosion", "p, ~p |- q"),
        ("peirce", "|- ((p -> q) -> p) -> p"),
        ("de_morgan", "~(p & q) |- ~p | ~q"),
        (
            "chain",
            "p -> q, q -> r, r -> s, s -> t |- ~(p & ~t) & (~~p -> t | #)",
        ),
        (
            "wide",
            "(p | q) & (r | s), ~(p & r) | (q -> ~s) |- (p & s) | (q & r) | ~(r | ~p)",
        ),
    ]
    .into_iter()
    .map(|(name, text)| (name, parse_sequent(text).expect("fixture parses")))
    .collect()
}

pub fn formulas(atoms: usize, depth: usize) -> Vec<Formula> {
    enumerate_formulas(atoms, depth)
        .expect("fixture enumeration")
        .collect()
}
