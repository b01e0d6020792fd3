//! Bounded exhaustive enumeration of formulas and sequents.
//!
//! Formulas come out layer by layer. Layer 0 is the atoms `p, q, ...` in
//! supply order followed by `#`. Layer `d` is `~A` for every `A` in layer
//! `d - 1` (in order), followed by, for each connective `&`, `|`, `->` in
//! turn, every `A op B` where `A` and `B` range over layers `0..d` in order
//! (`A` outer, `B` inner) and at least one of them lies in layer `d - 1`.

use super::{Atom, Binary, EnumerationError, Formula, Sequent};

/// Default upper bound on the number of items an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u128 = 20_000_000;

/// Number of formulas over `atom_count` atoms with depth at most `max_depth`,
/// saturating at `u128::MAX`.
pub fn formula_count(atom_count: usize, max_depth: usize) -> u128 {
    let mut total = atom_count as u128 + 1;
    for _ in 0..max_depth {
        let squared = total.saturating_mul(total);
        total = (atom_count as u128 + 1)
            .saturating_add(total)
            .saturating_add(squared.saturating_mul(3));
    }
    total
}

/// Deterministic stream of formulas; see the module docs for the order.
#[derive(Clone, Debug)]
pub struct FormulaStream {
    lower: Vec<Formula>,
    boundary: usize,
    expands: bool,
    phase: Phase,
}

#[derive(Clone, Debug)]
enum Phase {
    Lower(usize),
    Negations(usize),
    Pairs { op: usize, i: usize, j: usize },
    Done,
}

pub fn enumerate_formulas(
    atom_count: usize,
    max_depth: usize,
) -> Result<FormulaStream, EnumerationError> {
    enumerate_formulas_capped(atom_count, max_depth, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_formulas_capped(
    atom_count: usize,
    max_depth: usize,
    cap: u128,
) -> Result<FormulaStream, EnumerationError> {
    if atom_count == 0 {
        return Err(EnumerationError::NoAtoms);
    }
    let count = formula_count(atom_count, max_depth);
    if count > cap {
        return Err(EnumerationError::TooLarge { count, cap });
    }
    let base: Vec<Formula> = (0..atom_count)
        .map(|i| Formula::Atom(Atom::nth(i)))
        .chain(std::iter::once(Formula::Falsum))
        .collect();
    if max_depth == 0 {
        return Ok(FormulaStream {
            lower: base,
            boundary: 0,
            expands: false,
            phase: Phase::Lower(0),
        });
    }
    let mut lower = base;
    let mut boundary = 0;
    for _ in 1..max_depth {
        let layer = next_layer(&lower, boundary);
        boundary = lower.len();
        lower.extend(layer);
    }
    Ok(FormulaStream {
        lower,
        boundary,
        expands: true,
        phase: Phase::Lower(0),
    })
}

fn next_layer(lower: &[Formula], boundary: usize) -> Vec<Formula> {
    let stream = FormulaStream {
        lower: lower.to_vec(),
        boundary,
        expands: true,
        phase: Phase::Negations(boundary),
    };
    stream.collect()
}

impl Iterator for FormulaStream {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        loop {
            match self.phase {
                Phase::Lower(i) => {
                    if let Some(f) = self.lower.get(i) {
                        self.phase = Phase::Lower(i + 1);
                        return Some(f.clone());
                    }
                    self.phase = if self.expands {
                        Phase::Negations(self.boundary)
                    } else {
                        Phase::Done
                    };
                }
                Phase::Negations(i) => {
                    if let Some(f) = self.lower.get(i) {
                        self.phase = Phase::Negations(i + 1);
                        return Some(Formula::not(f.clone()));
                    }
                    self.phase = Phase::Pairs { op: 0, i: 0, j: 0 };
                }
                Phase::Pairs { op, i, mut j } => {
                    let n = self.lower.len();
                    if op == Binary::ALL.len() {
                        self.phase = Phase::Done;
                        continue;
                    }
                    if i == n {
                        self.phase = Phase::Pairs {
                            op: op + 1,
                            i: 0,
                            j: 0,
                        };
                        continue;
                    }
                    if i < self.boundary && j < self.boundary {
                        j = self.boundary;
                    }
                    if j >= n {
                        self.phase = Phase::Pairs { op, i: i + 1, j: 0 };
                        continue;
                    }
                    self.phase = Phase::Pairs { op, i, j: j + 1 };
                    return Some(
                        Binary::ALL[op].apply(self.lower[i].clone(), self.lower[j].clone()),
                    );
                }
                Phase::Done => return None,
            }
        }
    }
}

/// Number of subsets of size at most `per_side` drawn from `n` items.
pub fn side_count(n: usize, per_side: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 0..=per_side.min(n) {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul((n - k) as u128) / (k as u128 + 1);
    }
    total
}

/// Index subsets of `0..n` with at most `max_size` elements: by size, then
/// lexicographically.
#[derive(Clone, Debug)]
pub struct Subsets {
    n: usize,
    max_size: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    pub fn new(n: usize, max_size: usize) -> Subsets {
        Subsets {
            n,
            max_size: max_size.min(n),
            current: Some(Vec::new()),
        }
    }

    fn advance(&self, cur: &[usize]) -> Option<Vec<usize>> {
        let k = cur.len();
        let mut next = cur.to_vec();
        for pos in (0..k).rev() {
            if next[pos] < self.n - (k - pos) {
                next[pos] += 1;
                for later in pos + 1..k {
                    next[later] = next[later - 1] + 1;
                }
                return Some(next);
            }
        }
        if k < self.max_size {
            Some((0..k + 1).collect())
        } else {
            None
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        self.current = self.advance(&cur);
        Some(cur)
    }
}

/// Index pairs `(left, right)` of every sequent whose sides are subsets (of
/// size at most `per_side`) of `0..n`, left side outer, right side inner.
#[derive(Clone, Debug)]
pub struct SequentIndices {
    n: usize,
    per_side: usize,
    left: Subsets,
    current_left: Option<Vec<usize>>,
    right: Subsets,
}

impl SequentIndices {
    pub fn new(n: usize, per_side: usize) -> SequentIndices {
        let mut left = Subsets::new(n, per_side);
        let current_left = left.next();
        SequentIndices {
            n,
            per_side,
            left,
            current_left,
            right: Subsets::new(n, per_side),
        }
    }
}

impl Iterator for SequentIndices {
    type Item = (Vec<usize>, Vec<usize>);

    fn next(&mut self) -> Option<(Vec<usize>, Vec<usize>)> {
        loop {
            let left = self.current_left.as_ref()?;
            match self.right.next() {
                Some(right) => return Some((left.clone(), right)),
                None => {
                    self.current_left = self.left.next();
                    self.right = Subsets::new(self.n, self.per_side);
                }
            }
        }
    }
}

/// Every sequent whose sides are subsets (of size at most `per_side`) of
/// `formulas`, left side outer, right side inner.
#[derive(Clone, Debug)]
pub struct SequentStream<'a> {
    formulas: &'a [Formula],
    indices: SequentIndices,
}

pub fn enumerate_sequents(
    formulas: &[Formula],
    per_side: usize,
) -> Result<SequentStream<'_>, EnumerationError> {
    enumerate_sequents_capped(formulas, per_side, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_sequents_capped(
    formulas: &[Formula],
    per_side: usize,
    cap: u128,
) -> Result<SequentStream<'_>, EnumerationError> {
    let sides = side_count(formulas.len(), per_side);
    let count = sides.saturating_mul(sides);
    if count > cap {
        return Err(EnumerationError::TooLarge { count, cap });
    }
    Ok(SequentStream {
        formulas,
        indices: SequentIndices::new(formulas.len(), per_side),
    })
}

/// The sequent with the formulas at positions `left |- right`.
pub fn sequent_at(formulas: &[Formula], left: &[usize], right: &[usize]) -> Sequent {
    let pick = |ix: &[usize]| ix.iter().map(|&i| formulas[i].clone()).collect::<Vec<_>>();
    Sequent::from_sides(pick(left), pick(right))
}

impl Iterator for SequentStream<'_> {
    type Item = Sequent;

    fn next(&mut self) -> Option<Sequent> {
        let (left, right) = self.indices.next()?;
        Some(sequent_at(self.formulas, &left, &right))
    }
}
