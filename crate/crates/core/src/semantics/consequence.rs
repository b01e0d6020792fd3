use super::{logic_matrix, LogicId, Matrix, SemanticsError, TruthValue, Valuation, Valuations};
use crate::syntax::{Atom, Formula, Sequent};

/// Default bound on the number of atoms a brute-force check may range over.
pub const DEFAULT_ATOM_CAP: usize = 8;

/// Compositional evaluation of `f` under `v`.
pub fn eval(m: &Matrix, v: &Valuation, f: &Formula) -> Result<TruthValue, SemanticsError> {
    Ok(match f {
        Formula::Atom(p) => v
            .get(p)
            .ok_or_else(|| SemanticsError::MissingAtom(p.clone()))?,
        Formula::Falsum => m.falsum(),
        Formula::Not(a) => m.negate(eval(m, v, a)?),
        Formula::And(a, b) => m.conj(eval(m, v, a)?, eval(m, v, b)?),
        Formula::Or(a, b) => m.disj(eval(m, v, a)?, eval(m, v, b)?),
        Formula::Implies(a, b) => m.implies(eval(m, v, a)?, eval(m, v, b)?),
    })
}

/// `v` designates every formula on the left and none on the right.
pub fn refutes(m: &Matrix, v: &Valuation, s: &Sequent) -> Result<bool, SemanticsError> {
    for f in s.left() {
        if !m.is_designated(eval(m, v, f)?) {
            return Ok(false);
        }
    }
    for f in s.right() {
        if m.is_designated(eval(m, v, f)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_cap(atoms: &[Atom], cap: usize) -> Result<(), SemanticsError> {
    if atoms.len() > cap {
        return Err(SemanticsError::TooManyAtoms {
            count: atoms.len(),
            cap,
        });
    }
    Ok(())
}

/// The first refuting valuation of `s` in enumeration order, if any.
///
/// Atoms are taken in first-occurrence order; the last atom varies fastest
/// and values run `t, b, n, f` restricted to the carrier.
pub fn countermodel(id: LogicId, s: &Sequent) -> Result<Option<Valuation>, SemanticsError> {
    countermodel_capped(id, s, DEFAULT_ATOM_CAP)
}

pub fn countermodel_capped(
    id: LogicId,
    s: &Sequent,
    cap: usize,
) -> Result<Option<Valuation>, SemanticsError> {
    let atoms = s.atoms();
    check_cap(&atoms, cap)?;
    let m = logic_matrix(id);
    for v in Valuations::new(atoms, m.carrier()) {
        if refutes(&m, &v, s)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Multiple-conclusion matrix consequence: every valuation designating all
/// of the left side designates something on the right side.
pub fn matrix_consequence(id: LogicId, s: &Sequent) -> Result<bool, SemanticsError> {
    matrix_consequence_capped(id, s, DEFAULT_ATOM_CAP)
}

pub fn matrix_consequence_capped(
    id: LogicId,
    s: &Sequent,
    cap: usize,
) -> Result<bool, SemanticsError> {
    Ok(countermodel_capped(id, s, cap)?.is_none())
}

/// Per-formula designation bitmasks over every valuation of a fixed atom
/// list, for running the matrix oracle over many sequents that share atoms.
///
/// Bit `i` of a mask is set when the formula is designated under the `i`-th
/// valuation of [`Valuations`]. At most three atoms (64 valuations).
#[derive(Clone, Debug)]
pub struct DesignationMasks {
    matrix: Matrix,
    valuations: Vec<Valuation>,
    full: u64,
}

impl DesignationMasks {
    pub const MAX_ATOMS: usize = 3;

    pub fn new(id: LogicId, atoms: Vec<Atom>) -> Result<DesignationMasks, SemanticsError> {
        check_cap(&atoms, Self::MAX_ATOMS)?;
        let matrix = logic_matrix(id);
        let valuations: Vec<Valuation> = Valuations::new(atoms, matrix.carrier()).collect();
        let full = if valuations.len() == 64 {
            u64::MAX
        } else {
            (1u64 << valuations.len()) - 1
        };
        Ok(DesignationMasks {
            matrix,
            valuations,
            full,
        })
    }

    pub fn logic(&self) -> LogicId {
        self.matrix.logic()
    }

    pub fn mask(&self, f: &Formula) -> Result<u64, SemanticsError> {
        let mut mask = 0;
        for (i, v) in self.valuations.iter().enumerate() {
            if self.matrix.is_designated(eval(&self.matrix, v, f)?) {
                mask |= 1 << i;
            }
        }
        Ok(mask)
    }

    fn refuting(&self, left: &[u64], right: &[u64]) -> u64 {
        let mut open = self.full;
        for m in left {
            open &= m;
        }
        for m in right {
            open &= !m;
        }
        open
    }

    pub fn consequence(&self, left: &[u64], right: &[u64]) -> bool {
        self.refuting(left, right) == 0
    }

    pub fn first_countermodel(&self, left: &[u64], right: &[u64]) -> Option<&Valuation> {
        let open = self.refuting(left, right);
        (open != 0).then(|| &self.valuations[open.trailing_zeros() as usize])
    }
}
