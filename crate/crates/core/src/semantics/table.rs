use std::fmt;

use serde::Serialize;

use super::consequence::DEFAULT_ATOM_CAP;
use super::{eval, logic_matrix, LogicId, SemanticsError, TruthValue, Valuation, Valuations};
use crate::syntax::{Atom, Formula};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub valuation: Valuation,
    pub value: TruthValue,
    pub designated: bool,
}

/// One row per valuation of the formula's atoms, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruthTable {
    pub logic: LogicId,
    pub formula: String,
    pub atoms: Vec<Atom>,
    pub rows: Vec<TableRow>,
}

pub fn truth_table(id: LogicId, f: &Formula) -> Result<TruthTable, SemanticsError> {
    truth_table_capped(id, f, DEFAULT_ATOM_CAP)
}

pub fn truth_table_capped(
    id: LogicId,
    f: &Formula,
    cap: usize,
) -> Result<TruthTable, SemanticsError> {
    let atoms = f.atoms();
    if atoms.len() > cap {
        return Err(SemanticsError::TooManyAtoms {
            count: atoms.len(),
            cap,
        });
    }
    let m = logic_matrix(id);
    let rows = Valuations::new(atoms.clone(), m.carrier())
        .map(|valuation| {
            let value = eval(&m, &valuation, f)?;
            Ok(TableRow {
                designated: m.is_designated(value),
                valuation,
                value,
            })
        })
        .collect::<Result<_, SemanticsError>>()?;
    Ok(TruthTable {
        logic: id,
        formula: f.to_string(),
        atoms,
        rows,
    })
}

impl TruthTable {
    pub fn all_designated(&self) -> bool {
        self.rows.iter().all(|r| r.designated)
    }
}

/// Aligned text; designated rows carry a trailing `*`.
impl fmt::Display for TruthTable {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = self.atoms.iter().map(|a| a.name().len()).collect();
        for (a, w) in self.atoms.iter().zip(&widths) {
            write!(out, "{:<w$} ", a.name(), w = w)?;
        }
        writeln!(out, "| {}", self.formula)?;
        let header_len: usize =
            widths.iter().map(|w| w + 1).sum::<usize>() + 2 + self.formula.len();
        writeln!(out, "{}", "-".repeat(header_len))?;
        for row in &self.rows {
            for ((_, v), w) in row.valuation.iter().zip(&widths) {
                write!(out, "{:<w$} ", v.symbol(), w = w)?;
            }
            write!(out, "| {}", row.value)?;
            if row.designated {
                write!(out, " *")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}
