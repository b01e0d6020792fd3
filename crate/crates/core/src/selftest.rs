//! Bounded cross-checks between the prover and the matrix oracle, over
//! every sequent built from an enumerated formula set or over any chosen
//! list of index pairs into such a set.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{embed_formula, EmbedError};
use crate::prover::Prover;
use crate::semantics::{
    logic_matrix, matrix_consequence, refutes, DesignationMasks, LogicId, Matrix, SemanticsError,
    TruthValue,
};
use crate::syntax::{
    enumerate_formulas_capped, sequent_at, side_count, Atom, EnumerationError, Formula, Sequent,
    SequentIndices,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    pub atoms: usize,
    pub depth: usize,
    pub per_side: usize,
    pub cap: u128,
}

impl Default for SelftestConfig {
    fn default() -> SelftestConfig {
        SelftestConfig {
            atoms: 2,
            depth: 1,
            per_side: 2,
            cap: crate::syntax::DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Error)]
pub enum SelftestError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// Counts of checked items and of failures per suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub formulas: usize,
    pub sequents: u64,
    pub valid: BTreeMap<LogicId, u64>,
    /// Sequents valid in CL and invalid in BDL.
    pub cl_not_bdl: u64,
    /// Invalid verdicts whose countermodel was checked.
    pub countermodels_checked: u64,
    /// Prover verdict differs from the matrix oracle.
    pub prover_matrix_disagreements: BTreeMap<LogicId, u64>,
    /// General-negation CL prover differs from the specific CL prover.
    pub general_negation_disagreements: u64,
    /// BDL verdict differs from the CL verdict on the translated sequent.
    pub embedding_disagreements: u64,
    /// A logic validates a sequent that a logic above it rejects.
    pub inclusion_violations: u64,
    /// CL without LNC differs from LP, or CL without LEM differs from K3.
    pub flag_variant_disagreements: u64,
    /// CL-valid, BDL-invalid, and the BDL countermodel uses neither b nor n.
    pub factorization_violations: u64,
    /// An extracted countermodel does not refute its sequent in the carrier.
    pub bad_countermodels: u64,
    /// Up to five failing sequents, for diagnosis.
    pub examples: Vec<String>,
}

impl SelftestReport {
    pub fn failures(&self) -> u64 {
        self.prover_matrix_disagreements.values().sum::<u64>()
            + self.general_negation_disagreements
            + self.embedding_disagreements
            + self.inclusion_violations
            + self.flag_variant_disagreements
            + self.factorization_violations
            + self.bad_countermodels
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Adds the counts of `other` into `self`.
    pub fn absorb(&mut self, other: SelftestReport) {
        self.formulas = self.formulas.max(other.formulas);
        self.sequents += other.sequents;
        for (id, n) in other.valid {
            *self.valid.entry(id).or_default() += n;
        }
        for (id, n) in other.prover_matrix_disagreements {
            *self.prover_matrix_disagreements.entry(id).or_default() += n;
        }
        self.cl_not_bdl += other.cl_not_bdl;
        self.countermodels_checked += other.countermodels_checked;
        self.general_negation_disagreements += other.general_negation_disagreements;
        self.embedding_disagreements += other.embedding_disagreements;
        self.inclusion_violations += other.inclusion_violations;
        self.flag_variant_disagreements += other.flag_variant_disagreements;
        self.factorization_violations += other.factorization_violations;
        self.bad_countermodels += other.bad_countermodels;
        for e in other.examples {
            if self.examples.len() < 5 {
                self.examples.push(e);
            }
        }
    }

    fn note(&mut self, what: &str, s: &Sequent) {
        if self.examples.len() < 5 {
            self.examples.push(format!("{what}: {s}"));
        }
    }
}

enum Oracle {
    Masks(Vec<(DesignationMasks, Vec<u64>)>),
    Direct,
}

/// Per-formula data shared by every sequent checked over a formula list.
pub struct Checker {
    formulas: Vec<Formula>,
    embedded: Vec<Formula>,
    oracle: Oracle,
    provers: [Prover; 4],
    general: Prover,
    matrices: [Matrix; 4],
}

const CL: usize = 0;
const LP: usize = 1;
const K3: usize = 2;
const BDL: usize = 3;

impl Checker {
    pub fn new(formulas: Vec<Formula>) -> Result<Checker, SelftestError> {
        let mut atoms: Vec<Atom> = Vec::new();
        for f in &formulas {
            f.collect_atoms(&mut atoms);
        }
        let oracle = if atoms.len() <= DesignationMasks::MAX_ATOMS {
            let mut tables = Vec::new();
            for id in LogicId::ALL {
                let masks = DesignationMasks::new(id, atoms.clone())?;
                let by_index = formulas
                    .iter()
                    .map(|f| masks.mask(f))
                    .collect::<Result<Vec<_>, _>>()?;
                tables.push((masks, by_index));
            }
            Oracle::Masks(tables)
        } else {
            Oracle::Direct
        };
        debug_assert_eq!(
            LogicId::ALL,
            [LogicId::Cl, LogicId::Lp, LogicId::K3, LogicId::Bdl]
        );
        Ok(Checker {
            embedded: formulas
                .iter()
                .map(embed_formula)
                .collect::<Result<Vec<_>, _>>()?,
            formulas,
            oracle,
            provers: LogicId::ALL.map(Prover::for_logic),
            general: Prover::classical_general(),
            matrices: LogicId::ALL.map(logic_matrix),
        })
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    fn consequence(
        &self,
        index: usize,
        s: &Sequent,
        left: &[usize],
        right: &[usize],
    ) -> Result<bool, SemanticsError> {
        match &self.oracle {
            Oracle::Masks(tables) => {
                let (masks, by_index) = &tables[index];
                let pick = |ix: &[usize]| ix.iter().map(|&i| by_index[i]).collect::<Vec<_>>();
                Ok(masks.consequence(&pick(left), &pick(right)))
            }
            Oracle::Direct => matrix_consequence(LogicId::ALL[index], s),
        }
    }

    /// Runs every suite on the sequent `formulas[left] |- formulas[right]`.
    pub fn check(
        &self,
        left: &[usize],
        right: &[usize],
        report: &mut SelftestReport,
    ) -> Result<(), SelftestError> {
        let s = sequent_at(&self.formulas, left, right);
        report.sequents += 1;
        let mut verdicts = [false; 4];
        let mut oracle = [false; 4];
        for (i, id) in LogicId::ALL.into_iter().enumerate() {
            verdicts[i] = self.provers[i].is_valid(&s);
            oracle[i] = self.consequence(i, &s, left, right)?;
            if verdicts[i] {
                *report.valid.entry(id).or_default() += 1;
            }
            if verdicts[i] != oracle[i] {
                *report.prover_matrix_disagreements.entry(id).or_default() += 1;
                report.note(&format!("prover/matrix {id}"), &s);
            }
            if verdicts[i] {
                continue;
            }
            let result = self.provers[i].prove(&s);
            report.countermodels_checked += 1;
            let Some(v) = result.countermodel() else {
                report.bad_countermodels += 1;
                report.note(&format!("verdict mismatch {id}"), &s);
                continue;
            };
            let m = &self.matrices[i];
            if !refutes(m, v, &s)? || !v.iter().all(|(_, x)| m.in_carrier(x)) {
                report.bad_countermodels += 1;
                report.note(&format!("countermodel {id}"), &s);
            }
            if i == BDL && verdicts[CL] {
                report.cl_not_bdl += 1;
                if !v
                    .iter()
                    .any(|(_, x)| matches!(x, TruthValue::B | TruthValue::N))
                {
                    report.factorization_violations += 1;
                    report.note("factorization", &s);
                }
            }
        }
        if self.general.is_valid(&s) != verdicts[CL] {
            report.general_negation_disagreements += 1;
            report.note("general negation", &s);
        }
        let cl = self.provers[CL];
        let no_lnc = cl.without_lnc().is_valid(&s);
        let no_lem = cl.without_lem().is_valid(&s);
        if no_lnc != verdicts[LP]
            || no_lnc != oracle[LP]
            || no_lem != verdicts[K3]
            || no_lem != oracle[K3]
        {
            report.flag_variant_disagreements += 1;
            report.note("flag variant", &s);
        }
        let embedded = sequent_at(&self.embedded, left, right);
        if self.provers[CL].is_valid(&embedded) != verdicts[BDL] {
            report.embedding_disagreements += 1;
            report.note("embedding", &s);
        }
        for (lo, &lo_valid) in LogicId::ALL.iter().zip(&verdicts) {
            for (hi, &hi_valid) in LogicId::ALL.iter().zip(&verdicts) {
                if lo.included_in(*hi) && lo_valid && !hi_valid {
                    report.inclusion_violations += 1;
                    report.note(&format!("inclusion {lo} in {hi}"), &s);
                }
            }
        }
        Ok(())
    }

    /// Checks every listed sequent and returns the combined report.
    pub fn run<I>(&self, sequents: I) -> Result<SelftestReport, SelftestError>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<usize>)>,
    {
        let mut report = SelftestReport {
            formulas: self.formulas.len(),
            ..SelftestReport::default()
        };
        for id in LogicId::ALL {
            report.valid.insert(id, 0);
            report.prover_matrix_disagreements.insert(id, 0);
        }
        for (left, right) in sequents {
            self.check(&left, &right, &mut report)?;
        }
        Ok(report)
    }
}

/// Checks every sequent of the enumeration described by `config`.
pub fn run_selftest(config: SelftestConfig) -> Result<SelftestReport, SelftestError> {
    let formulas: Vec<Formula> =
        enumerate_formulas_capped(config.atoms, config.depth, config.cap)?.collect();
    let sides = side_count(formulas.len(), config.per_side);
    let count = sides.saturating_mul(sides);
    if count > config.cap {
        return Err(EnumerationError::TooLarge {
            count,
            cap: config.cap,
        }
        .into());
    }
    let n = formulas.len();
    Checker::new(formulas)?.run(SequentIndices::new(n, config.per_side))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean() {
        let report = run_selftest(SelftestConfig {
            atoms: 1,
            depth: 1,
            per_side: 1,
            cap: 1_000_000,
        })
        .unwrap();
        assert_eq!(report.formulas, 16);
        assert_eq!(report.sequents, 17 * 17);
        assert!(report.passed(), "{report:?}");
        assert!(report.valid[&LogicId::Bdl] <= report.valid[&LogicId::Lp]);
        assert!(report.cl_not_bdl > 0);
        let invalid: u64 = report.valid.values().map(|v| report.sequents - v).sum();
        assert_eq!(report.countermodels_checked, invalid);
    }

    #[test]
    fn direct_oracle_for_wide_runs() {
        let report = run_selftest(SelftestConfig {
            atoms: 4,
            depth: 0,
            per_side: 1,
            cap: 1_000_000,
        })
        .unwrap();
        assert_eq!(report.sequents, 36);
        assert!(report.passed());
    }

    #[test]
    fn caps_propagate() {
        let err = run_selftest(SelftestConfig {
            atoms: 2,
            depth: 2,
            per_side: 2,
            cap: 1_000_000,
        })
        .err()
        .unwrap();
        assert!(matches!(err, SelftestError::Enumeration(_)));
    }

    #[test]
    fn reports_combine() {
        let config = SelftestConfig {
            atoms: 1,
            depth: 0,
            per_side: 1,
            cap: 1_000,
        };
        let one = run_selftest(config).unwrap();
        let mut two = one.clone();
        two.absorb(one.clone());
        assert_eq!(two.sequents, 2 * one.sequents);
        assert_eq!(two.valid[&LogicId::Cl], 2 * one.valid[&LogicId::Cl]);
    }
}
