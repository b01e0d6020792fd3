//! Command-line front end: argument model and a testable `run`.

use std::io::{BufRead, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use paradef::selftest::{run_selftest, Checker, SelftestConfig, SelftestError, SelftestReport};
use paradef::semantics::{logic_matrix, refutes, truth_table_capped, DEFAULT_ATOM_CAP};
use paradef::syntax::{
    enumerate_formulas, enumerate_sequents_capped, side_count, EnumerationError,
    DEFAULT_ENUMERATION_CAP,
};
use paradef::{
    embed_sequent, matrix_consequence, parse_formula, parse_sequent, EmbedError, Formula, LogicId,
    ParseError, ProofResult, Prover, SemanticsError, Sequent,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

pub const EXIT_VALID: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
/// A cross-check between the prover and the matrix oracle failed.
pub const EXIT_CHECK_FAILED: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "paradef", version)]
#[command(about = "Decide sequents in CL, LP, K3 and BDL")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest number of distinct atoms a matrix computation may use
    #[arg(long, global = true, env = "PARADEF_MAX_ATOMS", default_value_t = DEFAULT_ATOM_CAP)]
    pub max_atoms: usize,

    /// Seed for sampled runs
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a sequent; exit 0 if valid, 1 if invalid
    Check {
        #[arg(long, value_parser = parse_logic)]
        logic: LogicId,
        /// Print the proof tree or the countermodel
        #[arg(long)]
        witness: bool,
        /// Sequent such as "p, ~p |- q", or "-" to read stdin
        sequent: String,
    },
    /// Decide a sequent in all four logics
    Classify { sequent: String },
    /// Truth table of a formula, designated rows marked with `*`
    Table {
        #[arg(long, value_parser = parse_logic)]
        logic: LogicId,
        formula: String,
    },
    /// Translate a sequent into CL and compare the BDL and CL verdicts
    Embed { sequent: String },
    /// Stream enumerated sequents valid in one logic and invalid in another
    Diff {
        #[arg(long, value_parser = parse_logic, default_value = "cl")]
        from: LogicId,
        #[arg(long, value_parser = parse_logic, default_value = "bdl")]
        to: LogicId,
        #[arg(long, default_value_t = 2)]
        atoms: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long, default_value_t = 1)]
        per_side: usize,
    },
    /// Cross-check the prover against the matrices over an enumeration
    Selftest {
        #[arg(long, default_value_t = 2)]
        atoms: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        per_side: usize,
        /// Check this many seeded random sequents instead of all of them
        #[arg(long)]
        sample: Option<usize>,
    },
}

fn parse_logic(text: &str) -> Result<LogicId, String> {
    text.parse::<LogicId>().map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("{atoms} atoms exceed --max-atoms {cap}")]
    TooManyAtoms { atoms: usize, cap: usize },
    #[error("reading stdin: {0}")]
    Input(std::io::Error),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("cross-check failed: {0}")]
    CheckFailed(String),
}

impl From<SelftestError> for CliError {
    fn from(e: SelftestError) -> CliError {
        match e {
            SelftestError::Enumeration(e) => CliError::Enumeration(e),
            SelftestError::Semantics(e) => CliError::Semantics(e),
            SelftestError::Embed(e) => CliError::Embed(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Embed(_) | CliError::Input(_) => EXIT_USAGE,
            CliError::Output(_) => EXIT_RESOURCE,
            CliError::Enumeration(EnumerationError::NoAtoms) => EXIT_USAGE,
            CliError::Enumeration(_) | CliError::TooManyAtoms { .. } => EXIT_RESOURCE,
            CliError::Semantics(SemanticsError::TooManyAtoms { .. }) => EXIT_RESOURCE,
            CliError::Semantics(_) => EXIT_USAGE,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

fn read_arg(arg: &str, input: &mut dyn BufRead) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut text = String::new();
    input.read_to_string(&mut text).map_err(CliError::Input)?;
    Ok(text.trim().to_string())
}

fn verdict_word(valid: bool) -> &'static str {
    if valid {
        "VALID"
    } else {
        "INVALID"
    }
}

fn emit(out: &mut dyn Write, value: serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{value}")?;
    Ok(())
}

/// Executes a parsed command line and returns the exit code.
pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<u8, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Check {
            logic,
            witness,
            sequent,
        } => {
            let s = parse_sequent(&read_arg(sequent, input)?)?;
            let started = Instant::now();
            let result = Prover::for_logic(*logic).prove(&s);
            let elapsed = started.elapsed();
            let valid = result.is_valid();
            if json {
                let mut v = json!({
                    "logic": logic,
                    "sequent": s.to_string(),
                    "valid": valid,
                    "elapsed_us": elapsed.as_micros() as u64,
                });
                if *witness {
                    match &result {
                        ProofResult::Valid { proof } => v["proof"] = json!(proof),
                        ProofResult::Invalid {
                            countermodel,
                            open_leaf,
                        } => {
                            v["countermodel"] = json!(countermodel);
                            v["open_leaf"] = json!(open_leaf.to_string());
                        }
                    }
                }
                emit(out, v)?;
            } else {
                writeln!(out, "{}", verdict_word(valid))?;
                if *witness {
                    match &result {
                        ProofResult::Valid { proof } => write!(out, "{}", proof.render())?,
                        ProofResult::Invalid {
                            countermodel,
                            open_leaf,
                        } => {
                            writeln!(out, "countermodel: {countermodel}")?;
                            writeln!(out, "open leaf: {open_leaf}")?;
                        }
                    }
                }
            }
            Ok(if valid { EXIT_VALID } else { EXIT_INVALID })
        }
        Command::Classify { sequent } => {
            let s = parse_sequent(&read_arg(sequent, input)?)?;
            let verdicts = paradef::classify(&s);
            if json {
                emit(out, json!({ "sequent": s.to_string(), "valid": verdicts }))?;
            } else {
                for (id, valid) in &verdicts {
                    writeln!(out, "{:<4} {}", id.name(), if *valid { "✓" } else { "✗" })?;
                }
            }
            Ok(EXIT_VALID)
        }
        Command::Table { logic, formula } => {
            let f = parse_formula(&read_arg(formula, input)?)?;
            let table = truth_table_capped(*logic, &f, cli.max_atoms)?;
            if json {
                emit(out, json!(table))?;
            } else {
                write!(out, "{table}")?;
            }
            Ok(EXIT_VALID)
        }
        Command::Embed { sequent } => {
            let s = parse_sequent(&read_arg(sequent, input)?)?;
            let t = embed_sequent(&s)?;
            let bdl = Prover::for_logic(LogicId::Bdl).is_valid(&s);
            let cl = Prover::for_logic(LogicId::Cl).is_valid(&t);
            if json {
                emit(
                    out,
                    json!({
                        "sequent": s.to_string(),
                        "translation": t.to_string(),
                        "bdl_valid": bdl,
                        "cl_valid": cl,
                    }),
                )?;
            } else {
                writeln!(out, "translation: {t}")?;
                writeln!(out, "BDL: {}", verdict_word(bdl))?;
                writeln!(out, "CL:  {}", verdict_word(cl))?;
            }
            if bdl != cl {
                return Err(CliError::CheckFailed(format!(
                    "BDL and CL verdicts differ on {s} and its translation"
                )));
            }
            Ok(EXIT_VALID)
        }
        Command::Diff {
            from,
            to,
            atoms,
            depth,
            per_side,
        } => diff(cli, *from, *to, *atoms, *depth, *per_side, out),
        Command::Selftest {
            atoms,
            depth,
            per_side,
            sample,
        } => {
            if *atoms > cli.max_atoms {
                return Err(CliError::TooManyAtoms {
                    atoms: *atoms,
                    cap: cli.max_atoms,
                });
            }
            let report = match sample {
                None => run_selftest(SelftestConfig {
                    atoms: *atoms,
                    depth: *depth,
                    per_side: *per_side,
                    cap: DEFAULT_ENUMERATION_CAP,
                })?,
                Some(count) => sampled_selftest(*atoms, *depth, *per_side, *count, cli.seed)?,
            };
            if json {
                emit(out, json!(report))?;
            } else {
                write_report(out, &report)?;
            }
            Ok(if report.passed() {
                EXIT_VALID
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn sampled_selftest(
    atoms: usize,
    depth: usize,
    per_side: usize,
    count: usize,
    seed: u64,
) -> Result<SelftestReport, CliError> {
    let formulas: Vec<Formula> =
        paradef::syntax::enumerate_formulas_capped(atoms, depth, DEFAULT_ENUMERATION_CAP)?
            .collect();
    let n = formulas.len();
    let checker = Checker::new(formulas)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = |rng: &mut ChaCha8Rng| {
        let size = rng.gen_range(0..=per_side.min(n));
        let mut ix = rand::seq::index::sample(rng, n, size).into_vec();
        ix.sort_unstable();
        ix
    };
    let items: Vec<_> = (0..count)
        .map(|_| (side(&mut rng), side(&mut rng)))
        .collect();
    Ok(checker.run(items)?)
}

fn write_report(out: &mut dyn Write, r: &SelftestReport) -> Result<(), CliError> {
    writeln!(out, "formulas: {}", r.formulas)?;
    writeln!(out, "sequents: {}", r.sequents)?;
    for (id, n) in &r.valid {
        writeln!(
            out,
            "{:<4} valid: {n}, prover/matrix disagreements: {}",
            id.name(),
            r.prover_matrix_disagreements[id]
        )?;
    }
    writeln!(
        out,
        "general negation disagreements: {}",
        r.general_negation_disagreements
    )?;
    writeln!(
        out,
        "embedding disagreements: {}",
        r.embedding_disagreements
    )?;
    writeln!(out, "inclusion violations: {}", r.inclusion_violations)?;
    writeln!(
        out,
        "flag variant disagreements: {}",
        r.flag_variant_disagreements
    )?;
    writeln!(
        out,
        "CL-not-BDL sequents: {}, without a b/n countermodel: {}",
        r.cl_not_bdl, r.factorization_violations
    )?;
    writeln!(
        out,
        "countermodels checked: {}, bad: {}",
        r.countermodels_checked, r.bad_countermodels
    )?;
    for e in &r.examples {
        writeln!(out, "failure: {e}")?;
    }
    writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })?;
    Ok(())
}

fn diff(
    cli: &Cli,
    from: LogicId,
    to: LogicId,
    atoms: usize,
    depth: usize,
    per_side: usize,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if atoms > cli.max_atoms {
        return Err(CliError::TooManyAtoms {
            atoms,
            cap: cli.max_atoms,
        });
    }
    let formulas: Vec<Formula> = enumerate_formulas(atoms, depth)?.collect();
    let sides = side_count(formulas.len(), per_side);
    let json = cli.format == Format::Json;
    let source = Prover::for_logic(from);
    let target = Prover::for_logic(to);
    let target_matrix = logic_matrix(to);
    let mut checked = 0u64;
    let mut emitted = 0u64;
    for s in enumerate_sequents_capped(&formulas, per_side, DEFAULT_ENUMERATION_CAP)? {
        checked += 1;
        if !source.is_valid(&s) || target.is_valid(&s) {
            continue;
        }
        let result = target.prove(&s);
        let countermodel = result.countermodel().expect("invalid verdict");
        cross_check(&s, from, to, || {
            refutes(&target_matrix, countermodel, &s).map_err(CliError::from)
        })?;
        emitted += 1;
        if json {
            emit(
                out,
                json!({ "sequent": s.to_string(), "countermodel": countermodel }),
            )?;
        } else {
            writeln!(out, "{s}    {countermodel}")?;
        }
        out.flush()?;
    }
    if !json {
        writeln!(
            out,
            "{emitted} of {checked} sequents ({sides} sides) valid in {from} and invalid in {to}"
        )?;
    }
    Ok(EXIT_VALID)
}

fn cross_check(
    s: &Sequent,
    from: LogicId,
    to: LogicId,
    refuted: impl FnOnce() -> Result<bool, CliError>,
) -> Result<(), CliError> {
    if !matrix_consequence(from, s)? {
        return Err(CliError::CheckFailed(format!(
            "{s} is not valid in the {from} matrix"
        )));
    }
    if matrix_consequence(to, s)? {
        return Err(CliError::CheckFailed(format!(
            "{s} is valid in the {to} matrix"
        )));
    }
    if !refuted()? {
        return Err(CliError::CheckFailed(format!(
            "countermodel for {s} does not refute it in {to}"
        )));
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing
/// errors to `err`.
pub fn run_args<I, T>(
    args: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_VALID
            };
        }
    };
    match run(&cli, input, out) {
        Ok(code) => code,
        // Downstream closed early, as in `paradef diff | head`.
        Err(CliError::Output(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_VALID,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
