//! Command-line front end and file formats for `pcyclic-core`.

pub mod format;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pcyclic_core::codes::{code_report, CyclicCode, Engine};
use pcyclic_core::expsums::{s_census_fast, s_distribution_closed, t_census_fast, t_distribution_closed, DirectSums};
use pcyclic_core::gf::FieldOptions;
use pcyclic_core::quadforms::RankCensus;
use pcyclic_core::{Budget, Error};

use format::{DistributionDocument, OutputFormat, ValueDocument};
use verify::{run_check, CheckName, Status};

/// Exit-code contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass = 0,
    Mismatch = 1,
    InvalidParameters = 2,
    Refused = 3,
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        ExitCode::from(o as u8)
    }
}

#[derive(Debug, Parser)]
#[command(name = "pcyclic", version, about = "Weight distributions of two-zero p-ary cyclic codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters, case label and polynomials of the code.
    Analyze(Common),
    /// Weight distribution from one or more engines.
    Weights {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', default_value = "closed")]
        engines: Vec<EngineArg>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Value census of T or S.
    Sums {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "s")]
        sum: SumArg,
        #[arg(long, value_enum, default_value = "closed")]
        source: SourceArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run named checks; one line per check.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Defaults to every check, skipping those over budget.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<CheckName>,
    },
    /// Rank census (n0, n1, n2) by enumeration, with the closed form.
    Census(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    /// Worker threads for the enumerations.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Enumeration budget in work units.
    #[arg(long)]
    pub budget: Option<u128>,
    /// Use the i-th smallest irreducible modulus (0-based).
    #[arg(long, default_value_t = 0)]
    pub modulus_index: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Brute,
    Sums,
    Closed,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Brute => Engine::Brute,
            EngineArg::Sums => Engine::Sums,
            EngineArg::Closed => Engine::Closed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumArg {
    T,
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Direct,
    Fast,
    Closed,
}

/// Everything one invocation needs after argument parsing.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub workers: usize,
    pub budget: Budget,
    pub modulus_index: usize,
}

impl From<&Common> for RunConfig {
    fn from(c: &Common) -> Self {
        RunConfig {
            p: c.p,
            m: c.m,
            k: c.k,
            workers: c.workers as usize,
            budget: c.budget.map_or_else(Budget::default, Budget::with_max_work),
            modulus_index: c.modulus_index,
        }
    }
}

impl RunConfig {
    fn build_code(&self) -> Result<CyclicCode, Error> {
        let opts = FieldOptions { modulus_index: self.modulus_index, ..FieldOptions::default() };
        CyclicCode::with_options(self.p, self.m, self.k, opts)
    }
}

fn is_refusal(e: &Error) -> bool {
    matches!(e, Error::BudgetExceeded { .. } | Error::UnsupportedCase(_))
}

fn classify_error(e: &Error) -> Outcome {
    if is_refusal(e) {
        Outcome::Refused
    } else if matches!(e, Error::InternalInconsistency(_) | Error::NonRationalSum | Error::NonIntegralWeight) {
        Outcome::Mismatch
    } else {
        Outcome::InvalidParameters
    }
}

/// Combines outcomes; a mismatch outranks a refusal.
fn worse(a: Outcome, b: Outcome) -> Outcome {
    let rank = |o| match o {
        Outcome::Pass => 0,
        Outcome::Refused => 1,
        Outcome::Mismatch => 2,
        Outcome::InvalidParameters => 3,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn emit(out: &OutputArgs, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &out.output {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

/// Runs a parsed command, writing the payload to `stdout` and diagnostics to
/// `stderr`.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let common = match &cli.command {
        Command::Analyze(c) | Command::Census(c) => c,
        Command::Weights { common, .. } | Command::Sums { common, .. } | Command::Verify { common, .. } => common,
    };
    let config = RunConfig::from(common);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(config.workers).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return Outcome::InvalidParameters;
        }
    };
    let code = match config.build_code() {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return classify_error(&e);
        }
    };
    let mut out_buf = Vec::new();
    let mut err_buf = Vec::new();
    let result = pool.install(|| dispatch(&cli.command, &config, &code, &mut out_buf, &mut err_buf));
    let flushed = stdout.write_all(&out_buf).and_then(|_| stderr.write_all(&err_buf));
    match flushed.and(result) {
        Ok(outcome) => outcome,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            Outcome::Mismatch
        }
    }
}

fn dispatch(
    command: &Command,
    config: &RunConfig,
    code: &CyclicCode,
    stdout: &mut Vec<u8>,
    stderr: &mut Vec<u8>,
) -> std::io::Result<Outcome> {
    let params = *code.params();
    let budget = &config.budget;
    match command {
        Command::Analyze(_) => {
            writeln!(stdout, "p = {}, m = {}, k = {}", params.p, params.m, params.k)?;
            writeln!(stdout, "d = {}, s = {}, q = {}, q* = {}", params.d, params.s, params.q, params.q_star())?;
            writeln!(stdout, "case = {}", params.case)?;
            writeln!(stdout, "[{}, {}]", code.length(), code.dimension())?;
            writeln!(stdout, "modulus = {}", code.field().modulus())?;
            writeln!(stdout, "h1 = {}", code.h1())?;
            writeln!(stdout, "h2 = {}", code.h2())?;
            writeln!(stdout, "g = {}", code.generator())?;
            Ok(Outcome::Pass)
        }
        Command::Weights { engines, out, .. } => {
            let engines: Vec<Engine> = engines.iter().map(|&e| e.into()).collect();
            let report = code_report(code, &engines, budget);
            let mut outcome = Outcome::Pass;
            for run in &report.runs {
                if let Err(e) = &run.result {
                    writeln!(stderr, "{}: {e}", run.engine)?;
                    outcome = worse(outcome, classify_error(e));
                }
            }
            let verdicts = report.agreement();
            let ok: Vec<_> = report.distributions().collect();
            for &(a, b, same) in &verdicts {
                writeln!(stderr, "{a} vs {b}: {}", if same { "agree" } else { "DISAGREE" })?;
                if !same {
                    let da = ok.iter().find(|d| d.engine() == a).expect("ran");
                    let db = ok.iter().find(|d| d.engine() == b).expect("ran");
                    for (w, x, y) in da.diff(db) {
                        writeln!(stderr, "  weight {w}: {a} {x}, {b} {y}")?;
                    }
                }
            }
            if verdicts.iter().any(|v| !v.2) {
                outcome = Outcome::Mismatch;
            }
            if let Some(first) = ok.first() {
                let doc = DistributionDocument::new(&params, first).with_agreement(&verdicts);
                emit(out, &doc.render(out.format), stdout)?;
                writeln!(stderr, "{}", report.summary_line())?;
            }
            Ok(outcome)
        }
        Command::Sums { sum, source, out, .. } => {
            let fam = code.family();
            let dist = match (sum, source) {
                (SumArg::T, SourceArg::Closed) => t_distribution_closed(&params),
                (SumArg::S, SourceArg::Closed) => s_distribution_closed(&params),
                (SumArg::T, SourceArg::Fast) => t_census_fast(fam, budget),
                (SumArg::S, SourceArg::Fast) => s_census_fast(fam, budget),
                (SumArg::T, SourceArg::Direct) => DirectSums::compute(fam, budget).and_then(|d| d.t_census(fam)),
                (SumArg::S, SourceArg::Direct) => DirectSums::compute(fam, budget).and_then(|d| d.s_census(fam)),
            };
            match dist {
                Ok(dist) => {
                    let name = if *sum == SumArg::T { "T" } else { "S" };
                    let src = format!("{source:?}").to_lowercase();
                    emit(out, &ValueDocument::new(&params, name, &src, &dist).render(out.format), stdout)?;
                    Ok(Outcome::Pass)
                }
                Err(e) => {
                    writeln!(stderr, "error: {e}")?;
                    Ok(classify_error(&e))
                }
            }
        }
        Command::Verify { checks, .. } => {
            let explicit = !checks.is_empty();
            let selected: Vec<CheckName> = if explicit { checks.clone() } else { CheckName::ALL.to_vec() };
            let (mut failed, mut refused) = (false, false);
            for check in selected {
                for line in run_check(code, check, budget) {
                    writeln!(stdout, "{line}")?;
                    match line.status {
                        Status::Fail => failed = true,
                        Status::Refused(_) if explicit => refused = true,
                        _ => {}
                    }
                }
            }
            Ok(if failed {
                Outcome::Mismatch
            } else if refused {
                Outcome::Refused
            } else {
                Outcome::Pass
            })
        }
        Command::Census(_) => match code.family().rank_census(budget) {
            Ok(c) => {
                writeln!(stdout, "enumerated: n0 = {}, n1 = {}, n2 = {}", c.n0, c.n1, c.n2)?;
                match RankCensus::closed_form(&params) {
                    Ok(f) => writeln!(stdout, "closed:     n0 = {}, n1 = {}, n2 = {}", f.n0, f.n1, f.n2)?,
                    Err(e) => writeln!(stdout, "closed:     unavailable ({e})")?,
                }
                Ok(Outcome::Pass)
            }
            Err(e) => {
                writeln!(stderr, "error: {e}")?;
                Ok(classify_error(&e))
            }
        },
    }
}
