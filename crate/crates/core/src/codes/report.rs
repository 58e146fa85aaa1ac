use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::code::CyclicCode;
use super::weights::{
    weight_distribution_brute, weight_distribution_closed, weight_distribution_sums, Engine, WeightDistribution,
};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Outcome of one engine run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineRun {
    pub engine: Engine,
    pub result: Result<WeightDistribution>,
}

/// Summary of a code and of every distribution engine that was asked for.
#[derive(Debug, Clone)]
pub struct CodeReport {
    pub params: crate::quadforms::CodeParams,
    pub length: u64,
    pub dimension: u32,
    pub h1: String,
    pub h2: String,
    pub generator: String,
    pub runs: Vec<EngineRun>,
}

pub fn run_engine(code: &CyclicCode, engine: Engine, budget: &Budget) -> Result<WeightDistribution> {
    match engine {
        Engine::Brute => weight_distribution_brute(code, budget),
        Engine::Sums => weight_distribution_sums(code, budget),
        Engine::Closed => weight_distribution_closed(code.params()),
    }
}

pub fn code_report(code: &CyclicCode, engines: &[Engine], budget: &Budget) -> CodeReport {
    CodeReport {
        params: *code.params(),
        length: code.length(),
        dimension: code.dimension(),
        h1: alloc::format!("{}", code.h1()),
        h2: alloc::format!("{}", code.h2()),
        generator: alloc::format!("{}", code.generator()),
        runs: engines.iter().map(|&engine| EngineRun { engine, result: run_engine(code, engine, budget) }).collect(),
    }
}

impl CodeReport {
    pub fn distributions(&self) -> impl Iterator<Item = &WeightDistribution> {
        self.runs.iter().filter_map(|r| r.result.as_ref().ok())
    }

    /// Pairwise verdicts between engines that produced a distribution.
    pub fn agreement(&self) -> Vec<(Engine, Engine, bool)> {
        let ok: Vec<&WeightDistribution> = self.distributions().collect();
        let mut out = Vec::new();
        for (i, a) in ok.iter().enumerate() {
            for b in &ok[i + 1..] {
                out.push((a.engine(), b.engine(), a.same_multiset(b)));
            }
        }
        out
    }

    pub fn all_agree(&self) -> bool {
        self.agreement().iter().all(|&(_, _, same)| same)
    }

    pub fn min_distance(&self) -> Option<u64> {
        self.distributions().next().and_then(WeightDistribution::min_distance)
    }

    /// "[n, k, d]", or "[n, k]" when no distribution is available.
    pub fn summary_line(&self) -> String {
        match self.min_distance() {
            Some(d) => alloc::format!("[{}, {}, {}]", self.length, self.dimension, d),
            None => alloc::format!("[{}, {}]", self.length, self.dimension),
        }
    }

    /// First refusal among the runs, if any.
    pub fn first_error(&self) -> Option<&Error> {
        self.runs.iter().find_map(|r| r.result.as_ref().err())
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} case {}", self.summary_line(), self.params.case)?;
        writeln!(f, "h1 = {}", self.h1)?;
        writeln!(f, "h2 = {}", self.h2)?;
        for run in &self.runs {
            match &run.result {
                Ok(d) => writeln!(f, "{}: {} weights", run.engine, d.rows().len())?,
                Err(e) => writeln!(f, "{}: unavailable ({e})", run.engine)?,
            }
        }
        for (a, b, same) in self.agreement() {
            writeln!(f, "{a} vs {b}: {}", if same { "agree" } else { "DISAGREE" })?;
        }
        Ok(())
    }
}
