//! The cyclic code itself: construction, codewords, and weight distributions
//! from three independent engines.

mod code;
mod report;
mod weights;

pub use code::{shift_right, CyclicCode};
pub use report::{code_report, run_engine, CodeReport, EngineRun};
pub use weights::{
    weight_distribution_brute, weight_distribution_closed, weight_distribution_sums, Engine, WeightDistribution,
};
