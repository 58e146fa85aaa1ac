//! Exact exponential sums T(α, β) and S(α, β) in Z[ζ_p], their symbolic
//! normal forms, closed-form value distributions, the solution counts E1 and
//! E2, and the power-moment identities.

mod counts;
mod cyclotomic;
mod distribution;
mod identities;
mod sums;
mod symbolic;

pub use counts::{count_e1, count_e2, CountMode};
pub use cyclotomic::{gauss_sum, CyclotomicInteger};
pub use distribution::{s_distribution_closed, t_distribution_closed, ValueDistribution};
pub use identities::{verify_power_identities, IdentityCheck};
pub use sums::{quadratic_gauss_sum, s_census_fast, s_direct, s_fast, t_census_fast, t_direct, t_fast, DirectSums};
pub use symbolic::SymbolicSumValue;

pub(crate) use distribution::{div_exact, Powers};
