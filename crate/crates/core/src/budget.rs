use crate::error::{Error, Result};

/// Ceiling on exhaustive enumerations, measured in abstract work units
/// (coordinate checks, character-sum terms, rank evaluations).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_work: u128,
    /// Largest field size for which the cubic E2 enumeration runs.
    pub max_cubic_field: u64,
}

impl Budget {
    pub const DEFAULT_MAX_WORK: u128 = 2_000_000_000;
    pub const DEFAULT_MAX_CUBIC_FIELD: u64 = 81;

    pub fn unlimited() -> Self {
        Budget { max_work: u128::MAX, max_cubic_field: u64::MAX }
    }

    pub fn with_max_work(max_work: u128) -> Self {
        Budget { max_work, ..Budget::default() }
    }

    pub fn check(&self, required: u128) -> Result<()> {
        if required > self.max_work {
            return Err(Error::BudgetExceeded { required, limit: self.max_work });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_work: Self::DEFAULT_MAX_WORK, max_cubic_field: Self::DEFAULT_MAX_CUBIC_FIELD }
    }
}
