use alloc::string::String;

use crate::quadforms::CaseLabel;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {p}^{m} exceeds the table budget of {limit} elements")]
    DegreeTooLarge { p: u64, m: u32, limit: u64 },
    #[error("no irreducible modulus with index {index} exists for degree {m}")]
    ModulusIndexOutOfRange { m: u32, index: usize },
    #[error("no primitive element with index {0} exists")]
    PrimitiveIndexOutOfRange(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{l} does not divide {m}")]
    NotADivisor { l: u32, m: u32 },
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("element does not lie in the subfield of degree {0}")]
    NotInSubfield(u32),
    #[error("s = m/gcd(m,k) = {s} < 3")]
    STooSmall { s: u32 },
    #[error("k must be a positive integer")]
    ZeroK,
    #[error("(alpha, beta) = (0, 0) is not allowed here")]
    BothZero,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("enumeration needs {required} work units, budget is {limit}")]
    BudgetExceeded { required: u128, limit: u128 },
    #[error("no closed form for parameter case {0}")]
    UnsupportedCase(CaseLabel),
    #[error("h1 and h2 are not distinct polynomials of degree m")]
    DistinctnessViolated,
    #[error("sum over u of S(u alpha, u beta) is not rational")]
    NonRationalSum,
    #[error("weight formula produced a non-integral or out-of-range weight")]
    NonIntegralWeight,
    #[error("closed-form arithmetic for p = {p}, m = {m} exceeds 128-bit range")]
    ClosedFormOverflow { p: u64, m: u32 },
    #[error("inexact division in closed-form frequency: {0}")]
    InexactDivision(String),
}
