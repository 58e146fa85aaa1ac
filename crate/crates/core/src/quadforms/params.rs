use core::fmt;

use crate::arith::{self, v2};
use crate::error::{Error, Result};

/// Which closed-form regime a parameter triple falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    /// 1 <= v2(m) < v2(k): weights from the CaseA table.
    CaseA,
    /// v2(k) < v2(m), k odd: weights from the odd-k table.
    CaseBOddK,
    /// v2(k) < v2(m), k even: weights from the even-k table.
    CaseBEvenK,
    /// v2(m) = v2(k), or m odd with k even. Only the enumeration engines apply.
    OddSOutOfScope,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::CaseA => "CaseA",
            CaseLabel::CaseBOddK => "CaseB-odd-k",
            CaseLabel::CaseBEvenK => "CaseB-even-k",
            CaseLabel::OddSOutOfScope => "OddS-out-of-scope",
        }
    }

    pub fn is_case_b(self) -> bool {
        matches!(self, CaseLabel::CaseBOddK | CaseLabel::CaseBEvenK)
    }

    pub fn has_closed_form(self) -> bool {
        self != CaseLabel::OddSOutOfScope
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The parameter triple (p, m, k) with its derived quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    /// gcd(m, k)
    pub d: u32,
    /// m / d
    pub s: u32,
    /// p^d
    pub q: u64,
    pub case: CaseLabel,
}

impl CodeParams {
    pub fn classify(p: u64, m: u32, k: u32) -> Result<Self> {
        if p == 2 || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let d = arith::gcd(m as u64, k as u64) as u32;
        let s = m / d;
        if s < 3 {
            return Err(Error::STooSmall { s });
        }
        let (vm, vk) = (v2(m as u64), v2(k as u64));
        let case = if vm >= 1 && vm < vk {
            CaseLabel::CaseA
        } else if vk < vm {
            if k % 2 == 1 {
                CaseLabel::CaseBOddK
            } else {
                CaseLabel::CaseBEvenK
            }
        } else {
            CaseLabel::OddSOutOfScope
        };
        let q = arith::checked_pow(p, d).ok_or(Error::DegreeTooLarge { p, m: d, limit: u64::MAX })?;
        Ok(CodeParams { p, m, k, d, s, q, case })
    }

    /// q* = (-1)^((q-1)/2) q.
    pub fn q_star(&self) -> i128 {
        if self.q % 4 == 1 {
            self.q as i128
        } else {
            -(self.q as i128)
        }
    }

    /// Whether p^k ≡ 1 (mod 4).
    pub fn pk_is_1_mod_4(&self) -> bool {
        self.p % 4 == 1 || self.k.is_multiple_of(2)
    }

    /// p^m - 1, the code length.
    pub fn length(&self) -> u64 {
        self.p.pow(self.m) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        let a = CodeParams::classify(3, 6, 4).unwrap();
        assert_eq!((a.case, a.d, a.s, a.q), (CaseLabel::CaseA, 2, 3, 9));
        let b = CodeParams::classify(3, 6, 1).unwrap();
        assert_eq!((b.case, b.d, b.s), (CaseLabel::CaseBOddK, 1, 6));
        let c = CodeParams::classify(3, 3, 1).unwrap();
        assert_eq!(c.case, CaseLabel::OddSOutOfScope);
        assert_eq!(CodeParams::classify(3, 8, 2).unwrap().case, CaseLabel::CaseBEvenK);
        assert_eq!(CodeParams::classify(3, 3, 2).unwrap().case, CaseLabel::OddSOutOfScope);
        assert_eq!(CodeParams::classify(3, 4, 1).unwrap().case, CaseLabel::CaseBOddK);
    }

    #[test]
    fn classification_errors() {
        assert_eq!(CodeParams::classify(3, 2, 1).unwrap_err(), Error::STooSmall { s: 2 });
        assert_eq!(CodeParams::classify(3, 6, 3).unwrap_err(), Error::STooSmall { s: 2 });
        assert_eq!(CodeParams::classify(4, 6, 1).unwrap_err(), Error::NotOddPrime(4));
    }

    #[test]
    fn q_star_sign() {
        assert_eq!(CodeParams::classify(3, 4, 1).unwrap().q_star(), -3);
        assert_eq!(CodeParams::classify(3, 6, 4).unwrap().q_star(), 9);
        assert_eq!(CodeParams::classify(5, 4, 1).unwrap().q_star(), 5);
    }
}
