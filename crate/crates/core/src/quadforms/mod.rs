//! The quadratic forms f_{α,β}(x) = Tr_d^m(α x^(p^k+1) + β x²): parameter
//! classification, the linearized polynomial φ, the map ψ, ranks, rank
//! census, Gram matrices and diagonalization.

mod family;
mod gram;
mod linalg;
mod params;

pub use family::FormFamily;
pub use gram::{diagonalize, DiagonalForm, SymMatrix};
pub use linalg::rank_mod_p;
pub use params::{CaseLabel, CodeParams};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::par;

/// Counts of nonzero pairs (α, β) with rank s, s-1 and s-2.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RankCensus {
    pub n0: u64,
    pub n1: u64,
    pub n2: u64,
}

impl RankCensus {
    pub fn total(&self) -> u64 {
        self.n0 + self.n1 + self.n2
    }

    /// Counts derived from the kernel structure of φ: rank s-1 pairs number
    /// p^(m-d)(p^m-1), rank s-2 pairs (p^(m-d)-1)(p^m-1)/(p^(2d)-1), and the
    /// rest have full rank.
    pub fn closed_form(params: &CodeParams) -> Result<Self> {
        let CodeParams { p, m, d, .. } = *params;
        let p = p as u128;
        let pm = p.pow(m);
        let n1 = p.pow(m - d) * (pm - 1);
        let num = (p.pow(m - d) - 1) * (pm - 1);
        let den = p.pow(2 * d) - 1;
        if num % den != 0 {
            return Err(Error::InexactDivision(alloc::format!("n2 = {num}/{den}")));
        }
        let n2 = num / den;
        let n0 = pm * pm - 1 - n1 - n2;
        Ok(RankCensus { n0: n0 as u64, n1: n1 as u64, n2: n2 as u64 })
    }

    /// The published closed forms, taken literally. They assign to n1 and n2
    /// the counts that enumeration finds for n2 and n1:
    /// n1 = (p^m-1)(p^(m-1)-1)/(p^(2d)-1), n2 = p^(m-d)(p^m-1).
    /// Returns `None` when n1 is not an integer.
    pub fn published_form(params: &CodeParams) -> Option<Self> {
        let CodeParams { p, m, d, .. } = *params;
        let p = p as u128;
        let pm = p.pow(m);
        let num = (pm - 1) * (p.pow(m - 1) - 1);
        let den = p.pow(2 * d) - 1;
        if !num.is_multiple_of(den) {
            return None;
        }
        let n1 = num / den;
        let n2 = p.pow(m - d) * (pm - 1);
        let n0 = (pm * pm - 1).checked_sub(n1 + n2)?;
        Some(RankCensus { n0: n0 as u64, n1: n1 as u64, n2: n2 as u64 })
    }

    fn merge(self, other: Self) -> Self {
        RankCensus { n0: self.n0 + other.n0, n1: self.n1 + other.n1, n2: self.n2 + other.n2 }
    }
}

impl FormFamily {
    /// Exhaustive rank census over all (α, β) ≠ (0, 0).
    pub fn rank_census(&self, budget: &Budget) -> Result<RankCensus> {
        let q = self.field_size();
        let m = self.params().m as u128;
        budget.check((q as u128).pow(2) * m * m)?;
        let s = self.params().s;
        par::try_fold_range(
            0..q,
            RankCensus::default,
            |mut acc, a| {
                let alpha = self.element(a);
                for b in 0..q {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    match s - self.rank(alpha, self.element(b))? {
                        0 => acc.n0 += 1,
                        1 => acc.n1 += 1,
                        _ => acc.n2 += 1,
                    }
                }
                Ok(acc)
            },
            RankCensus::merge,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldElement;

    #[test]
    fn phi_and_psi_basics() {
        let fam = FormFamily::new(3, 4, 1).unwrap();
        let f = fam.field();
        for x in f.elements() {
            assert!(fam.phi(FieldElement::ZERO, FieldElement::ZERO, x).is_zero());
        }
        for beta in f.nonzero_elements() {
            for x in f.nonzero_elements() {
                assert!(!fam.phi(FieldElement::ZERO, beta, x).is_zero());
            }
        }
        for x in f.nonzero_elements() {
            assert!(fam.psi(FieldElement::ZERO, x).unwrap().is_zero());
        }
        assert_eq!(fam.psi(FieldElement::ONE, FieldElement::ZERO).unwrap_err(), Error::ZeroArgument);
    }

    #[test]
    fn rank_of_pure_beta_is_full() {
        let fam = FormFamily::new(3, 4, 1).unwrap();
        for beta in fam.field().nonzero_elements() {
            assert_eq!(fam.rank(FieldElement::ZERO, beta).unwrap(), 4);
        }
        assert_eq!(fam.rank(FieldElement::ZERO, FieldElement::ZERO).unwrap_err(), Error::BothZero);
    }

    #[test]
    fn closed_census_small() {
        let params = CodeParams::classify(3, 4, 1).unwrap();
        let c = RankCensus::closed_form(&params).unwrap();
        assert_eq!((c.n0, c.n1, c.n2), (4140, 2160, 260));
        let printed = RankCensus::published_form(&params).unwrap();
        assert_eq!((printed.n0, printed.n1, printed.n2), (4140, 260, 2160));
        let a = CodeParams::classify(3, 6, 4).unwrap();
        assert_eq!(RankCensus::published_form(&a), None);
    }
}
