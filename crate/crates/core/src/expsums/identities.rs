use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::cyclotomic::CyclotomicInteger;
use super::sums::DirectSums;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::quadforms::{CaseLabel, CodeParams, FormFamily};

/// One power-moment identity with both sides evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: CyclotomicInteger,
    pub rhs: CyclotomicInteger,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: lhs = {}, rhs = {}", self.name, self.lhs, self.rhs)
    }
}

/// Moments of S over all pairs, plus first and second moments restricted to
/// the pairs of rank s-1 (N1) and s-2 (N2).
struct Moments {
    s1: CyclotomicInteger,
    s2: CyclotomicInteger,
    s3: CyclotomicInteger,
    n1: [CyclotomicInteger; 2],
    n2: [CyclotomicInteger; 2],
}

fn moments(fam: &FormFamily, sums: &DirectSums) -> Result<Moments> {
    let p = fam.params().p as u32;
    let s = fam.params().s;
    let z = || CyclotomicInteger::zero(p);
    let mut acc = Moments { s1: z(), s2: z(), s3: z(), n1: [z(), z()], n2: [z(), z()] };
    for (a, b) in sums.pairs() {
        let v = sums.s(fam, a, b);
        let sq = v.mul(&v);
        acc.s3 = acc.s3.add(&sq.mul(&v));
        if !(a.is_zero() && b.is_zero()) {
            let bucket = match s - fam.rank(a, b)? {
                1 => Some(&mut acc.n1),
                2 => Some(&mut acc.n2),
                _ => None,
            };
            if let Some([first, second]) = bucket {
                *first = first.add(&v);
                *second = second.add(&sq);
            }
        }
        acc.s1 = acc.s1.add(&v);
        acc.s2 = acc.s2.add(&sq);
    }
    Ok(acc)
}

/// Checks the power-moment identities of S: two for CaseA, four for CaseB.
/// Left sides are exact sums of S_direct over every pair.
pub fn verify_power_identities(fam: &FormFamily, budget: &Budget) -> Result<Vec<IdentityCheck>> {
    let params = *fam.params();
    if !params.case.has_closed_form() {
        return Err(Error::UnsupportedCase(params.case));
    }
    let sums = DirectSums::compute(fam, budget)?;
    let mo = moments(fam, &sums)?;
    let CodeParams { p, m, d, .. } = params;
    let pc = p as u32;
    let pw = |e: u32| (p as i128).pow(e);
    let int = |n: i128| CyclotomicInteger::from_int(pc, n);
    let pm = pw(m);
    let pd = pw(d);
    let weighted = |i: usize| mo.n1[i].scale(pd - 1).add(&mo.n2[i].scale(pd * pd - 1));
    let check =
        |name: &str, lhs: CyclotomicInteger, rhs: i128| IdentityCheck { name: String::from(name), lhs, rhs: int(rhs) };
    let mut out = Vec::new();
    if params.case == CaseLabel::CaseA {
        out.push(check("sum S^2 = 4p^(3m)", mo.s2.clone(), 4 * pw(3 * m)));
        out.push(check(
            "(p^d-1) sum_N1 S^2 + (p^2d-1) sum_N2 S^2",
            weighted(1),
            pm * (pm - 1) * (2 * pw(m + d) - 2 * pm + 2 * pd - pd * pd - 1),
        ));
    } else {
        let one = params.pk_is_1_mod_4();
        out.push(check("sum S = 2p^(2m)", mo.s1.clone(), 2 * pw(2 * m)));
        out.push(check("sum S^2", mo.s2.clone(), if one { 4 * pw(3 * m) } else { 4 * pw(2 * m) }));
        let cube = if one {
            2 * pw(2 * m) * (7 * pm - 3) + 2 * pw(2 * m + d) * (pm - 1)
        } else {
            2 * pw(2 * m) * (pm + 3) + 2 * pw(2 * m + d) * (pm - 1)
        };
        out.push(check("sum S^3", mo.s3.clone(), cube));
        out.push(check("(p^d-1) sum_N1 S + (p^2d-1) sum_N2 S", weighted(0), pm * (pd - 1) * (pm - 1)));
    }
    Ok(out)
}
