use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::par;
use crate::quadforms::{CaseLabel, CodeParams, FormFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMode {
    Brute,
    Closed,
}

fn both_branches(params: &CodeParams) -> u64 {
    if params.pk_is_1_mod_4() {
        2 * params.p.pow(params.m) - 1
    } else {
        1
    }
}

/// E1 = #{(x, y) : x² + y² = 0, x^(p^k+1) + y^(p^k+1) = 0}.
pub fn count_e1(fam: &FormFamily, mode: CountMode, budget: &Budget) -> Result<u64> {
    let params = fam.params();
    match mode {
        CountMode::Closed => match params.case {
            CaseLabel::CaseA => Ok(2 * params.p.pow(params.m) - 1),
            c if c.is_case_b() => Ok(both_branches(params)),
            c => Err(Error::UnsupportedCase(c)),
        },
        CountMode::Brute => {
            let size = fam.field_size();
            budget.check((size as u128).pow(2))?;
            let f = fam.field();
            Ok(par::fold_range(
                0..size,
                || 0u64,
                |acc, i| {
                    let x = fam.element(i);
                    let (x2, xk) = (fam.square(x), fam.pow_pk1(x));
                    acc + f
                        .elements()
                        .filter(|&y| f.add(x2, fam.square(y)).is_zero() && f.add(xk, fam.pow_pk1(y)).is_zero())
                        .count() as u64
                },
                |a, b| a + b,
            ))
        }
    }
}

/// E2 = #{(x, y, z) : x² + y² - π z² = 0,
/// x^(p^k+1) + y^(p^k+1) + π^((p^k+1)/2) z^(p^k+1) = 0}.
///
/// Brute force is cubic in the field size and is refused above
/// `budget.max_cubic_field`.
pub fn count_e2(fam: &FormFamily, mode: CountMode, budget: &Budget) -> Result<u64> {
    let params = fam.params();
    match mode {
        CountMode::Closed => match params.case {
            c if c.is_case_b() => Ok(both_branches(params)),
            c => Err(Error::UnsupportedCase(c)),
        },
        CountMode::Brute => {
            let size = fam.field_size();
            if size > budget.max_cubic_field {
                return Err(Error::BudgetExceeded {
                    required: (size as u128).pow(3),
                    limit: (budget.max_cubic_field as u128).pow(3),
                });
            }
            budget.check((size as u128).pow(3))?;
            let f = fam.field();
            let pi = f.primitive_element();
            let c = f.exp(fam.half_pk1_exponent());
            // Tabulate -π z² and π^((p^k+1)/2) z^(p^k+1) so the inner loop is a lookup.
            let zs: alloc::vec::Vec<_> =
                f.elements().map(|z| (f.neg(f.mul(pi, fam.square(z))), f.mul(c, fam.pow_pk1(z)))).collect();
            Ok(par::fold_range(
                0..size,
                || 0u64,
                |mut acc, i| {
                    let x = fam.element(i);
                    for y in f.elements() {
                        let s2 = f.add(fam.square(x), fam.square(y));
                        let sk = f.add(fam.pow_pk1(x), fam.pow_pk1(y));
                        acc += zs.iter().filter(|&&(a, b)| f.add(s2, a).is_zero() && f.add(sk, b).is_zero()).count()
                            as u64;
                    }
                    acc
                },
                |a, b| a + b,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e1_closed_values() {
        let b = Budget::default();
        let fam = FormFamily::new(3, 6, 4).unwrap();
        assert_eq!(count_e1(&fam, CountMode::Closed, &b).unwrap(), 1457);
        let fam = FormFamily::new(3, 4, 1).unwrap();
        assert_eq!(count_e1(&fam, CountMode::Closed, &b).unwrap(), 1);
        let fam = FormFamily::new(3, 3, 1).unwrap();
        assert!(matches!(count_e1(&fam, CountMode::Closed, &b), Err(Error::UnsupportedCase(_))));
    }

    #[test]
    fn e2_closed_values() {
        let b = Budget::default();
        let fam = FormFamily::new(5, 4, 1).unwrap();
        assert_eq!(count_e2(&fam, CountMode::Closed, &b).unwrap(), 1249);
        let fam = FormFamily::new(3, 6, 4).unwrap();
        assert!(matches!(count_e2(&fam, CountMode::Closed, &b), Err(Error::UnsupportedCase(_))));
    }

    #[test]
    fn e2_brute_refused_above_cubic_limit() {
        let fam = FormFamily::new(3, 6, 1).unwrap();
        let err = count_e2(&fam, CountMode::Brute, &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
