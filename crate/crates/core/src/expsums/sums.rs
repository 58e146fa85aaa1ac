use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::cyclotomic::CyclotomicInteger;
use super::distribution::ValueDistribution;
use super::symbolic::SymbolicSumValue;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::par;
use crate::quadforms::{diagonalize, CodeParams, FormFamily};

/// T(α, β) = Σ_x ζ^Tr(α x^(p^k+1) + β x²), from the count of each trace value.
pub fn t_direct(fam: &FormFamily, alpha: FieldElement, beta: FieldElement) -> CyclotomicInteger {
    let f = fam.field();
    let p = f.characteristic();
    let mut counts = vec![0i128; p as usize];
    for x in f.elements() {
        counts[f.abs_trace(fam.inner(alpha, beta, x)) as usize] += 1;
    }
    CyclotomicInteger::from_full(p, &counts)
}

/// Σ_{z ∈ F_q} ζ^Tr(z²) = (-1)^(d-1) g_p^d as a symbolic value.
pub fn quadratic_gauss_sum(p: u64, d: u32) -> SymbolicSumValue {
    let p_star_negative = p % 4 == 3;
    if d.is_multiple_of(2) {
        // g_p^d = (p*)^(d/2)
        let mut v = (p as i128).pow(d / 2);
        if p_star_negative && (d / 2) % 2 == 1 {
            v = -v;
        }
        SymbolicSumValue::integer(p, d, -v)
    } else {
        // g_p^d = g_p (p*)^((d-1)/2) = ±g_p p^((d-1)/2)
        let sign = if p_star_negative && ((d - 1) / 2) % 2 == 1 { -1 } else { 1 };
        SymbolicSumValue::from_parts(p, d, 0, sign)
    }
}

/// T(α, β) through the F_q-diagonalization of the form: a rank-r form with
/// discriminant δ gives η_d(δ) G_d^r q^(s-r).
pub fn t_fast(fam: &FormFamily, alpha: FieldElement, beta: FieldElement) -> SymbolicSumValue {
    let CodeParams { p, m, d, s, q, .. } = *fam.params();
    if alpha.is_zero() && beta.is_zero() {
        return SymbolicSumValue::integer(p, d, (p as i128).pow(m));
    }
    let f = fam.field();
    let diag = diagonalize(f, &fam.gram_matrix(alpha, beta));
    let r = diag.rank() as u32;
    let eps = diag.discriminant_character(f, d).expect("discriminant is a nonzero element of F_q");
    quadratic_gauss_sum(p, d).pow(r).scale(eps as i128 * (q as i128).pow(s - r))
}

pub fn s_direct(fam: &FormFamily, alpha: FieldElement, beta: FieldElement) -> CyclotomicInteger {
    let (a2, b2) = fam.twist(alpha, beta);
    t_direct(fam, alpha, beta).add(&t_direct(fam, a2, b2))
}

/// S(α, β) = T(α, β) + T(π^((p^k+1)/2) α, -π β). Both terms lie in Z + Z√q*,
/// so their sum is again a single normal-form value.
pub fn s_fast(fam: &FormFamily, alpha: FieldElement, beta: FieldElement) -> SymbolicSumValue {
    let (a2, b2) = fam.twist(alpha, beta);
    t_fast(fam, alpha, beta) + t_fast(fam, a2, b2)
}

fn to_symbolic(c: &CyclotomicInteger, d: u32) -> Result<SymbolicSumValue> {
    SymbolicSumValue::from_cyclotomic(c, d)
        .ok_or_else(|| Error::InternalInconsistency(alloc::format!("sum {c} is outside Z + Z√q*")))
}

fn census_of(counts: BTreeMap<CyclotomicInteger, u64>, d: u32) -> Result<ValueDistribution> {
    let rows = counts.iter().map(|(c, &n)| Ok((to_symbolic(c, d)?, n))).collect::<Result<Vec<_>>>()?;
    Ok(ValueDistribution::from_rows(rows))
}

/// T_direct for every pair (α, β), indexed by α·p^m + β.
#[derive(Debug, Clone)]
pub struct DirectSums {
    size: u64,
    t: Vec<CyclotomicInteger>,
}

impl DirectSums {
    /// Costs p^(3m) field operations.
    pub fn compute(fam: &FormFamily, budget: &Budget) -> Result<Self> {
        let size = fam.field_size();
        budget.check((size as u128).pow(3))?;
        let t = par::map_range(0..size * size, |i| t_direct(fam, fam.element(i / size), fam.element(i % size)));
        Ok(DirectSums { size, t })
    }

    pub fn field_size(&self) -> u64 {
        self.size
    }

    pub fn t(&self, alpha: FieldElement, beta: FieldElement) -> &CyclotomicInteger {
        &self.t[(alpha.code() as u64 * self.size + beta.code() as u64) as usize]
    }

    pub fn s(&self, fam: &FormFamily, alpha: FieldElement, beta: FieldElement) -> CyclotomicInteger {
        let (a2, b2) = fam.twist(alpha, beta);
        self.t(alpha, beta).add(self.t(a2, b2))
    }

    /// Every pair as (α, β).
    pub fn pairs(&self) -> impl Iterator<Item = (FieldElement, FieldElement)> + '_ {
        let size = self.size;
        (0..size * size).map(move |i| (FieldElement((i / size) as u32), FieldElement((i % size) as u32)))
    }

    pub fn t_census(&self, fam: &FormFamily) -> Result<ValueDistribution> {
        let mut counts = BTreeMap::new();
        for c in &self.t {
            *counts.entry(c.clone()).or_insert(0u64) += 1;
        }
        census_of(counts, fam.params().d)
    }

    pub fn s_census(&self, fam: &FormFamily) -> Result<ValueDistribution> {
        let mut counts = BTreeMap::new();
        for (a, b) in self.pairs() {
            *counts.entry(self.s(fam, a, b)).or_insert(0u64) += 1;
        }
        census_of(counts, fam.params().d)
    }
}

fn fast_census<F>(fam: &FormFamily, budget: &Budget, value: F) -> Result<ValueDistribution>
where
    F: Fn(FieldElement, FieldElement) -> SymbolicSumValue + Sync + Send,
{
    let size = fam.field_size();
    let m = fam.params().m as u128;
    budget.check((size as u128).pow(2) * m * m)?;
    let counts = par::fold_range(
        0..size,
        BTreeMap::<SymbolicSumValue, u64>::new,
        |mut acc, a| {
            let alpha = fam.element(a);
            for b in 0..size {
                *acc.entry(value(alpha, fam.element(b))).or_default() += 1;
            }
            acc
        },
        |mut x, y| {
            for (v, n) in y {
                *x.entry(v).or_default() += n;
            }
            x
        },
    );
    Ok(ValueDistribution::from_rows(counts))
}

/// Census of T over all pairs via [`t_fast`].
pub fn t_census_fast(fam: &FormFamily, budget: &Budget) -> Result<ValueDistribution> {
    fast_census(fam, budget, |a, b| t_fast(fam, a, b))
}

/// Census of S over all pairs via [`s_fast`].
pub fn s_census_fast(fam: &FormFamily, budget: &Budget) -> Result<ValueDistribution> {
    fast_census(fam, budget, |a, b| s_fast(fam, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expsums::gauss_sum;

    #[test]
    fn gauss_sum_over_subfield_matches_direct() {
        for (p, d) in [(3u64, 1u32), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 3)] {
            let f = crate::gf::FiniteField::new(p, d).unwrap();
            let mut counts = vec![0i128; p as usize];
            for x in f.elements() {
                counts[f.abs_trace(f.mul(x, x)) as usize] += 1;
            }
            let direct = CyclotomicInteger::from_full(p as u32, &counts);
            assert_eq!(quadratic_gauss_sum(p, d).cyclotomic(), direct, "p={p} d={d}");
        }
        assert_eq!(quadratic_gauss_sum(3, 1).cyclotomic(), gauss_sum(3));
    }

    #[test]
    fn trivial_pair() {
        let fam = FormFamily::new(3, 4, 1).unwrap();
        let z = FieldElement::ZERO;
        assert_eq!(t_direct(&fam, z, z).as_rational(), Some(81));
        assert_eq!(t_fast(&fam, z, z), SymbolicSumValue::new(3, 1, 1, 0, 4));
        assert_eq!(s_fast(&fam, z, z).as_integer(), Some(162));
    }

    #[test]
    fn conjugation_reverses_coefficients() {
        let fam = FormFamily::new(3, 4, 1).unwrap();
        let f = fam.field();
        let (a, b) = (f.exp(5), f.exp(17));
        let t = t_direct(&fam, a, b);
        let t_neg = t_direct(&fam, f.neg(a), f.neg(b));
        assert_eq!(t.conj(), t_neg);
    }

    #[test]
    fn fast_matches_direct_sample() {
        let fam = FormFamily::new(3, 4, 1).unwrap();
        for i in (0..81).step_by(7) {
            for j in (0..81).step_by(5) {
                let (a, b) = (fam.element(i), fam.element(j));
                assert_eq!(t_fast(&fam, a, b).cyclotomic(), t_direct(&fam, a, b), "({i},{j})");
            }
        }
    }
}
