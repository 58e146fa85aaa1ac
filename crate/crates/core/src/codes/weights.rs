use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::code::CyclicCode;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::expsums::{div_exact, s_fast, CyclotomicInteger, Powers, SymbolicSumValue};
use crate::par;
use crate::quadforms::{CaseLabel, CodeParams};

/// Which method produced a distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Engine {
    Brute,
    Sums,
    Closed,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Brute, Engine::Sums, Engine::Closed];

    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Sums => "sums",
            Engine::Closed => "closed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Engine::ALL.into_iter().find(|e| e.as_str() == s)
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sorted (weight, frequency) rows with zero frequencies dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    rows: Vec<(u64, u64)>,
    engine: Engine,
}

impl WeightDistribution {
    /// Merges repeated weights.
    pub fn from_rows<I: IntoIterator<Item = (u64, u64)>>(engine: Engine, rows: I) -> Self {
        let mut map: BTreeMap<u64, u64> = BTreeMap::new();
        for (w, f) in rows {
            *map.entry(w).or_default() += f;
        }
        WeightDistribution { rows: map.into_iter().filter(|&(_, f)| f > 0).collect(), engine }
    }

    fn from_histogram(engine: Engine, hist: &[u64]) -> Self {
        Self::from_rows(engine, hist.iter().enumerate().map(|(w, &f)| (w as u64, f)))
    }

    pub fn rows(&self) -> &[(u64, u64)] {
        &self.rows
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().map(|&(_, f)| f).sum()
    }

    pub fn frequency(&self, weight: u64) -> u64 {
        self.rows.binary_search_by_key(&weight, |&(w, _)| w).map_or(0, |i| self.rows[i].1)
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_distance(&self) -> Option<u64> {
        self.rows.iter().find(|&&(w, _)| w > 0).map(|&(w, _)| w)
    }

    /// Σ w·A_w.
    pub fn first_moment(&self) -> u128 {
        self.rows.iter().map(|&(w, f)| w as u128 * f as u128).sum()
    }

    /// Σ w·A_w = n (p - 1) p^(2m-1) and Σ A_w = p^(2m).
    pub fn satisfies_pless_first_moment(&self, params: &CodeParams) -> bool {
        let p = params.p as u128;
        let n = params.length() as u128;
        self.total() as u128 == p.pow(2 * params.m) && self.first_moment() == n * (p - 1) * p.pow(2 * params.m - 1)
    }

    /// Equal as multisets, whatever the engines.
    pub fn same_multiset(&self, other: &Self) -> bool {
        self.rows == other.rows
    }

    /// Weights whose frequencies differ, as (weight, self, other).
    pub fn diff(&self, other: &Self) -> Vec<(u64, u64, u64)> {
        let mut weights: Vec<u64> = self.rows.iter().chain(&other.rows).map(|&(w, _)| w).collect();
        weights.sort_unstable();
        weights.dedup();
        weights.into_iter().map(|w| (w, self.frequency(w), other.frequency(w))).filter(|&(_, a, b)| a != b).collect()
    }
}

fn merge_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Exhaustive weight census over all p^(2m) pairs. Distinct pairs give
/// distinct codewords, so this is the census of the code.
pub fn weight_distribution_brute(code: &CyclicCode, budget: &Budget) -> Result<WeightDistribution> {
    let size = code.family().field_size();
    let n = code.length();
    budget.check((size as u128).pow(2) * n as u128)?;
    let p = code.field().characteristic() as u16;
    let fam = code.family();
    // -Tr(β w_i) for every β, so the inner loop is a plain equality count.
    let neg_beta: Vec<Vec<u16>> =
        (0..size).map(|b| code.beta_row(fam.element(b)).into_iter().map(|t| (p - t) % p).collect()).collect();
    let hist = par::fold_range(
        0..size,
        || vec![0u64; n as usize + 1],
        |mut hist, a| {
            let row = code.alpha_row(fam.element(a));
            for nb in &neg_beta {
                let zeros = row.iter().zip(nb).filter(|(x, y)| x == y).count();
                hist[n as usize - zeros] += 1;
            }
            hist
        },
        merge_hist,
    );
    Ok(WeightDistribution::from_histogram(Engine::Brute, &hist))
}

/// Weight through p^m - p^(m-1) - (1/2p) Σ_{u ∈ F_p*} S(uα, uβ), with every
/// S evaluated by diagonalization. The sum over u is taken in full for every
/// pair, so no case-specific simplification is assumed.
pub fn weight_distribution_sums(code: &CyclicCode, budget: &Budget) -> Result<WeightDistribution> {
    let fam = code.family();
    let CodeParams { p, m, d, .. } = *fam.params();
    let size = fam.field_size();
    let n = code.length();
    budget.check((size as u128).pow(2) * 2 * (p as u128 - 1) * (m as u128).pow(2))?;
    let f = fam.field();
    let units: Vec<_> = (1..p as i64).map(|u| f.from_prime(u)).collect();
    let root = SymbolicSumValue::from_parts(p, d, 0, 1).cyclotomic();
    let pc = p as u32;
    let image = |v: SymbolicSumValue| {
        let (a, b) = v.unscaled();
        CyclotomicInteger::from_int(pc, a).add(&root.scale(b))
    };
    let pm = (p as i128).pow(m);
    let base = 2 * p as i128 * (pm - pm / p as i128);
    let hist = par::try_fold_range(
        0..size,
        || vec![0u64; n as usize + 1],
        |mut hist, a| {
            let alpha = fam.element(a);
            for b in 0..size {
                let beta = fam.element(b);
                let total = units.iter().fold(CyclotomicInteger::zero(pc), |acc, &u| {
                    acc.add(&image(s_fast(fam, f.mul(u, alpha), f.mul(u, beta))))
                });
                let v = total.as_rational().ok_or(Error::NonRationalSum)?;
                let num = base - v;
                if num % (2 * p as i128) != 0 {
                    return Err(Error::NonIntegralWeight);
                }
                let w = num / (2 * p as i128);
                if w < 0 || w > n as i128 {
                    return Err(Error::NonIntegralWeight);
                }
                hist[w as usize] += 1;
            }
            Ok(hist)
        },
        merge_hist,
    )?;
    Ok(WeightDistribution::from_histogram(Engine::Sums, &hist))
}

/// Closed-form weight distribution for the three supported cases, evaluated
/// with exact integer arithmetic. Coinciding weights are merged.
pub fn weight_distribution_closed(params: &CodeParams) -> Result<WeightDistribution> {
    let CodeParams { m, d, case, .. } = *params;
    if !case.has_closed_form() {
        return Err(Error::UnsupportedCase(case));
    }
    let w = Powers::new(params)?;
    let p = w.pow(1);
    let pm = w.pow(m);
    let pd = w.pow(d);
    let base = w.pow(m - 1) * (p - 1);
    let h1 = w.pow(m / 2 - 1);
    // ½(p-1)·c·p^(m/2-1)
    let half = |c: i128| (p - 1) / 2 * c * h1;
    let full = (p - 1) * h1;
    let f_mid = div_exact((w.pow(m + d) - 3 * pm + pd + 1) * (pm - 1), 2 * (pd - 1), "p^(m-1)(p-1) row")?;
    let mut rows: Vec<(i128, i128)> = vec![(0, 1), (base, f_mid)];
    match case {
        CaseLabel::CaseA => {
            let hd = w.pow(d / 2);
            let g = w.pow((m - d) / 2);
            let f1 = div_exact((w.pow(m - d) - 1) * (pm - 1), pd * pd - 1, "(p^d-1) rows")?;
            let fg_minus = div_exact(g * (g - 1) * (pm - 1), 2, "p^((m-d)/2)-1 rows")?;
            let fg_plus = div_exact(g * (g + 1) * (pm - 1), 2, "p^((m-d)/2)+1 rows")?;
            let f2 = div_exact((pd - 1) * (pm * pm - 1), 4 * (pd + 1), "(p-1)p^(m/2-1) rows")?;
            rows.extend([
                (base + half(pd - 1), f1),
                (base - half(pd - 1), f1),
                (base + half(hd - 1), fg_minus),
                (base + half(hd + 1), fg_minus),
                (base - half(hd + 1), fg_plus),
                (base - half(hd - 1), fg_plus),
                (base + full, f2),
                (base - full, f2),
            ]);
        }
        CaseLabel::CaseBOddK | CaseLabel::CaseBEvenK => {
            let h = w.pow(m / 2);
            let hd = w.pow(m / 2 - d);
            let big = |s: i128| div_exact((hd + s) * (h - s) * (pm - 1), pd * pd - 1, "(p^d-1) rows");
            let f2 = |s: i128| div_exact((h + s) * (h + s) * (pd - 1) * (pm - 1), 4 * (pd + 1), "(p-1)p^(m/2-1) rows");
            // Rows ±(p^d-1): the weight below the middle pairs with (p^(m/2-d)+1)(p^(m/2)-1).
            rows.push((base - half(pd - 1), big(1)?));
            rows.push((base + half(pd - 1), big(-1)?));
            rows.push((base + full, f2(-1)?));
            rows.push((base - full, f2(1)?));
            if case == CaseLabel::CaseBOddK {
                rows.push((base + half(1), hd * (h - 1) * (pm - 1)));
                rows.push((base - half(1), hd * (h + 1) * (pm - 1)));
            } else {
                let hq = w.pow(d / 2);
                let lo = div_exact(hd * (h - 1) * (pm - 1), 2, "p^(m/2)-1 rows")?;
                let hi = div_exact(hd * (h + 1) * (pm - 1), 2, "p^(m/2)+1 rows")?;
                rows.push((base - half(hq - 1), lo));
                rows.push((base + half(hq + 1), lo));
                rows.push((base - half(hq + 1), hi));
                rows.push((base + half(hq - 1), hi));
            }
        }
        CaseLabel::OddSOutOfScope => unreachable!(),
    }
    let rows = rows
        .into_iter()
        .map(|(wt, f)| match (u64::try_from(wt), u64::try_from(f)) {
            (Ok(wt), Ok(f)) => Ok((wt, f)),
            _ => Err(Error::InternalInconsistency(alloc::format!("row ({wt}, {f})"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightDistribution::from_rows(Engine::Closed, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, m: u32, k: u32) -> CodeParams {
        CodeParams::classify(p, m, k).unwrap()
    }

    #[test]
    fn closed_case_a_example() {
        let dist = weight_distribution_closed(&params(3, 6, 4)).unwrap();
        let expect =
            [(0, 1), (414, 728), (450, 32760), (468, 139048), (486, 199472), (504, 132496), (522, 26208), (558, 728)];
        assert_eq!(dist.rows(), expect);
    }

    #[test]
    fn closed_case_b_odd_example() {
        let dist = weight_distribution_closed(&params(3, 6, 1)).unwrap();
        let expect = [(0, 1), (468, 95004), (477, 183456), (486, 728), (495, 170352), (504, 81900)];
        assert_eq!(dist.rows(), expect);
    }

    #[test]
    fn closed_case_b_even_merges_coinciding_rows() {
        let pr = params(3, 8, 2);
        let dist = weight_distribution_closed(&pr).unwrap();
        let weights: Vec<u64> = dist.rows().iter().map(|&(w, _)| w).collect();
        assert_eq!(weights, [0, 4158, 4266, 4320, 4374, 4428, 4482, 4590]);
        assert!(dist.satisfies_pless_first_moment(&pr));
    }

    #[test]
    fn closed_totals_and_moments() {
        for (p, m, k) in [(3, 4, 1), (3, 6, 4), (3, 6, 1), (5, 4, 1), (3, 8, 2), (5, 8, 2), (7, 4, 1), (3, 12, 8)] {
            let pr = params(p, m, k);
            let dist = weight_distribution_closed(&pr).unwrap();
            assert_eq!(dist.total() as u128, (p as u128).pow(2 * m), "{p},{m},{k}");
            assert!(dist.satisfies_pless_first_moment(&pr), "{p},{m},{k}");
        }
    }

    #[test]
    fn closed_refuses_odd_s() {
        let err = weight_distribution_closed(&params(3, 3, 1)).unwrap_err();
        assert_eq!(err, Error::UnsupportedCase(CaseLabel::OddSOutOfScope));
    }

    #[test]
    fn diff_lists_mismatches() {
        let a = WeightDistribution::from_rows(Engine::Brute, [(0, 1), (3, 2)]);
        let b = WeightDistribution::from_rows(Engine::Closed, [(0, 1), (4, 2)]);
        assert_eq!(a.diff(&b), [(3, 2, 0), (4, 0, 2)]);
        assert!(!a.same_multiset(&b));
        assert_eq!(a.min_distance(), Some(3));
    }

    #[test]
    fn engine_names_round_trip() {
        for e in Engine::ALL {
            assert_eq!(Engine::parse(e.as_str()), Some(e));
        }
        assert_eq!(Engine::parse("fast"), None);
    }
}
