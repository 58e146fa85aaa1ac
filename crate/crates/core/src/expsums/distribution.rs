use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::cyclotomic::CyclotomicInteger;
use super::symbolic::SymbolicSumValue;
use crate::error::{Error, Result};
use crate::quadforms::{CaseLabel, CodeParams};

/// Sorted multiset of symbolic values. Every producer in this crate includes
/// the (0, 0) pair, so frequencies sum to p^(2m).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValueDistribution {
    rows: Vec<(SymbolicSumValue, u64)>,
}

impl ValueDistribution {
    /// Merges repeated values and drops zero frequencies.
    pub fn from_rows<I: IntoIterator<Item = (SymbolicSumValue, u64)>>(rows: I) -> Self {
        let mut map: BTreeMap<SymbolicSumValue, u64> = BTreeMap::new();
        for (v, f) in rows {
            *map.entry(v).or_default() += f;
        }
        ValueDistribution { rows: map.into_iter().filter(|&(_, f)| f > 0).collect() }
    }

    pub fn rows(&self) -> &[(SymbolicSumValue, u64)] {
        &self.rows
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().map(|&(_, f)| f).sum()
    }

    pub fn frequency(&self, v: &SymbolicSumValue) -> u64 {
        self.rows.binary_search_by(|(x, _)| x.cmp(v)).map_or(0, |i| self.rows[i].1)
    }

    /// Σ frequency · value, evaluated in Z[ζ_p].
    pub fn weighted_sum(&self) -> Option<CyclotomicInteger> {
        let first = self.rows.first()?;
        let p = first.0.prime() as u32;
        Some(
            self.rows.iter().fold(CyclotomicInteger::zero(p), |acc, (v, f)| acc.add(&v.cyclotomic().scale(*f as i128))),
        )
    }
}

/// Integer helper for the closed-form frequency formulas.
pub(crate) struct Powers {
    p: i128,
}

impl Powers {
    /// Refuses parameters whose formulas could overflow i128.
    pub(crate) fn new(params: &CodeParams) -> Result<Self> {
        let limit = i128::MAX / 64;
        let p = params.p as i128;
        match p.checked_pow(3 * params.m) {
            Some(v) if v <= limit => Ok(Powers { p }),
            _ => Err(Error::ClosedFormOverflow { p: params.p, m: params.m }),
        }
    }

    pub(crate) fn pow(&self, e: u32) -> i128 {
        self.p.pow(e)
    }
}

pub(crate) fn div_exact(num: i128, den: i128, what: &str) -> Result<i128> {
    if den == 0 || num % den != 0 {
        return Err(Error::InexactDivision(alloc::format!("{what}: {num}/{den}")));
    }
    Ok(num / den)
}

fn freq(v: i128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::InternalInconsistency(alloc::format!("frequency {v}")))
}

fn build(rows: Vec<(SymbolicSumValue, i128)>) -> Result<ValueDistribution> {
    let rows = rows.into_iter().map(|(v, f)| Ok((v, freq(f)?))).collect::<Result<Vec<_>>>()?;
    Ok(ValueDistribution::from_rows(rows))
}

/// Closed-form value distribution of T(α, β) over all pairs, for s odd or even.
pub fn t_distribution_closed(params: &CodeParams) -> Result<ValueDistribution> {
    let CodeParams { p, m, d, s, .. } = *params;
    let w = Powers::new(params)?;
    let pm = w.pow(m);
    let q2 = w.pow(2 * d) - 1;
    let int = |n: i128| SymbolicSumValue::integer(p, d, n);
    // c·√q*·p^e
    let rad = |c: i128, e: u32| SymbolicSumValue::new(p, d, 0, c, e);
    let mut rows = Vec::new();
    if s % 2 == 1 {
        let e_lo = d * (s - 1) / 2;
        let e_hi = d * (s + 1) / 2;
        let f_lo = div_exact(
            w.pow(2 * d) * (pm - w.pow(m - d) - w.pow(m - 2 * d) + 1) * (pm - 1),
            2 * q2,
            "rank s-1 frequency",
        )?;
        let h = w.pow((m - d) / 2);
        let f_hi = div_exact((w.pow(m - d) - 1) * (pm - 1), 2 * q2, "rank s-2 frequency")?;
        rows.push((rad(1, e_lo), f_lo));
        rows.push((rad(-1, e_lo), f_lo));
        rows.push((int(w.pow((m + d) / 2)), div_exact(h * (h + 1) * (pm - 1), 2, "")?));
        rows.push((int(-w.pow((m + d) / 2)), div_exact(h * (h - 1) * (pm - 1), 2, "")?));
        rows.push((rad(1, e_hi), f_hi));
        rows.push((rad(-1, e_hi), f_hi));
    } else {
        let h = w.pow(m / 2);
        let hd = w.pow(m / 2 - d);
        let base = pm - w.pow(m - d) - w.pow(m - 2 * d);
        let f_plus = div_exact(w.pow(2 * d) * (base + h - hd + 1) * (pm - 1), 2 * q2, "p^(m/2) row")?;
        let f_minus = div_exact(w.pow(2 * d) * (base - h + hd + 1) * (pm - 1), 2 * q2, "-p^(m/2) row")?;
        let f_rad = div_exact(w.pow(m - d) * (pm - 1), 2, "√q* row")?;
        let f_top = div_exact((h - 1) * (hd + 1) * (pm - 1), 2 * q2, "p^(m/2+d) row")?;
        let f_bot = div_exact((h + 1) * (hd - 1) * (pm - 1), 2 * q2, "-p^(m/2+d) row")?;
        rows.push((int(h), f_plus));
        rows.push((int(-h), f_minus));
        rows.push((rad(1, m / 2), f_rad));
        rows.push((rad(-1, m / 2), f_rad));
        rows.push((int(w.pow(m / 2 + d)), f_top));
        rows.push((int(-w.pow(m / 2 + d)), f_bot));
    }
    rows.push((int(pm), 1));
    build(rows)
}

/// Closed-form value distribution of S(α, β) over all pairs. In rows written
/// with ± and ∓, the upper signs go together.
pub fn s_distribution_closed(params: &CodeParams) -> Result<ValueDistribution> {
    let CodeParams { p, m, d, case, .. } = *params;
    if !case.has_closed_form() {
        return Err(Error::UnsupportedCase(case));
    }
    let w = Powers::new(params)?;
    let pm = w.pow(m);
    let pd = w.pow(d);
    let h = w.pow(m / 2);
    let int = |n: i128| SymbolicSumValue::integer(p, d, n);
    let f_zero = div_exact((w.pow(m + d) - 3 * pm + pd + 1) * (pm - 1), 2 * (pd - 1), "0 row")?;
    let mut rows = alloc::vec![(int(2 * pm), 1), (int(0), f_zero)];
    if case == CaseLabel::CaseA {
        let hd = w.pow(d / 2);
        let g = w.pow((m - d) / 2);
        let f1 = div_exact((w.pow(m - d) - 1) * (pm - 1), pd * pd - 1, "(p^d-1) rows")?;
        let f_minus = div_exact(g * (g - 1) * (pm - 1), 2, "(±1 - p^(d/2)) rows")?;
        let f_plus = div_exact(g * (g + 1) * (pm - 1), 2, "(±1 + p^(d/2)) rows")?;
        let f2 = div_exact((pd - 1) * (pm * pm - 1), 4 * (pd + 1), "±2 rows")?;
        for sign in [1, -1] {
            rows.push((int(sign * (pd - 1) * h), f1));
            rows.push((int((sign - hd) * h), f_minus));
            rows.push((int((sign + hd) * h), f_plus));
            rows.push((int(sign * 2 * h), f2));
        }
    } else {
        let hd = w.pow(m / 2 - d);
        let f_minus = div_exact(hd * (h - 1) * (pm - 1), 2, "(±√q* - 1) rows")?;
        let f_plus = div_exact(hd * (h + 1) * (pm - 1), 2, "(±√q* + 1) rows")?;
        for sign in [1, -1] {
            let f1 = div_exact((hd + sign) * (h - sign) * (pm - 1), pd * pd - 1, "(p^d-1) rows")?;
            let f2 = div_exact((h + sign).pow(2) * (pd - 1) * (pm - 1), 4 * (pd + 1), "±2 rows")?;
            rows.push((int(sign * (pd - 1) * h), f1));
            rows.push((SymbolicSumValue::from_parts(p, d, -h, sign * h), f_minus));
            rows.push((SymbolicSumValue::from_parts(p, d, h, sign * h), f_plus));
            rows.push((int(sign * 2 * h), f2));
        }
    }
    build(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, m: u32, k: u32) -> CodeParams {
        CodeParams::classify(p, m, k).unwrap()
    }

    #[test]
    fn t_odd_s_rows() {
        let pr = params(3, 6, 4);
        let dist = t_distribution_closed(&pr).unwrap();
        assert_eq!(dist.total(), 531441);
        assert_eq!(dist.frequency(&SymbolicSumValue::integer(3, 2, 81)), 32760);
        assert_eq!(dist.frequency(&SymbolicSumValue::integer(3, 2, -81)), 26208);
        assert_eq!(dist.frequency(&SymbolicSumValue::integer(3, 2, 27)), 235872);
        assert_eq!(dist.frequency(&SymbolicSumValue::integer(3, 2, 243)), 364);
        assert_eq!(dist.frequency(&SymbolicSumValue::integer(3, 2, 729)), 1);
    }

    #[test]
    fn t_even_s_totals() {
        for (p, m, k) in [(3, 4, 1), (3, 8, 2), (5, 4, 1), (3, 6, 1)] {
            let pr = params(p, m, k);
            let dist = t_distribution_closed(&pr).unwrap();
            assert_eq!(dist.total() as u128, (p as u128).pow(2 * m));
        }
    }

    #[test]
    fn s_case_a_rows() {
        let dist = s_distribution_closed(&params(3, 6, 4)).unwrap();
        let f = |n| dist.frequency(&SymbolicSumValue::integer(3, 2, n));
        assert_eq!(dist.total(), 531441);
        // (1 - 3)·27 and -2·27 coincide, as do (-1 + 3)·27 and 2·27.
        assert_eq!(dist.rows().len(), 8);
        assert_eq!(f(0), 199472);
        assert_eq!((f(216), f(-216)), (728, 728));
        assert_eq!((f(-54), f(-108)), (26208 + 106288, 26208));
        assert_eq!((f(108), f(54)), (32760, 32760 + 106288));
        assert_eq!(f(1458), 1);
    }

    #[test]
    fn s_case_b_binds_upper_signs() {
        let dist = s_distribution_closed(&params(3, 4, 1)).unwrap();
        let f = |n| dist.frequency(&SymbolicSumValue::integer(3, 1, n));
        assert_eq!(dist.total(), 6561);
        assert_eq!((f(18), f(-18)), (320 + 1000, 200 + 640));
        assert_eq!(f(0), 80);
        let r = |a, b| dist.frequency(&SymbolicSumValue::from_parts(3, 1, a, b));
        assert_eq!((r(-9, 9), r(-9, -9)), (960, 960));
        assert_eq!((r(9, 9), r(9, -9)), (1200, 1200));
    }

    #[test]
    fn s_unsupported_case() {
        let pr = params(3, 3, 1);
        assert_eq!(s_distribution_closed(&pr).unwrap_err(), Error::UnsupportedCase(CaseLabel::OddSOutOfScope));
    }

    #[test]
    fn weighted_sums() {
        for (p, m, k) in [(3, 4, 1), (3, 6, 4), (3, 6, 1), (5, 4, 1), (3, 8, 2)] {
            let pr = params(p, m, k);
            let p2m = (p as i128).pow(2 * m);
            let t = t_distribution_closed(&pr).unwrap().weighted_sum().unwrap();
            assert_eq!(t.as_rational(), Some(p2m), "T at {p},{m},{k}");
            let s = s_distribution_closed(&pr).unwrap().weighted_sum().unwrap();
            assert_eq!(s.as_rational(), Some(2 * p2m), "S at {p},{m},{k}");
        }
    }
}
