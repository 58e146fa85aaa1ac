use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Exact element of Z[ζ_p] in the basis 1, ζ, …, ζ^(p-2); ζ^(p-1) is
/// rewritten as -(1 + ζ + … + ζ^(p-2)).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicInteger {
    p: u32,
    coeffs: Vec<i128>,
}

impl CyclotomicInteger {
    pub fn zero(p: u32) -> Self {
        CyclotomicInteger { p, coeffs: vec![0; p as usize - 1] }
    }

    pub fn from_int(p: u32, n: i128) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = n;
        z
    }

    /// ζ^j for any integer j.
    pub fn zeta_pow(p: u32, j: i64) -> Self {
        let mut full = vec![0i128; p as usize];
        full[j.rem_euclid(p as i64) as usize] = 1;
        Self::from_full(p, &full)
    }

    /// Σ_j counts[j] ζ^j for j in 0..p.
    pub fn from_full(p: u32, counts: &[i128]) -> Self {
        assert_eq!(counts.len(), p as usize);
        let top = counts[p as usize - 1];
        CyclotomicInteger { p, coeffs: counts[..p as usize - 1].iter().map(|&c| c - top).collect() }
    }

    /// Basis coefficients c_0..c_(p-2).
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn from_coeffs(p: u32, coeffs: Vec<i128>) -> Self {
        assert_eq!(coeffs.len(), p as usize - 1);
        CyclotomicInteger { p, coeffs }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn as_rational(&self) -> Option<i128> {
        self.is_rational().then_some(self.coeffs[0])
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicInteger { p: self.p, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: i128) -> Self {
        CyclotomicInteger { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let p = self.p as usize;
        let mut full = vec![0i128; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                full[(i + j) % p] += a * b;
            }
        }
        Self::from_full(self.p, &full)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::from_int(self.p, 1), |acc, _| acc.mul(self))
    }

    /// Image under ζ ↦ ζ^(-1) (complex conjugation).
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Image under the automorphism ζ ↦ ζ^u, u a unit mod p.
    pub fn galois(&self, u: i64) -> Self {
        let p = self.p as usize;
        let mut full = vec![0i128; p];
        for (j, &c) in self.coeffs.iter().enumerate() {
            full[(j as i64 * u).rem_euclid(p as i64) as usize] += c;
        }
        Self::from_full(self.p, &full)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// g_p = Σ_{x ∈ F_p} ζ^(x²); g_p² = (-1)^((p-1)/2) p.
pub fn gauss_sum(p: u32) -> CyclotomicInteger {
    let mut full = vec![0i128; p as usize];
    for x in 0..p as u64 {
        full[(x * x % p as u64) as usize] += 1;
    }
    CyclotomicInteger::from_full(p, &full)
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[ζ_{}]{:?}", self.p, self.coeffs)
    }
}

/// `3 + 2ζ - ζ^3`; rational values print as plain integers.
impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (j, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("ζ")?,
                (1, _) => write!(f, "{mag}ζ")?,
                (_, 1) => write!(f, "ζ^{j}")?,
                _ => write!(f, "{mag}ζ^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn gauss_sum_three() {
        let g = gauss_sum(3);
        assert_eq!(g.coeffs(), &[1, 2]);
        assert_eq!(g.mul(&g).coeffs(), &[-3, 0]);
    }

    #[test]
    fn gauss_sum_squares() {
        for p in [3u32, 5, 7, 11, 13] {
            let g = gauss_sum(p);
            let expected = if p % 4 == 1 { p as i128 } else { -(p as i128) };
            assert_eq!(g.mul(&g), CyclotomicInteger::from_int(p, expected), "p = {p}");
        }
    }

    #[test]
    fn zeta_relations() {
        let z = CyclotomicInteger::zeta_pow(5, 1);
        assert_eq!(z.pow(5), CyclotomicInteger::from_int(5, 1));
        let total = (0..5).fold(CyclotomicInteger::zero(5), |acc, j| acc.add(&CyclotomicInteger::zeta_pow(5, j)));
        assert!(total.is_zero());
        assert_eq!(z.conj(), CyclotomicInteger::zeta_pow(5, -1));
        assert_eq!(z.mul(&z.conj()), CyclotomicInteger::from_int(5, 1));
    }

    #[test]
    fn display() {
        assert_eq!(gauss_sum(3).to_string(), "1 + 2ζ");
        assert_eq!(CyclotomicInteger::from_int(3, -9).to_string(), "-9");
        assert_eq!(CyclotomicInteger::zero(7).to_string(), "0");
    }
}
