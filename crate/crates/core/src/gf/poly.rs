use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::inv_mod_p;

/// Polynomial over F_p with coefficients in ascending degree order.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    p: u32,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn new(p: u32, coeffs: Vec<u32>) -> Self {
        let mut poly = Polynomial { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        poly.normalize();
        poly
    }

    pub fn zero(p: u32) -> Self {
        Polynomial { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Polynomial::new(p, vec![1])
    }

    /// The monomial `c·x^deg`.
    pub fn monomial(p: u32, deg: usize, c: u32) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Polynomial::new(p, coeffs)
    }

    /// Monic polynomial of degree `deg` whose lower coefficients are the
    /// base-p digits of `lower`.
    pub fn monic_from_index(p: u32, deg: usize, mut lower: u64) -> Self {
        let mut coeffs = vec![0; deg + 1];
        for c in coeffs.iter_mut().take(deg) {
            *c = (lower % p as u64) as u32;
            lower /= p as u64;
        }
        coeffs[deg] = 1;
        Polynomial::new(p, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p).collect();
        Polynomial::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + p - other.coeff(i)) % p).collect();
        Polynomial::new(p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Polynomial::new(self.p, out.into_iter().map(|c| c as u32).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        Polynomial::new(self.p, self.coeffs.iter().map(|&a| (a as u64 * c as u64 % p) as u32).collect())
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p as u64;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv_mod_p(divisor.leading(), self.p) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return (Polynomial::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] % p * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p * p - c * dc as u64 % p) % p;
            }
        }
        rem.truncate(dd);
        (
            Polynomial::new(self.p, quot.into_iter().map(|c| c as u32).collect()),
            Polynomial::new(self.p, rem.into_iter().map(|c| c as u32).collect()),
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod_p(self.leading(), self.p))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Polynomial::one(self.p).rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            exp >>= 1;
        }
        acc
    }

    /// `x^(p^j) mod modulus` by repeated p-th powering.
    fn frobenius_x(&self, j: u32) -> Self {
        let mut acc = Polynomial::monomial(self.p, 1, 1).rem(self);
        for _ in 0..j {
            acc = acc.pow_mod(self.p as u64, self);
        }
        acc
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n as u32,
        };
        let x = Polynomial::monomial(self.p, 1, 1);
        if self.frobenius_x(n) != x.rem(self) {
            return false;
        }
        for l in crate::arith::prime_factors(n as u64) {
            let h = self.frobenius_x(n / l as u32).sub(&x);
            if self.gcd(&h).degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Packs the coefficients as a base-p integer, `c0 + c1·p + ...`.
    pub fn to_code(&self) -> u64 {
        self.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn from_code(p: u32, mut code: u64) -> Self {
        let mut coeffs = Vec::new();
        while code > 0 {
            coeffs.push((code % p as u64) as u32);
            code /= p as u64;
        }
        Polynomial::new(p, coeffs)
    }

    /// Evaluates at a point of F_p.
    pub fn eval_prime(&self, x: u32) -> u32 {
        let p = self.p as u64;
        self.coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p) as u32
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(p={}, {:?})", self.p, self.coeffs)
    }
}

/// Renders as e.g. `x^2 + 2x + 1`, highest degree first.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn normalization_strips_trailing_zeros() {
        let z = Polynomial::new(3, vec![0, 3, 6]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(Polynomial::new(3, vec![1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn division_is_exact_on_products() {
        let a = Polynomial::new(5, vec![1, 2, 3, 4]);
        let b = Polynomial::new(5, vec![2, 0, 1]);
        let (q, r) = a.mul(&b).div_rem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn irreducibility_small_cases() {
        // x^2 + 1 over F_3 is irreducible, x^2 + 2 = (x+1)(x+2) is not.
        assert!(Polynomial::new(3, vec![1, 0, 1]).is_irreducible());
        assert!(!Polynomial::new(3, vec![2, 0, 1]).is_irreducible());
        assert!(!Polynomial::new(3, vec![0, 0, 1]).is_irreducible());
        // (x^2+1)^2 has no roots but is reducible.
        let sq = Polynomial::new(3, vec![1, 0, 1]);
        assert!(!sq.mul(&sq).is_irreducible());
        assert!(Polynomial::new(3, vec![0, 1]).is_irreducible());
    }

    #[test]
    fn irreducible_count_matches_necklace_formula() {
        // Number of monic irreducibles of degree 4 over F_3 is (81 - 9)/4 = 18.
        let count = (0..81u64).filter(|&i| Polynomial::monic_from_index(3, 4, i).is_irreducible()).count();
        assert_eq!(count, 18);
    }

    #[test]
    fn display_and_codes() {
        let f = Polynomial::new(3, vec![1, 2, 1]);
        assert_eq!(f.to_string(), "x^2 + 2x + 1");
        assert_eq!(Polynomial::from_code(3, f.to_code()), f);
        assert_eq!(f.eval_prime(2), 0);
    }
}
