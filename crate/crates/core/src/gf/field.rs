use alloc::vec;
use alloc::vec::Vec;

use super::poly::Polynomial;
use crate::arith;
use crate::error::{Error, Result};

/// Element of F_{p^m}, stored as the base-p packing `c0 + c1·p + ...` of its
/// coefficient vector in the polynomial basis. Code 0 is zero, code 1 is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Construction knobs. The defaults give the canonical field; the indices are
/// test hooks for checking that results do not depend on these choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldOptions {
    /// Pick the i-th smallest monic irreducible modulus (0 = smallest).
    pub modulus_index: usize,
    /// Pick the i-th primitive element in code order (0 = smallest).
    pub primitive_index: usize,
    /// Largest admissible p^m.
    pub table_budget: u64,
}

impl FieldOptions {
    pub const DEFAULT_TABLE_BUDGET: u64 = 1 << 24;
}

impl Default for FieldOptions {
    fn default() -> Self {
        FieldOptions { modulus_index: 0, primitive_index: 0, table_budget: Self::DEFAULT_TABLE_BUDGET }
    }
}

const NO_LOG: u32 = u32::MAX;

/// F_{p^m} with a fixed modulus and primitive element, backed by exp/log,
/// Zech-logarithm and absolute-trace tables. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    size: u32,
    modulus: Polynomial,
    primitive: FieldElement,
    /// exp[i] = π^i for 0 <= i < 2(p^m - 1), doubled so sums of two logs
    /// index without reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[i] = log(1 + π^i), or NO_LOG when 1 + π^i = 0.
    zech: Vec<u32>,
    trace: Vec<u32>,
    /// p^j for 0 <= j <= m.
    powers_of_p: Vec<u64>,
}

impl core::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish_non_exhaustive()
    }
}

impl FiniteField {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_options(p, m, FieldOptions::default())
    }

    pub fn with_options(p: u64, m: u32, opts: FieldOptions) -> Result<Self> {
        if p == 2 || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let size = match arith::checked_pow(p, m) {
            Some(q) if q <= opts.table_budget && q <= u32::MAX as u64 / 2 => q,
            _ => return Err(Error::DegreeTooLarge { p, m, limit: opts.table_budget }),
        };
        let p32 = p as u32;
        let modulus = nth_irreducible(p32, m, opts.modulus_index)?;
        let n = size - 1;
        let factors = arith::prime_factors(n);
        let one = Polynomial::one(p32);
        let primitive = (1..size)
            .filter(|&code| {
                let g = Polynomial::from_code(p32, code);
                n == 1 || factors.iter().all(|&l| g.pow_mod(n / l, &modulus) != one)
            })
            .nth(opts.primitive_index)
            .ok_or(Error::PrimitiveIndexOutOfRange(opts.primitive_index))?;

        let powers_of_p: Vec<u64> = (0..=m).map(|j| p.pow(j)).collect();
        let n_us = n as usize;
        let mut exp = vec![0u32; 2 * n_us];
        let mut log = vec![NO_LOG; size as usize];
        let gen = Polynomial::from_code(p32, primitive);
        let mut digits = vec![0u32; m as usize];
        digits[0] = 1;
        for i in 0..n_us {
            let code = pack(&digits, p32);
            if log[code as usize] != NO_LOG {
                return Err(Error::InternalInconsistency(alloc::format!("element {primitive} is not primitive")));
            }
            exp[i] = code;
            exp[i + n_us] = code;
            log[code as usize] = i as u32;
            mul_digits_mod(&mut digits, gen.coeffs(), modulus.coeffs(), p32);
        }
        if pack(&digits, p32) != 1 {
            return Err(Error::InternalInconsistency(alloc::string::String::from(
                "primitive element order is not p^m - 1",
            )));
        }

        let zech = (0..n_us)
            .map(|i| {
                let c = exp[i];
                let c0 = c % p32;
                let bumped = c - c0 + (c0 + 1) % p32;
                if bumped == 0 {
                    NO_LOG
                } else {
                    log[bumped as usize]
                }
            })
            .collect();

        let mut field = FiniteField {
            p: p32,
            m,
            size: size as u32,
            modulus,
            primitive: FieldElement(primitive as u32),
            exp,
            log,
            zech,
            trace: Vec::new(),
            powers_of_p,
        };

        // Tr is F_p-linear: tabulate it on the monomial basis, extend by digits.
        let basis_traces: Vec<u32> = (0..m)
            .map(|j| {
                let x = FieldElement(field.powers_of_p[j as usize] as u32);
                field.frobenius_sum(x, 1).0
            })
            .collect();
        let mut trace = vec![0u32; size as usize];
        for code in 1..size as usize {
            // Strip the lowest nonzero digit to reuse an earlier entry.
            let mut rest = code;
            let mut j = 0;
            while rest % p as usize == 0 {
                rest /= p as usize;
                j += 1;
            }
            let prev = code - field.powers_of_p[j] as usize;
            trace[code] = (trace[prev] + basis_traces[j]) % p32;
        }
        field.trace = trace;
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// p^m.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// p^m - 1, the order of the multiplicative group.
    pub fn group_order(&self) -> u32 {
        self.size - 1
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn primitive_element(&self) -> FieldElement {
        self.primitive
    }

    pub fn power_of_p(&self, j: u32) -> u64 {
        self.powers_of_p[j as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.size).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.size).map(FieldElement)
    }

    /// Embeds `c mod p` as a prime-field element.
    pub fn from_prime(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_poly(&self, poly: &Polynomial) -> FieldElement {
        FieldElement(poly.rem(&self.modulus).to_code() as u32)
    }

    pub fn to_poly(&self, x: FieldElement) -> Polynomial {
        Polynomial::from_code(self.p, x.0 as u64)
    }

    /// Base-p digits of `x`, lowest first, always `m` long.
    pub fn digits(&self, x: FieldElement) -> Vec<u32> {
        let mut c = x.0;
        (0..self.m)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> FieldElement {
        FieldElement(pack(digits, self.p))
    }

    /// Discrete log to base π. `None` for zero.
    #[inline]
    pub fn log(&self, x: FieldElement) -> Option<u32> {
        let l = self.log[x.0 as usize];
        (l != NO_LOG).then_some(l)
    }

    /// π^e for any e (reduced mod p^m - 1).
    #[inline]
    pub fn exp(&self, e: u64) -> FieldElement {
        FieldElement(self.exp[(e % self.group_order() as u64) as usize])
    }

    /// π^e for `e < 2(p^m - 1)`, no reduction.
    #[inline]
    pub(crate) fn exp_small(&self, e: u32) -> FieldElement {
        FieldElement(self.exp[e as usize])
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.group_order();
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let diff = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[diff as usize];
        if z == NO_LOG {
            FieldElement::ZERO
        } else {
            FieldElement(self.exp[(la + z) as usize])
        }
    }

    /// Digit-wise addition, independent of the log tables.
    pub fn add_digits(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match self.log(a) {
            None => a,
            Some(l) => FieldElement(self.exp[(l + self.group_order() / 2) as usize]),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let l = self.log(a).ok_or(Error::DivisionByZero)?;
        Ok(self.exp_small((self.group_order() - l) % self.group_order()))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e, with 0^0 = 1.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        match self.log(a) {
            None => FieldElement::ZERO,
            Some(l) => {
                let n = self.group_order() as u64;
                self.exp(((l as u64) * (e % n)) % n)
            }
        }
    }

    /// a^(p^j), the j-th Frobenius image.
    #[inline]
    pub fn frobenius(&self, a: FieldElement, j: u32) -> FieldElement {
        match self.log(a) {
            None => a,
            Some(l) => {
                let n = self.group_order() as u64;
                let e = self.powers_of_p[(j % self.m) as usize] % n;
                self.exp(l as u64 * e % n)
            }
        }
    }

    /// Σ_{i < m/l} x^(p^(l·i)) without divisibility checks.
    fn frobenius_sum(&self, x: FieldElement, l: u32) -> FieldElement {
        (0..self.m / l).fold(FieldElement::ZERO, |acc, i| self.add_digits(acc, self.frobenius(x, l * i)))
    }

    /// Relative trace Tr_l^m(x), landing in the subfield F_{p^l}.
    pub fn trace(&self, x: FieldElement, l: u32) -> Result<FieldElement> {
        if l == 0 || !self.m.is_multiple_of(l) {
            return Err(Error::NotADivisor { l, m: self.m });
        }
        Ok(self.frobenius_sum(x, l))
    }

    /// Absolute trace Tr_1^m(x) as an integer in [0, p).
    #[inline]
    pub fn abs_trace(&self, x: FieldElement) -> u32 {
        self.trace[x.0 as usize]
    }

    /// Whether `x` lies in the subfield F_{p^d}.
    pub fn in_subfield(&self, x: FieldElement, d: u32) -> bool {
        if !self.m.is_multiple_of(d) {
            return false;
        }
        match self.log(x) {
            None => true,
            Some(l) => {
                let step = self.group_order() as u64 / (self.powers_of_p[d as usize] - 1);
                (l as u64).is_multiple_of(step)
            }
        }
    }

    /// Quadratic character of F_{p^d} evaluated at a nonzero `x` of that subfield.
    pub fn quadratic_character(&self, x: FieldElement, d: u32) -> Result<i32> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::NotADivisor { l: d, m: self.m });
        }
        let l = self.log(x).ok_or(Error::ZeroArgument)?;
        let step = self.group_order() as u64 / (self.powers_of_p[d as usize] - 1);
        if !(l as u64).is_multiple_of(step) {
            return Err(Error::NotInSubfield(d));
        }
        Ok(if (l as u64 / step).is_multiple_of(2) { 1 } else { -1 })
    }

    /// The distinct Frobenius conjugates of `x`, starting with `x` itself.
    pub fn conjugates(&self, x: FieldElement) -> Vec<FieldElement> {
        let mut out = vec![x];
        let mut y = self.frobenius(x, 1);
        while y != x {
            out.push(y);
            y = self.frobenius(y, 1);
        }
        out
    }

    /// Minimal polynomial of `x` over F_p: the product of (X - c) over the
    /// distinct conjugates c of `x`.
    pub fn minimal_polynomial(&self, x: FieldElement) -> Polynomial {
        // Coefficients over F_{p^m}, ascending.
        let mut acc: Vec<FieldElement> = vec![FieldElement::ONE];
        for c in self.conjugates(x) {
            let neg_c = self.neg(c);
            let mut next = vec![FieldElement::ZERO; acc.len() + 1];
            for (i, &a) in acc.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], a);
                next[i] = self.add(next[i], self.mul(a, neg_c));
            }
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .map(|c| {
                assert!(c.0 < self.p, "minimal polynomial coefficient outside F_p");
                c.0
            })
            .collect();
        Polynomial::new(self.p, coeffs)
    }

    /// Evaluates an F_p polynomial at a field element (Horner).
    pub fn eval(&self, poly: &Polynomial, x: FieldElement) -> FieldElement {
        poly.coeffs().iter().rev().fold(FieldElement::ZERO, |acc, &c| self.add(self.mul(acc, x), FieldElement(c)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: FieldElement) -> Result<u64> {
        let l = self.log(x).ok_or(Error::ZeroArgument)? as u64;
        let n = self.group_order() as u64;
        Ok(n / arith::gcd(l, n))
    }
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

/// digits <- digits · g mod f, all over F_p; `f` is monic of degree digits.len().
fn mul_digits_mod(digits: &mut [u32], g: &[u32], f: &[u32], p: u32) {
    let m = digits.len();
    let p64 = p as u64;
    let mut prod = vec![0u64; m + g.len()];
    for (i, &a) in digits.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            prod[i + j] = (prod[i + j] + a as u64 * b as u64) % p64;
        }
    }
    for top in (m..prod.len()).rev() {
        let c = prod[top] % p64;
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for j in 0..m {
            let idx = top - m + j;
            prod[idx] = (prod[idx] + (p64 - c) * f[j] as u64) % p64;
        }
    }
    for i in 0..m {
        digits[i] = prod[i] as u32;
    }
}

/// The `index`-th monic irreducible of degree `m` over F_p, ordered by the
/// base-p value of the lower coefficients.
pub fn nth_irreducible(p: u32, m: u32, index: usize) -> Result<Polynomial> {
    let count = (p as u64).pow(m);
    (0..count)
        .map(|i| Polynomial::monic_from_index(p, m as usize, i))
        .filter(Polynomial::is_irreducible)
        .nth(index)
        .ok_or(Error::ModulusIndexOutOfRange { m, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_of_three() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(f.modulus(), &Polynomial::new(3, vec![0, 1]));
        assert_eq!(f.primitive_element(), FieldElement(2));
    }

    #[test]
    fn nine_element_field() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &Polynomial::new(3, vec![1, 0, 1]));
        assert_eq!(f.primitive_element(), FieldElement(4));
        // Exhaustive order census: x+1 has order 8 and nothing smaller does.
        for code in 1..4 {
            assert!(f.order(FieldElement(code)).unwrap() < 8);
        }
        assert_eq!(f.order(FieldElement(4)).unwrap(), 8);
    }

    #[test]
    fn rejects_even_and_composite() {
        assert_eq!(FiniteField::new(2, 3).unwrap_err(), Error::NotOddPrime(2));
        assert_eq!(FiniteField::new(9, 1).unwrap_err(), Error::NotOddPrime(9));
        assert!(matches!(FiniteField::new(3, 20).unwrap_err(), Error::DegreeTooLarge { .. }));
    }

    #[test]
    fn basic_arithmetic() {
        let f = FiniteField::new(3, 4).unwrap();
        let pi = f.primitive_element();
        for x in f.elements() {
            assert_eq!(f.mul(FieldElement::ZERO, x), FieldElement::ZERO);
            assert_eq!(f.add(x, f.neg(x)), FieldElement::ZERO);
        }
        assert_eq!(f.inv(FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert_eq!(f.inv(FieldElement::ZERO).unwrap_err(), Error::DivisionByZero);
        assert_eq!(f.pow(pi, 80), FieldElement::ONE);
    }

    #[test]
    fn zech_addition_matches_digit_addition() {
        let f = FiniteField::new(5, 2).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add_digits(a, b));
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.trace(FieldElement::ZERO, 1).unwrap(), FieldElement::ZERO);
        assert_eq!(f.trace(FieldElement::ONE, 1).unwrap(), FieldElement(2));
        let total = f.elements().map(|x| f.abs_trace(x)).sum::<u32>() % 3;
        assert_eq!(total, 0);
        let g = FiniteField::new(3, 4).unwrap();
        assert_eq!(g.trace(FieldElement::ONE, 1).unwrap(), FieldElement(1));
        assert_eq!(g.trace(FieldElement::ONE, 3).unwrap_err(), Error::NotADivisor { l: 3, m: 4 });
    }

    #[test]
    fn quadratic_character_examples() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(f.quadratic_character(FieldElement::ONE, 1).unwrap(), 1);
        assert_eq!(f.quadratic_character(FieldElement(2), 1).unwrap(), -1);
        assert_eq!(f.quadratic_character(FieldElement::ZERO, 1).unwrap_err(), Error::ZeroArgument);
        let g = FiniteField::new(7, 2).unwrap();
        // A primitive element of F_7 (3) is a nonsquare in F_7 but a square in F_49.
        assert_eq!(g.quadratic_character(FieldElement(3), 1).unwrap(), -1);
        assert_eq!(g.quadratic_character(FieldElement(3), 2).unwrap(), 1);
        let pi = g.primitive_element();
        assert_eq!(g.quadratic_character(pi, 1).unwrap_err(), Error::NotInSubfield(1));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f = FiniteField::new(3, 4).unwrap();
        assert_eq!(f.minimal_polynomial(FieldElement::ZERO), Polynomial::new(3, vec![0, 1]));
        assert_eq!(f.minimal_polynomial(FieldElement::ONE), Polynomial::new(3, vec![2, 1]));
        assert_eq!(f.minimal_polynomial(f.primitive_element()).degree(), Some(4));
        assert_eq!(&f.minimal_polynomial(FieldElement(3)), f.modulus());
    }

    #[test]
    fn modulus_index_hook() {
        let a = FiniteField::new(3, 4).unwrap();
        let opts = FieldOptions { modulus_index: 1, ..Default::default() };
        let b = FiniteField::with_options(3, 4, opts).unwrap();
        assert_ne!(a.modulus(), b.modulus());
        assert!(b.modulus().is_irreducible());
        let opts = FieldOptions { primitive_index: 1, ..Default::default() };
        let c = FiniteField::with_options(3, 4, opts).unwrap();
        assert!(c.primitive_element() > a.primitive_element());
        assert_eq!(c.order(c.primitive_element()).unwrap(), 80);
    }
}
