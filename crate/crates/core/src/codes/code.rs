use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldOptions, FiniteField, Polynomial};
use crate::quadforms::{CodeParams, FormFamily};

/// The cyclic code with parity-check polynomial h1·h2, h1 and h2 the minimal
/// polynomials of -π^(-1) and π^(-(p^k+1)/2). Codewords are
/// c_i = Tr(α π^((p^k+1)/2 · i) + β (-π)^i), 0 ≤ i < p^m - 1.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    family: FormFamily,
    h1: Polynomial,
    h2: Polynomial,
    generator: Polynomial,
    /// Discrete logs of π^((p^k+1)/2 · i) and (-π)^i.
    u_log: Vec<u32>,
    w_log: Vec<u32>,
    /// Tr(π^j) for 0 ≤ j < 2(p^m - 1).
    trace_pow: Vec<u16>,
}

impl CyclicCode {
    pub fn new(p: u64, m: u32, k: u32) -> Result<Self> {
        Self::with_options(p, m, k, FieldOptions::default())
    }

    /// Builds the code over the field selected by `opts`.
    pub fn with_options(p: u64, m: u32, k: u32, opts: FieldOptions) -> Result<Self> {
        let family = FormFamily::with_options(p, m, k, opts)?;
        Self::from_family(family)
    }

    pub fn from_family(family: FormFamily) -> Result<Self> {
        let f = family.field();
        let params = *family.params();
        if f.characteristic() >= u16::MAX as u32 {
            return Err(Error::NotOddPrime(params.p));
        }
        let n = f.group_order() as u64;
        let pi = f.primitive_element();
        let e = family.half_pk1_exponent();

        let root1 = f.neg(f.inv(pi)?);
        let root2 = f.exp(n - e % n);
        let h1 = f.minimal_polynomial(root1);
        let h2 = f.minimal_polynomial(root2);
        let m = params.m as usize;
        if h1.degree() != Some(m) || h2.degree() != Some(m) || h1 == h2 {
            return Err(Error::DistinctnessViolated);
        }
        // Nonzero roots: no coordinate is identically zero on the code.
        if h1.coeff(0) == 0 || h2.coeff(0) == 0 {
            return Err(Error::InternalInconsistency("h1 or h2 has a zero root".into()));
        }
        let pc = f.characteristic();
        let xn_minus_1 = Polynomial::monomial(pc, n as usize, 1).sub(&Polynomial::one(pc));
        let (generator, rem) = xn_minus_1.div_rem(&h1.mul(&h2));
        if !rem.is_zero() {
            return Err(Error::InternalInconsistency("h1·h2 does not divide x^n - 1".into()));
        }

        // -1 = π^(n/2), so (-π)^i = π^(i (n/2 + 1)).
        let w_step = (n / 2 + 1) % n;
        let u_log = (0..n).map(|i| arith::mul_mod(i, e, n) as u32).collect();
        let w_log = (0..n).map(|i| arith::mul_mod(i, w_step, n) as u32).collect();
        let trace_pow = (0..2 * n).map(|j| f.abs_trace(f.exp(j)) as u16).collect();
        Ok(CyclicCode { family, h1, h2, generator, u_log, w_log, trace_pow })
    }

    pub fn params(&self) -> &CodeParams {
        self.family.params()
    }

    pub fn family(&self) -> &FormFamily {
        &self.family
    }

    pub fn field(&self) -> &FiniteField {
        self.family.field()
    }

    pub fn length(&self) -> u64 {
        self.field().group_order() as u64
    }

    pub fn dimension(&self) -> u32 {
        2 * self.params().m
    }

    pub fn h1(&self) -> &Polynomial {
        &self.h1
    }

    pub fn h2(&self) -> &Polynomial {
        &self.h2
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    /// Tr(x · π^(log_i)) for every coordinate i; all zeros when x = 0.
    pub(crate) fn trace_row(&self, x: FieldElement, logs: &[u32]) -> Vec<u16> {
        match self.field().log(x) {
            None => alloc::vec![0; logs.len()],
            Some(l) => logs.iter().map(|&j| self.trace_pow[(l + j) as usize]).collect(),
        }
    }

    /// Row Tr(α π^((p^k+1)/2 · i)).
    pub(crate) fn alpha_row(&self, alpha: FieldElement) -> Vec<u16> {
        self.trace_row(alpha, &self.u_log)
    }

    /// Row Tr(β (-π)^i).
    pub(crate) fn beta_row(&self, beta: FieldElement) -> Vec<u16> {
        self.trace_row(beta, &self.w_log)
    }

    pub fn codeword(&self, alpha: FieldElement, beta: FieldElement) -> Vec<u16> {
        let p = self.field().characteristic() as u16;
        let a = self.alpha_row(alpha);
        let b = self.beta_row(beta);
        a.iter().zip(&b).map(|(&x, &y)| (x + y) % p).collect()
    }

    /// Number of nonzero coordinates: n minus the count of i with
    /// Tr(α u_i) + Tr(β w_i) = 0.
    pub fn codeword_weight(&self, alpha: FieldElement, beta: FieldElement) -> u64 {
        let p = self.field().characteristic() as u16;
        let a = self.alpha_row(alpha);
        let b = self.beta_row(beta);
        let zeros = a.iter().zip(&b).filter(|&(&x, &y)| (x + y) % p == 0).count() as u64;
        self.length() - zeros
    }

    /// The pair whose codeword is the right cyclic shift of codeword(α, β):
    /// (α π^(-(p^k+1)/2), -β π^(-1)).
    pub fn shift_pair(&self, alpha: FieldElement, beta: FieldElement) -> (FieldElement, FieldElement) {
        let f = self.field();
        let n = self.length();
        let e = self.family.half_pk1_exponent();
        let pi_inv = f.exp(n - 1);
        (f.mul(alpha, f.exp(n - e % n)), f.neg(f.mul(beta, pi_inv)))
    }
}

/// Right cyclic shift: c'_i = c_(i-1).
pub fn shift_right<T: Copy>(word: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(word.len());
    if let Some(&last) = word.last() {
        out.push(last);
        out.extend_from_slice(&word[..word.len() - 1]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_code_structure() {
        let code = CyclicCode::new(3, 4, 1).unwrap();
        assert_eq!(code.length(), 80);
        assert_eq!(code.dimension(), 8);
        let prod = code.h1().mul(code.h2()).mul(code.generator());
        let x80 = Polynomial::monomial(3, 80, 1).sub(&Polynomial::one(3));
        assert_eq!(prod, x80);
        assert_eq!(code.generator().degree(), Some(72));
    }

    #[test]
    fn example_code_sizes() {
        for (m, k) in [(6, 4), (6, 1)] {
            let code = CyclicCode::new(3, m, k).unwrap();
            assert_eq!((code.length(), code.dimension()), (728, 12));
        }
    }

    #[test]
    fn zero_word_and_weight() {
        let code = CyclicCode::new(3, 4, 1).unwrap();
        let z = FieldElement::ZERO;
        assert!(code.codeword(z, z).iter().all(|&c| c == 0));
        assert_eq!(code.codeword_weight(z, z), 0);
    }

    #[test]
    fn codeword_matches_definition() {
        let code = CyclicCode::new(3, 4, 1).unwrap();
        let f = code.field();
        let pi = f.primitive_element();
        let e = code.family().half_pk1_exponent();
        let (a, b) = (f.exp(7), f.exp(30));
        let word = code.codeword(a, b);
        for (i, &c) in word.iter().enumerate() {
            let u = f.pow(pi, e * i as u64);
            let w = f.pow(f.neg(pi), i as u64);
            let t = f.abs_trace(f.add(f.mul(a, u), f.mul(b, w)));
            assert_eq!(c as u32, t);
        }
    }

    #[test]
    fn shift_helper() {
        assert_eq!(shift_right(&[1, 2, 3]), alloc::vec![3, 1, 2]);
        assert!(shift_right::<u8>(&[]).is_empty());
    }
}
