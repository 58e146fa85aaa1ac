use alloc::vec::Vec;

use super::params::CodeParams;
use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldOptions, FiniteField};

/// The family of quadratic forms f_{α,β}(x) = Tr_d^m(α x^(p^k+1) + β x²)
/// over a concrete field, with the lookup tables every sum and rank
/// computation shares. Immutable once built.
#[derive(Debug, Clone)]
pub struct FormFamily {
    params: CodeParams,
    field: FiniteField,
    /// (p^k + 1)/2 mod (p^m - 1).
    half_pk1_mod_n: u64,
    twist_alpha: FieldElement,
    twist_beta: FieldElement,
    half: FieldElement,
    two: FieldElement,
    /// Tr_d^m(x) for every element, as codes.
    trace_d: Vec<u32>,
    /// x^(p^k+1) for every element.
    pow_pk1: Vec<FieldElement>,
    /// x² for every element.
    square: Vec<FieldElement>,
    /// The F_q-basis π^0..π^(s-1) used for Gram matrices.
    basis: Vec<FieldElement>,
}

impl FormFamily {
    pub fn new(p: u64, m: u32, k: u32) -> Result<Self> {
        Self::with_options(p, m, k, FieldOptions::default())
    }

    pub fn with_options(p: u64, m: u32, k: u32, opts: FieldOptions) -> Result<Self> {
        let params = CodeParams::classify(p, m, k)?;
        let field = FiniteField::with_options(p, m, opts)?;
        Ok(Self::from_field(params, field))
    }

    pub fn from_field(params: CodeParams, field: FiniteField) -> Self {
        assert_eq!(params.p, field.characteristic() as u64);
        assert_eq!(params.m, field.degree());
        let n = field.group_order() as u64;
        let pk_mod_n = arith::pow_mod(params.p, params.k as u64, n);
        let pk_mod_2n = arith::pow_mod(params.p, params.k as u64, 2 * n);
        let half_pk1_mod_n = pk_mod_2n.div_ceil(2) % n;
        let pi = field.primitive_element();
        let twist_alpha = field.exp(half_pk1_mod_n);
        let twist_beta = field.neg(pi);
        let two = field.from_prime(2);
        let half = field.inv(two).expect("p is odd");

        let d = params.d;
        let m = params.m;
        let mut basis_traces = Vec::with_capacity(m as usize);
        for j in 0..m {
            let x = FieldElement(field.power_of_p(j) as u32);
            basis_traces.push(field.trace(x, d).expect("d divides m"));
        }
        let size = field.size() as usize;
        let pu = params.p as usize;
        let mut trace_d = alloc::vec![0u32; size];
        for code in 1..size {
            let mut rest = code;
            let mut j = 0;
            while rest % pu == 0 {
                rest /= pu;
                j += 1;
            }
            let prev = code - field.power_of_p(j) as usize;
            trace_d[code] = field.add(FieldElement(trace_d[prev]), basis_traces[j as usize]).0;
        }

        let pow_pk1 = field.elements().map(|x| field.pow(x, pk_mod_n + 1)).collect();
        let square = field.elements().map(|x| field.mul(x, x)).collect();
        let basis = (0..params.s as u64).map(|i| field.exp(i)).collect();

        FormFamily {
            params,
            field,
            half_pk1_mod_n,
            twist_alpha,
            twist_beta,
            half,
            two,
            trace_d,
            pow_pk1,
            square,
            basis,
        }
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// (p^k + 1)/2 reduced mod p^m - 1.
    pub fn half_pk1_exponent(&self) -> u64 {
        self.half_pk1_mod_n
    }

    pub fn inverse_of_two(&self) -> FieldElement {
        self.half
    }

    /// x^(p^k).
    #[inline]
    pub fn frob_k(&self, x: FieldElement) -> FieldElement {
        self.field.frobenius(x, self.params.k % self.params.m)
    }

    /// x^(p^(m-k)), the inverse of [`Self::frob_k`].
    #[inline]
    pub fn frob_minus_k(&self, x: FieldElement) -> FieldElement {
        let m = self.params.m;
        self.field.frobenius(x, (m - self.params.k % m) % m)
    }

    #[inline]
    pub fn pow_pk1(&self, x: FieldElement) -> FieldElement {
        self.pow_pk1[x.0 as usize]
    }

    #[inline]
    pub fn square(&self, x: FieldElement) -> FieldElement {
        self.square[x.0 as usize]
    }

    #[inline]
    pub fn trace_d(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.trace_d[x.0 as usize])
    }

    /// The companion pair (π^((p^k+1)/2) α, -π β).
    #[inline]
    pub fn twist(&self, alpha: FieldElement, beta: FieldElement) -> (FieldElement, FieldElement) {
        (self.field.mul(self.twist_alpha, alpha), self.field.mul(self.twist_beta, beta))
    }

    /// The F_q-basis π^0..π^(s-1).
    pub fn gram_basis(&self) -> &[FieldElement] {
        &self.basis
    }

    /// α x^(p^k+1) + β x², the argument of both traces.
    #[inline]
    pub fn inner(&self, alpha: FieldElement, beta: FieldElement, x: FieldElement) -> FieldElement {
        let f = &self.field;
        f.add(f.mul(alpha, self.pow_pk1(x)), f.mul(beta, self.square(x)))
    }

    /// f_{α,β}(x) = Tr_d^m(α x^(p^k+1) + β x²), an element of F_q.
    #[inline]
    pub fn form_value(&self, alpha: FieldElement, beta: FieldElement, x: FieldElement) -> FieldElement {
        self.trace_d(self.inner(alpha, beta, x))
    }

    /// φ_{α,β}(x) = α^(p^k) x^(p^(2k)) + 2 β^(p^k) x^(p^k) + α x.
    pub fn phi(&self, alpha: FieldElement, beta: FieldElement, x: FieldElement) -> FieldElement {
        let f = &self.field;
        let xk = self.frob_k(x);
        let x2k = self.frob_k(xk);
        let t1 = f.mul(self.frob_k(alpha), x2k);
        let t2 = f.mul(f.mul(self.two, self.frob_k(beta)), xk);
        f.add(f.add(t1, t2), f.mul(alpha, x))
    }

    /// ψ(α, x) = -(1/2) x^(-1) (α x^(p^k) + α^(p^(m-k)) x^(p^(m-k))).
    pub fn psi(&self, alpha: FieldElement, x: FieldElement) -> Result<FieldElement> {
        let f = &self.field;
        let x_inv = f.inv(x).map_err(|_| Error::ZeroArgument)?;
        let inner = f.add(f.mul(alpha, self.frob_k(x)), f.mul(self.frob_minus_k(alpha), self.frob_minus_k(x)));
        Ok(f.neg(f.mul(f.mul(self.half, x_inv), inner)))
    }

    /// F_p-nullity of x ↦ φ_{α,β}(x) as an m×m matrix.
    pub fn phi_nullity(&self, alpha: FieldElement, beta: FieldElement) -> u32 {
        let f = &self.field;
        let m = self.params.m;
        let ak = self.frob_k(alpha);
        let bk2 = f.mul(self.two, self.frob_k(beta));
        let mut rows: Vec<Vec<u32>> = (0..m)
            .map(|j| {
                let x = FieldElement(f.power_of_p(j) as u32);
                let xk = self.frob_k(x);
                let x2k = self.frob_k(xk);
                let y = f.add(f.add(f.mul(ak, x2k), f.mul(bk2, xk)), f.mul(alpha, x));
                f.digits(y)
            })
            .collect();
        m - super::linalg::rank_mod_p(&mut rows, self.params.p as u32) as u32
    }

    /// Rank of f_{α,β} over F_q, from the kernel of φ.
    pub fn rank(&self, alpha: FieldElement, beta: FieldElement) -> Result<u32> {
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::BothZero);
        }
        let CodeParams { d, s, .. } = self.params;
        let nu = self.phi_nullity(alpha, beta);
        if !nu.is_multiple_of(d) {
            return Err(Error::InternalInconsistency(alloc::format!("phi nullity {nu} is not a multiple of d = {d}")));
        }
        let r = s as i64 - (nu / d) as i64;
        if r < s as i64 - 2 {
            return Err(Error::InternalInconsistency(alloc::format!("rank {r} outside {{s-2, s-1, s}} for s = {s}")));
        }
        Ok(r as u32)
    }

    /// Index of the i-th field element, used to split (α, β) enumerations.
    #[inline]
    pub fn element(&self, i: u64) -> FieldElement {
        FieldElement(i as u32)
    }

    pub fn field_size(&self) -> u64 {
        self.field.size() as u64
    }
}
