//! Gram matrices of f_{α,β} in the basis π^0..π^(s-1) and their congruence
//! diagonalization over F_q.

use alloc::vec;
use alloc::vec::Vec;

use super::family::FormFamily;
use crate::error::Result;
use crate::gf::{FieldElement, FiniteField};

/// Dense symmetric matrix with entries in a subfield of the ambient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<FieldElement>,
}

impl SymMatrix {
    pub fn zero(dim: usize) -> Self {
        SymMatrix { dim, entries: vec![FieldElement::ZERO; dim * dim] }
    }

    /// Builds from a row-major square array. Panics unless symmetric.
    pub fn from_rows(rows: &[Vec<FieldElement>]) -> Self {
        let dim = rows.len();
        let mut m = SymMatrix::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, rows[j][i], "matrix is not symmetric");
                m.entries[i * dim + j] = v;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.dim + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// X A X' for a coordinate vector X.
    pub fn eval(&self, field: &FiniteField, x: &[FieldElement]) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let t = field.mul(field.mul(x[i], self.get(i, j)), x[j]);
                acc = field.add(acc, t);
            }
        }
        acc
    }

    /// P A P' for the permutation sending row i to row perm[i].
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = SymMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(perm[i], perm[j], self.get(i, j));
            }
        }
        out
    }

    /// Ordinary matrix rank over the field (row reduction).
    pub fn rank(&self, field: &FiniteField) -> usize {
        let n = self.dim;
        let mut rows: Vec<Vec<FieldElement>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| !rows[r][col].is_zero()) else { continue };
            rows.swap(rank, piv);
            let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
            for r in 0..n {
                if r != rank && !rows[r][col].is_zero() {
                    let c = field.mul(rows[r][col], inv);
                    for cc in col..n {
                        let t = field.mul(c, rows[rank][cc]);
                        rows[r][cc] = field.sub(rows[r][cc], t);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Result of congruence diagonalization: f = Σ a_i z_i² with every a_i ≠ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    pub dim: usize,
    pub entries: Vec<FieldElement>,
}

impl DiagonalForm {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Product a_1 ⋯ a_r (1 for the empty form).
    pub fn discriminant(&self, field: &FiniteField) -> FieldElement {
        self.entries.iter().fold(FieldElement::ONE, |acc, &a| field.mul(acc, a))
    }

    /// η_d(a_1 ⋯ a_r).
    pub fn discriminant_character(&self, field: &FiniteField, d: u32) -> Result<i32> {
        field.quadratic_character(self.discriminant(field), d)
    }
}

/// Symmetric Gaussian elimination (T A T') in odd characteristic.
///
/// When every remaining diagonal entry is zero but some off-diagonal a_jl is
/// not, adding basis vector l to j makes the (j, j) entry 2 a_jl ≠ 0.
pub fn diagonalize(field: &FiniteField, a: &SymMatrix) -> DiagonalForm {
    let n = a.dim;
    let mut m = a.clone();
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let pivot = (i..n).find(|&j| !m.get(j, j).is_zero());
        let pivot = match pivot {
            Some(j) => j,
            None => {
                let Some((j, l)) =
                    (i..n).flat_map(|j| (j + 1..n).map(move |l| (j, l))).find(|&(j, l)| !m.get(j, l).is_zero())
                else {
                    break;
                };
                // e_j <- e_j + e_l: row j += row l, then column j += column l.
                for c in i..n {
                    let v = field.add(m.get(j, c), m.get(l, c));
                    m.set(j, c, v);
                }
                for r in i..n {
                    let v = field.add(m.get(r, j), m.get(r, l));
                    m.set(r, j, v);
                }
                j
            }
        };
        if pivot != i {
            for c in i..n {
                let (x, y) = (m.get(i, c), m.get(pivot, c));
                m.set(i, c, y);
                m.set(pivot, c, x);
            }
            for r in i..n {
                let (x, y) = (m.get(r, i), m.get(r, pivot));
                m.set(r, i, y);
                m.set(r, pivot, x);
            }
        }
        let d = m.get(i, i);
        let d_inv = field.inv(d).expect("pivot is nonzero");
        for r in i + 1..n {
            let c = field.mul(m.get(r, i), d_inv);
            if c.is_zero() {
                continue;
            }
            for cc in i..n {
                let v = field.sub(m.get(r, cc), field.mul(c, m.get(i, cc)));
                m.set(r, cc, v);
            }
            for rr in i..n {
                let v = field.sub(m.get(rr, r), field.mul(c, m.get(rr, i)));
                m.set(rr, r, v);
            }
        }
        entries.push(d);
    }
    DiagonalForm { dim: n, entries }
}

impl FormFamily {
    /// Gram matrix A of f_{α,β} with X A X' = f_{α,β}(Σ x_i π^i).
    pub fn gram_matrix(&self, alpha: FieldElement, beta: FieldElement) -> SymMatrix {
        let f = self.field();
        let basis = self.gram_basis();
        let s = basis.len();
        let half = self.inverse_of_two();
        let mut a = SymMatrix::zero(s);
        let diag: Vec<FieldElement> = basis.iter().map(|&e| self.form_value(alpha, beta, e)).collect();
        for i in 0..s {
            a.set(i, i, diag[i]);
            for j in i + 1..s {
                let both = self.form_value(alpha, beta, f.add(basis[i], basis[j]));
                let v = f.mul(half, f.sub(f.sub(both, diag[i]), diag[j]));
                a.set(i, j, v);
                a.set(j, i, v);
            }
        }
        a
    }

    /// F_q-coordinates of x in the basis π^0..π^(s-1).
    ///
    /// Found by solving the s×s system over F_q through the trace pairing is
    /// overkill for the small fields here; this enumerates instead and is only
    /// meant for tests.
    pub fn gram_coordinates(&self, x: FieldElement) -> Option<Vec<FieldElement>> {
        let f = self.field();
        let d = self.params().d;
        let sub: Vec<FieldElement> = f.elements().filter(|&e| f.in_subfield(e, d)).collect();
        let s = self.gram_basis().len();
        let q = sub.len();
        let total = (q as u64).checked_pow(s as u32)?;
        (0..total).find_map(|mut idx| {
            let coords: Vec<FieldElement> = (0..s)
                .map(|_| {
                    let c = sub[(idx % q as u64) as usize];
                    idx /= q as u64;
                    c
                })
                .collect();
            let y =
                coords.iter().zip(self.gram_basis()).fold(FieldElement::ZERO, |acc, (&c, &e)| f.add(acc, f.mul(c, e)));
            (y == x).then_some(coords)
        })
    }
}
