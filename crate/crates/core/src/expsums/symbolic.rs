use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::{gauss_sum, CyclotomicInteger};
use crate::arith::ipow;

/// A value (a + b·√q*)·p^e with q = p^d and q* = (-1)^((q-1)/2) q.
///
/// Normal form: for even d the radical is the integer p^(d/2) and is folded
/// into `a`, so `b = 0`; `e` is the largest exponent with p^e dividing both
/// `a` and `b` (0 for the zero value). The cyclotomic image of √q* is
/// g_p·p^((d-1)/2) for odd d, g_p the quadratic Gauss sum.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymbolicSumValue {
    pub a: i128,
    pub b: i128,
    pub e: u32,
    p: u64,
    d: u32,
}

impl SymbolicSumValue {
    /// Builds A + B·√q* from unscaled integer parts.
    pub fn from_parts(p: u64, d: u32, mut big_a: i128, mut big_b: i128) -> Self {
        if d.is_multiple_of(2) {
            big_a += big_b * ipow(p as i128, d / 2);
            big_b = 0;
        }
        let pi = p as i128;
        let mut e = 0;
        if big_a != 0 || big_b != 0 {
            while big_a % pi == 0 && big_b % pi == 0 {
                big_a /= pi;
                big_b /= pi;
                e += 1;
            }
        }
        SymbolicSumValue { a: big_a, b: big_b, e, p, d }
    }

    pub fn integer(p: u64, d: u32, n: i128) -> Self {
        Self::from_parts(p, d, n, 0)
    }

    /// ±√q*·p^e-style constructor: (a + b√q*)·p^e.
    pub fn new(p: u64, d: u32, a: i128, b: i128, e: u32) -> Self {
        let scale = ipow(p as i128, e);
        Self::from_parts(p, d, a * scale, b * scale)
    }

    pub fn zero(p: u64, d: u32) -> Self {
        Self::integer(p, d, 0)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn subfield_degree(&self) -> u32 {
        self.d
    }

    /// q* for this value's context.
    pub fn q_star(&self) -> i128 {
        let q = ipow(self.p as i128, self.d);
        if q % 4 == 1 {
            q
        } else {
            -q
        }
    }

    /// (A, B) with value A + B·√q*.
    pub fn unscaled(&self) -> (i128, i128) {
        let s = ipow(self.p as i128, self.e);
        (self.a * s, self.b * s)
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.is_rational().then(|| self.unscaled().0)
    }

    /// The canonical element of Z[ζ_p] this value denotes.
    pub fn cyclotomic(&self) -> CyclotomicInteger {
        let p = self.p as u32;
        let (big_a, big_b) = self.unscaled();
        let rational = CyclotomicInteger::from_int(p, big_a);
        if big_b == 0 {
            return rational;
        }
        let root = gauss_sum(p).scale(ipow(self.p as i128, (self.d - 1) / 2));
        rational.add(&root.scale(big_b))
    }

    /// Inverse of [`Self::cyclotomic`]: recovers A + B·√q* when `c` lies in
    /// Z + Z·√q*.
    pub fn from_cyclotomic(c: &CyclotomicInteger, d: u32) -> Option<Self> {
        let p = c.prime();
        if c.is_rational() {
            return Some(Self::integer(p as u64, d, c.coeffs()[0]));
        }
        if d.is_multiple_of(2) {
            return None;
        }
        let root = gauss_sum(p).scale(ipow(p as i128, (d - 1) / 2));
        let (j, &gj) = root.coeffs().iter().enumerate().skip(1).find(|(_, &g)| g != 0)?;
        let cj = c.coeffs()[j];
        if cj % gj != 0 {
            return None;
        }
        let big_b = cj / gj;
        let big_a = c.coeffs()[0] - big_b * root.coeffs()[0];
        let v = Self::from_parts(p as u64, d, big_a, big_b);
        (v.cyclotomic() == *c).then_some(v)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::integer(self.p, self.d, 1), |acc, _| acc * *self)
    }

    pub fn scale(&self, k: i128) -> Self {
        let (a, b) = self.unscaled();
        Self::from_parts(self.p, self.d, a * k, b * k)
    }
}

impl Add for SymbolicSumValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!((self.p, self.d), (rhs.p, rhs.d));
        let (a1, b1) = self.unscaled();
        let (a2, b2) = rhs.unscaled();
        Self::from_parts(self.p, self.d, a1 + a2, b1 + b2)
    }
}

impl Neg for SymbolicSumValue {
    type Output = Self;
    fn neg(self) -> Self {
        SymbolicSumValue { a: -self.a, b: -self.b, ..self }
    }
}

impl Sub for SymbolicSumValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for SymbolicSumValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!((self.p, self.d), (rhs.p, rhs.d));
        let (a1, b1) = self.unscaled();
        let (a2, b2) = rhs.unscaled();
        let qs = self.q_star();
        Self::from_parts(self.p, self.d, a1 * a2 + b1 * b2 * qs, a1 * b2 + a2 * b1)
    }
}

impl Ord for SymbolicSumValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.d, self.unscaled()).cmp(&(other.p, other.d, other.unscaled()))
    }
}

impl PartialOrd for SymbolicSumValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SymbolicSumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym({self})")
    }
}

/// `(a + b√q*)·p^e`, dropping zero parts and a trivial power.
impl fmt::Display for SymbolicSumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let SymbolicSumValue { a, b, e, p, .. } = *self;
        let radical = |c: i128| match c {
            1 => alloc::string::String::from("√q*"),
            c => alloc::format!("{c}√q*"),
        };
        let body = match (a, b) {
            (a, 0) => alloc::format!("{a}"),
            (0, -1) => alloc::string::String::from("-√q*"),
            (0, b) => radical(b),
            (a, b) if b < 0 => alloc::format!("({a} - {})", radical(-b)),
            (a, b) => alloc::format!("({a} + {})", radical(b)),
        };
        if e == 0 || (a == 0 && b == 0) {
            f.write_str(&body)
        } else {
            write!(f, "{body}·{p}^{e}")
        }
    }
}
