//! Small integer helpers shared by the field and table code.

use alloc::vec::Vec;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// 2-adic valuation of a positive integer.
pub fn v2(j: u64) -> u32 {
    assert!(j >= 1, "v2 is defined for positive integers only");
    j.trailing_zeros()
}

/// `base^exp`, returning `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

pub fn ipow(base: i128, exp: u32) -> i128 {
    let mut acc: i128 = 1;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod_p(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

pub fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v2_examples() {
        assert_eq!(v2(1), 0);
        assert_eq!(v2(4), 2);
        assert_eq!(v2(6), 1);
    }

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(3) && is_prime(5) && is_prime(7) && is_prime(11));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(15));
        assert_eq!(prime_factors(728), [2, 7, 13]);
        assert_eq!(prime_factors(80), [2, 5]);
        assert_eq!(prime_factors(2), [2]);
    }

    #[test]
    fn pow_helpers() {
        assert_eq!(checked_pow(3, 6), Some(729));
        assert_eq!(checked_pow(u64::MAX, 2), None);
        assert_eq!(pow_mod(3, 4, 80), 1);
        assert_eq!(ipow(-3, 3), -27);
        assert_eq!(mul_mod(u64::MAX, 2, 7), 2);
    }
}
