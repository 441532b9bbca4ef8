//! Small integer helpers shared across modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some(a)` when `n = p^a` with `a ≥ 0`.
pub fn exact_log(p: u64, n: u64) -> Option<u32> {
    if p < 2 || n == 0 {
        return None;
    }
    let (mut n, mut a) = (n, 0u32);
    while n % p == 0 {
        n /= p;
        a += 1;
    }
    (n == 1).then_some(a)
}

/// `Some(a)` when the big integer `n = p^a`.
pub fn exact_log_big(p: u64, n: &BigUint) -> Option<u32> {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut a = 0u32;
    if n == BigUint::from(0u8) {
        return None;
    }
    while !n.is_one() {
        if &n % &p != BigUint::from(0u8) {
            return None;
        }
        n /= &p;
        a += 1;
    }
    Some(a)
}

pub fn big_pow(base: u64, exp: u64) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

pub fn ubig_pow(base: u64, exp: u64) -> BigUint {
    Pow::pow(BigUint::from(base), exp)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn rat_int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Classical Möbius function on positive integers.
pub fn moebius(n: u64) -> i64 {
    let (mut n, mut d, mut sign) = (n, 2u64, 1i64);
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
