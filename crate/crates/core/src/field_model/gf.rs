//! Finite fields `F_q`, `q = p^a`, by full addition and multiplication
//! tables. Elements are the integers `0..q`, read as base-`p` digit vectors
//! of polynomials in a generator modulo a fixed irreducible.

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Largest supported field; the tables hold `q²` entries each.
pub const MAX_Q: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf {
    p: u32,
    a: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// Splits `q = p^a` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut n = q;
    let mut a = 0;
    while n.is_multiple_of(p) {
        n /= p;
        a += 1;
    }
    (n == 1 && is_prime(p)).then_some((p, a))
}

fn digits(mut x: u32, p: u32, a: u32) -> Vec<u32> {
    (0..a)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two digit vectors modulo the monic `modulus` (low-order first,
/// leading 1 omitted), over `F_p`.
fn mul_mod(x: &[u32], y: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let a = modulus.len();
    let mut prod = vec![0u32; 2 * a];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi * yj) % p;
        }
    }
    for k in (a..2 * a).rev() {
        let c = prod[k];
        if c != 0 {
            prod[k] = 0;
            for (i, &mi) in modulus.iter().enumerate() {
                prod[k - a + i] = (prod[k - a + i] + (p - c) * mi) % p;
            }
        }
    }
    prod.truncate(a);
    prod
}

impl Gf {
    pub fn new(q: u64) -> Result<Self> {
        let (p, a) = prime_power(q)
            .ok_or_else(|| Error::OutOfRange(format!("q = {q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::ResourceLimit(format!("field size {q} exceeds {MAX_Q}")));
        }
        let (p, q) = (p as u32, q as u32);
        // The first monic modulus whose table is a field.
        for m in 0..q {
            let modulus = digits(m, p, a);
            if a > 1 && modulus[0] == 0 {
                continue;
            }
            let mut mul = vec![0u32; (q * q) as usize];
            for x in 0..q {
                let dx = digits(x, p, a);
                for y in x..q {
                    let z = undigits(&mul_mod(&dx, &digits(y, p, a), &modulus, p), p);
                    mul[(x * q + y) as usize] = z;
                    mul[(y * q + x) as usize] = z;
                }
            }
            let mut inv = vec![0u32; q as usize];
            let is_field = (1..q).all(|x| {
                (1..q)
                    .find(|&y| mul[(x * q + y) as usize] == 1)
                    .map(|y| inv[x as usize] = y)
                    .is_some()
            });
            if !is_field {
                continue;
            }
            let mut add = vec![0u32; (q * q) as usize];
            let mut neg = vec![0u32; q as usize];
            for x in 0..q {
                let dx = digits(x, p, a);
                neg[x as usize] = undigits(&dx.iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p);
                for y in 0..q {
                    let s: Vec<u32> = dx
                        .iter()
                        .zip(digits(y, p, a))
                        .map(|(&c, d)| (c + d) % p)
                        .collect();
                    add[(x * q + y) as usize] = undigits(&s, p);
                }
            }
            return Ok(Gf { p, a, q, add, mul, neg, inv });
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Degree of `F_q` over `F_p`.
    pub fn degree(&self) -> u32 {
        self.a
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.add[(x * self.q + y) as usize]
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    pub fn neg(&self, x: u32) -> u32 {
        self.neg[x as usize]
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[(x * self.q + y) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, x: u32) -> u32 {
        assert!(x != 0, "zero has no inverse");
        self.inv[x as usize]
    }

    pub fn pow(&self, x: u32, mut k: u64) -> u32 {
        let (mut base, mut acc) = (x, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 8, 9, 16, 25, 27] {
            let f = Gf::new(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.add(x, f.neg(x)), 0);
                assert_eq!(f.pow(x, q), x, "Frobenius fixes F_{q}");
                if x != 0 {
                    assert_eq!(f.mul(x, f.inv(x)), 1);
                }
                for y in f.elements() {
                    for z in [0, 1, q as u32 - 1] {
                        let lhs = f.mul(x, f.add(y, z));
                        assert_eq!(lhs, f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
        }
        assert!(Gf::new(6).is_err());
        assert!(Gf::new(512).is_err());
    }
}
