//! The rational function field `F_q(T)`: places, divisors, place counts and
//! the zeta series.

pub mod gf;
pub mod poly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{divisors, moebius, ubig_pow};
use crate::error::{Error, Result};
use crate::series::SeriesT;

pub use gf::{prime_power, Gf};
pub use poly::{Poly, PolyRing, ResidueRing};

/// The constant field size of `F_q(T)`, split as `q = p^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    pub q: u64,
    pub p: u64,
    pub a: u32,
}

impl FieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        let (p, a) = prime_power(q)
            .ok_or_else(|| Error::OutOfRange(format!("q = {q} is not a prime power")))?;
        Ok(FieldSpec { q, p, a })
    }

    /// Like [`FieldSpec::new`] but requires the characteristic to be `p`.
    pub fn with_char(q: u64, p: u64) -> Result<Self> {
        match Self::new(q) {
            Ok(f) if f.p == p => Ok(f),
            _ => Err(Error::MismatchedCharacteristic { q, p }),
        }
    }

    pub fn ring(&self) -> Result<PolyRing> {
        PolyRing::new(self.q)
    }
}

/// A place of `F_q(T)`: a monic irreducible polynomial or the infinite place.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaceDesc {
    Finite(Poly),
    Infinite,
}

impl PlaceDesc {
    pub fn finite(ring: &PolyRing, pi: Poly) -> Result<Self> {
        ring.check(&pi)?;
        if !pi.is_monic() || !ring.is_irreducible(&pi) {
            return Err(Error::OutOfRange(format!("{pi} is not monic irreducible")));
        }
        Ok(PlaceDesc::Finite(pi))
    }

    pub fn degree(&self) -> usize {
        match self {
            PlaceDesc::Finite(pi) => pi.degree().expect("places are nonconstant"),
            PlaceDesc::Infinite => 1,
        }
    }

    /// All places of degree `d`, finite ones in index order, `∞` last.
    pub fn of_degree(ring: &PolyRing, d: usize) -> Vec<PlaceDesc> {
        let mut v: Vec<PlaceDesc> = ring
            .monic_irreducibles(d)
            .into_iter()
            .map(PlaceDesc::Finite)
            .collect();
        if d == 1 {
            v.push(PlaceDesc::Infinite);
        }
        v
    }
}

impl fmt::Display for PlaceDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceDesc::Finite(pi) => write!(f, "({pi})"),
            PlaceDesc::Infinite => write!(f, "inf"),
        }
    }
}

/// An effective divisor: places with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DivisorDesc {
    parts: BTreeMap<PlaceDesc, u32>,
}

impl DivisorDesc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(v: PlaceDesc, m: u32) -> Self {
        let mut d = Self::zero();
        d.set(v, m);
        d
    }

    /// Sets the exponent at `v`; zero removes the place.
    pub fn set(&mut self, v: PlaceDesc, m: u32) {
        if m == 0 {
            self.parts.remove(&v);
        } else {
            self.parts.insert(v, m);
        }
    }

    pub fn exponent(&self, v: &PlaceDesc) -> u32 {
        self.parts.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PlaceDesc, u32)> {
        self.parts.iter().map(|(v, &m)| (v, m))
    }

    pub fn support(&self) -> impl Iterator<Item = &PlaceDesc> {
        self.parts.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.iter().map(|(v, m)| v.degree() * m as usize).sum()
    }

    /// Every supporting place has exponent at least 2.
    pub fn is_squareful(&self) -> bool {
        self.parts.values().all(|&m| m >= 2)
    }

    pub fn divides(&self, other: &DivisorDesc) -> bool {
        self.iter().all(|(v, m)| other.exponent(v) >= m)
    }

    /// Pointwise maximum.
    pub fn lcm(&self, other: &DivisorDesc) -> DivisorDesc {
        let mut out = self.clone();
        for (v, m) in other.iter() {
            out.set(v.clone(), m.max(self.exponent(v)));
        }
        out
    }

    /// All effective divisors of degree at most `n`.
    pub fn up_to_degree(ring: &PolyRing, n: usize) -> Vec<DivisorDesc> {
        let places: Vec<PlaceDesc> = (1..=n).flat_map(|d| PlaceDesc::of_degree(ring, d)).collect();
        let mut out = Vec::new();
        fn go(places: &[PlaceDesc], budget: usize, cur: &mut DivisorDesc, out: &mut Vec<DivisorDesc>) {
            let Some((v, rest)) = places.split_first() else {
                out.push(cur.clone());
                return;
            };
            let d = v.degree();
            for m in 0..=budget / d {
                cur.set(v.clone(), m as u32);
                go(rest, budget - m * d, cur, out);
            }
            cur.set(v.clone(), 0);
        }
        go(&places, n, &mut DivisorDesc::zero(), &mut out);
        out
    }
}

impl fmt::Display for DivisorDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`.
pub fn finite_place_count(q: u64, d: u64) -> BigUint {
    if d == 0 {
        return BigUint::zero();
    }
    let mut acc = BigInt::zero();
    for k in divisors(d) {
        acc += moebius(k) * BigInt::from(ubig_pow(q, d / k));
    }
    (acc / d).to_biguint().expect("necklace counts are nonnegative")
}

/// Number of places of `F_q(T)` of degree `d`, the infinite place included.
pub fn place_count(q: u64, d: u64) -> BigUint {
    finite_place_count(q, d) + u32::from(d == 1)
}

/// `1/((1 − t)(1 − qt))` to order `t^n`.
pub fn zeta_series(q: u64, n: usize) -> SeriesT {
    let mut acc = BigUint::zero();
    let coeffs = (0..=n)
        .map(|k| {
            acc += ubig_pow(q, k as u64);
            BigInt::from(acc.clone())
        })
        .collect();
    SeriesT::from_coeffs(coeffs, n)
}

/// `∏_{d ≤ n} (1 − t^d)^{−π(d)}` to order `t^n`.
pub fn euler_product_zeta(q: u64, n: usize) -> SeriesT {
    let mut acc = SeriesT::one(n);
    for d in 1..=n {
        let geo = SeriesT::from_coeffs(
            (0..=n).map(|k| BigInt::from(u8::from(k % d == 0))).collect(),
            n,
        );
        let k = BigInt::from(place_count(q, d as u64));
        acc = &acc * &geo.pow_big(&k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn place_counts() {
        assert_eq!(place_count(2, 1), BigUint::from(3u8));
        assert_eq!(place_count(2, 2), BigUint::from(1u8));
        assert_eq!(place_count(2, 4), BigUint::from(3u8));
        let r = PolyRing::new(3).unwrap();
        for d in 1..=4 {
            assert_eq!(
                BigUint::from(PlaceDesc::of_degree(&r, d).len()),
                place_count(3, d as u64)
            );
        }
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_series(2, 2).coeffs(), &ints(&[1, 3, 7])[..]);
        assert_eq!(zeta_series(3, 1).coeffs(), &ints(&[1, 4])[..]);
        assert_eq!(zeta_series(5, 0).coeffs(), &ints(&[1])[..]);
        for q in [2, 3, 4] {
            assert_eq!(euler_product_zeta(q, 30), zeta_series(q, 30));
        }
    }

    #[test]
    fn factorization_identity() {
        for q in [2u64, 3] {
            for n in 1..=12u64 {
                let s: BigUint = divisors(n).into_iter().map(|d| finite_place_count(q, d) * d).sum();
                assert_eq!(s, ubig_pow(q, n));
            }
        }
    }

    #[test]
    fn divisors_are_enumerated_by_degree() {
        let r = PolyRing::new(2).unwrap();
        let all = DivisorDesc::up_to_degree(&r, 4);
        // Effective divisors of degree exactly k number the zeta coefficient.
        for k in 0..=4 {
            let c = all.iter().filter(|d| d.degree() == k).count();
            assert_eq!(BigInt::from(c), zeta_series(2, 4).coeff(k).clone());
        }
        let t2 = DivisorDesc::single(PlaceDesc::Finite(Poly::t()), 2);
        assert!(t2.is_squareful());
        assert_eq!(t2.to_string(), "(T)^2");
    }
}
