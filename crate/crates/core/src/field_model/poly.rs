//! Univariate polynomials over a table field, and residue rings `F_q[T]/(M)`.

use std::fmt;

use super::gf::Gf;
use crate::error::{Error, Result};

/// Dense polynomial, constant term first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly(Vec<u32>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: u32) -> Self {
        Poly(vec![c]).trimmed()
    }

    /// `T`.
    pub fn t() -> Self {
        Poly(vec![0, 1])
    }

    /// `c · T^k`.
    pub fn monomial(k: usize, c: u32) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly(v).trimmed()
    }

    pub fn from_coeffs(v: Vec<u32>) -> Self {
        Poly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `deg 0 = None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    /// Base-`q` integer encoding of the coefficient vector.
    pub fn index(&self, q: u64) -> u64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c as u64)
    }

    /// Inverse of [`Poly::index`].
    pub fn from_index(mut n: u64, q: u64) -> Self {
        let mut v = Vec::new();
        while n > 0 {
            v.push((n % q) as u32);
            n /= q;
        }
        Poly(v)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let lead = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{lead}T")?,
                _ => write!(f, "{lead}T^{k}")?,
            }
        }
        Ok(())
    }
}

/// Arithmetic in `F_q[T]`.
#[derive(Debug, Clone)]
pub struct PolyRing {
    field: Gf,
}

impl PolyRing {
    pub fn new(q: u64) -> Result<Self> {
        Ok(PolyRing { field: Gf::new(q)? })
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn check(&self, a: &Poly) -> Result<()> {
        match a.0.iter().find(|&&c| c as u64 >= self.q()) {
            Some(c) => Err(Error::OutOfRange(format!("coefficient {c} is not in F_{}", self.q()))),
            None => Ok(()),
        }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        Poly((0..n).map(|k| self.field.add(a.coeff(k), b.coeff(k))).collect()).trimmed()
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        Poly((0..n).map(|k| self.field.sub(a.coeff(k), b.coeff(k))).collect()).trimmed()
    }

    pub fn scale(&self, c: u32, a: &Poly) -> Poly {
        Poly(a.0.iter().map(|&x| self.field.mul(c, x)).collect()).trimmed()
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0u32; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                v[i + j] = self.field.add(v[i + j], self.field.mul(x, y));
            }
        }
        Poly(v).trimmed()
    }

    pub fn pow(&self, a: &Poly, k: u32) -> Poly {
        (0..k).fold(Poly::constant(1), |acc, _| self.mul(&acc, a))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divmod(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = b.degree().expect("division by the zero polynomial");
        let inv = self.field.inv(b.lead());
        let mut r = a.0.clone();
        let mut quo = vec![0u32; a.0.len().saturating_sub(db)];
        while r.len() > db {
            let k = r.len() - 1;
            let c = self.field.mul(r[k], inv);
            if c != 0 {
                quo[k - db] = c;
                for (i, &bi) in b.0.iter().enumerate() {
                    r[k - db + i] = self.field.sub(r[k - db + i], self.field.mul(c, bi));
                }
            }
            r.pop();
        }
        (Poly(quo).trimmed(), Poly(r).trimmed())
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Poly {
        self.divmod(a, b).1
    }

    pub fn make_monic(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        self.scale(self.field.inv(a.lead()), a)
    }

    /// Monic greatest common divisor (zero only for `gcd(0, 0)`).
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.make_monic(&x)
    }

    /// All monic polynomials of degree `d`, in index order.
    pub fn monics(&self, d: usize) -> impl Iterator<Item = Poly> + '_ {
        let q = self.q();
        let count = q.pow(d as u32);
        (0..count).map(move |n| {
            let mut v = Poly::from_index(n, q).0;
            v.resize(d, 0);
            v.push(1);
            Poly(v)
        })
    }

    /// Irreducibility by trial division by monic polynomials up to half the degree.
    pub fn is_irreducible(&self, a: &Poly) -> bool {
        let Some(d) = a.degree() else { return false };
        if d == 0 {
            return false;
        }
        (1..=d / 2).all(|k| self.monics(k).all(|m| !self.rem(a, &m).is_zero()))
    }

    pub fn monic_irreducibles(&self, d: usize) -> Vec<Poly> {
        self.monics(d).filter(|m| self.is_irreducible(m)).collect()
    }
}

/// The residue ring `F_q[T]/(M)` for a monic `M` of positive degree.
#[derive(Debug, Clone)]
pub struct ResidueRing {
    ring: PolyRing,
    modulus: Poly,
    size: u64,
}

impl ResidueRing {
    pub const MAX_SIZE: u64 = 1 << 16;

    pub fn new(ring: PolyRing, modulus: Poly) -> Result<Self> {
        ring.check(&modulus)?;
        let d = modulus
            .degree()
            .filter(|&d| d > 0 && modulus.is_monic())
            .ok_or_else(|| Error::OutOfRange(format!("modulus {modulus} is not monic of positive degree")))?;
        let size = ring
            .q()
            .checked_pow(d as u32)
            .filter(|&s| s <= Self::MAX_SIZE)
            .ok_or_else(|| {
                Error::ResourceLimit(format!("residue ring of size q^{d} exceeds {}", Self::MAX_SIZE))
            })?;
        Ok(ResidueRing { ring, modulus, size })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        self.ring.rem(a, &self.modulus)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&self.ring.mul(a, b))
    }

    pub fn pow(&self, a: &Poly, mut k: u64) -> Poly {
        let (mut base, mut acc) = (self.reduce(a), Poly::constant(1));
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = Poly> + '_ {
        let q = self.ring.q();
        (0..self.size).map(move |n| Poly::from_index(n, q))
    }

    pub fn is_unit(&self, a: &Poly) -> bool {
        !a.is_zero() && self.ring.gcd(a, &self.modulus).degree() == Some(0)
    }

    pub fn units(&self) -> Vec<Poly> {
        self.elements().filter(|a| self.is_unit(a)).collect()
    }
}
