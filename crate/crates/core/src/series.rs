//! Truncated power series with exact coefficients.
//!
//! [`SeriesT`] is a series in `t = q^{-s}` with big-integer coefficients.
//! [`SeriesUQ`] is a series in a local variable `u = N(𝔭)^{-s}` whose
//! coefficients are integer polynomials in a formal residue norm `q̂`
//! ([`QPoly`]). Both keep coefficients `0..=trunc`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

/// Integer polynomial in the formal symbol `q̂`, dense and trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct QPoly(Vec<BigInt>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c · q̂^a`.
    pub fn monomial(a: usize, c: BigInt) -> Self {
        let mut v = vec![BigInt::zero(); a + 1];
        v[a] = c;
        QPoly(v).trimmed()
    }

    pub fn from_coeffs(v: Vec<BigInt>) -> Self {
        QPoly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Multiplies by `q̂^a`.
    pub fn shift(&self, a: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); a];
        v.extend(self.0.iter().cloned());
        QPoly(v)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    fn add_assign_ref(&mut self, rhs: &QPoly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        let t = std::mem::take(self).trimmed();
        *self = t;
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &QPoly) -> QPoly {
        let neg = QPoly(rhs.0.iter().map(|c| -c).collect());
        self + &neg
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                v[i + j] += a * b;
            }
        }
        QPoly(v).trimmed()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &BigInt)> = self.terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (a, c)) in terms.iter().rev().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            match (a, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{a}")?,
                (_, false) => write!(f, "{mag}*q^{a}")?,
            }
        }
        Ok(())
    }
}

/// Truncated series in `u` with [`QPoly`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesUQ {
    coeffs: Vec<QPoly>,
}

impl SeriesUQ {
    pub fn zero(trunc: usize) -> Self {
        SeriesUQ {
            coeffs: vec![QPoly::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = QPoly::one();
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<QPoly>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, QPoly::zero());
        SeriesUQ { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &QPoly {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Adds `c · q̂^a · u^l` in place (dropped beyond the truncation).
    pub fn add_monomial(&mut self, l: usize, a: usize, c: BigInt) {
        if l <= self.trunc() {
            self.coeffs[l].add_assign_ref(&QPoly::monomial(a, c));
        }
    }

    /// Multiplies by `(1 − q̂^a u^l)`.
    pub fn mul_one_minus(&self, a: usize, l: usize) -> Self {
        let mut out = self.clone();
        for m in (l..=self.trunc()).rev() {
            let t = self.coeffs[m - l].shift(a);
            out.coeffs[m] = &out.coeffs[m] - &t;
        }
        out
    }

    /// Divides by `(1 − q̂^a u^l)`, i.e. multiplies by `Σ_k q̂^{ka} u^{kl}`.
    pub fn div_one_minus(&self, a: usize, l: usize) -> Self {
        assert!(l >= 1, "geometric factor needs a positive u-degree");
        let mut out = self.clone();
        for m in l..=self.trunc() {
            let t = out.coeffs[m - l].shift(a);
            out.coeffs[m] = &out.coeffs[m] + &t;
        }
        out
    }

    /// Replaces `q̂ → q^d` and `u → t^d`, truncated at `t^n`.
    pub fn specialize(&self, q: u64, d: usize, n: usize) -> SeriesT {
        let qd: BigInt = Pow::pow(BigInt::from(q), d);
        let mut out = SeriesT::zero(n);
        for (m, c) in self.coeffs.iter().enumerate() {
            if m * d <= n {
                out.coeffs[m * d] = c.eval(&qd);
            }
        }
        out
    }
}

impl Mul for &SeriesUQ {
    type Output = SeriesUQ;
    fn mul(self, rhs: &SeriesUQ) -> SeriesUQ {
        let n = self.trunc().min(rhs.trunc());
        let mut out = SeriesUQ::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !rhs.coeffs[j].is_zero() {
                    let t = &self.coeffs[i] * &rhs.coeffs[j];
                    out.coeffs[i + j].add_assign_ref(&t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SeriesUQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})*u^{m}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.trunc() + 1)
    }
}

/// Truncated series in `t` with big-integer coefficients `c_0..=c_trunc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesT {
    coeffs: Vec<BigInt>,
}

impl SeriesT {
    pub fn zero(trunc: usize) -> Self {
        SeriesT {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, BigInt::zero());
        SeriesT { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Running sums `Σ_{k≤n} c_k`.
    pub fn partial_sums(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .scan(BigInt::zero(), |acc, c| {
                *acc += c;
                Some(acc.clone())
            })
            .collect()
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=n.min(self.trunc())].to_vec(), n)
    }

    /// `f^k` for `f(0) = 1` and an arbitrary nonnegative integer `k`.
    ///
    /// Uses the recurrence `n g_n = Σ_{j=1}^{n} ((k+1)j − n) f_j g_{n−j}`,
    /// whose right-hand side is always divisible by `n`.
    pub fn pow_big(&self, k: &BigInt) -> Self {
        assert!(self.coeffs[0].is_one(), "power recurrence needs f(0) = 1");
        let n = self.trunc();
        let mut g = vec![BigInt::zero(); n + 1];
        g[0] = BigInt::one();
        let k1 = k + 1u32;
        let support: Vec<usize> = (1..=n).filter(|&j| !self.coeffs[j].is_zero()).collect();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for &j in support.iter().take_while(|&&j| j <= m) {
                if g[m - j].is_zero() {
                    continue;
                }
                let w = &k1 * j - m;
                acc += w * &self.coeffs[j] * &g[m - j];
            }
            let (quo, rem) = acc.div_rem(&BigInt::from(m));
            debug_assert!(rem.is_zero());
            g[m] = quo;
        }
        SeriesT { coeffs: g }
    }

    /// Substitutes `t → t^d`, keeping the truncation `n`.
    pub fn stretch(&self, d: usize, n: usize) -> Self {
        let mut out = Self::zero(n);
        for (m, c) in self.coeffs.iter().enumerate() {
            if m * d <= n {
                out.coeffs[m * d] = c.clone();
            }
        }
        out
    }
}

impl Mul for &SeriesT {
    type Output = SeriesT;
    fn mul(self, rhs: &SeriesT) -> SeriesT {
        let n = self.trunc().min(rhs.trunc());
        let mut out = SeriesT::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
                }
            }
        }
        out
    }
}

impl Add for &SeriesT {
    type Output = SeriesT;
    fn add(self, rhs: &SeriesT) -> SeriesT {
        let n = self.trunc().min(rhs.trunc());
        SeriesT {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn qpoly_ops() {
        let a = QPoly::from_coeffs(ints(&[-1, 1]));
        assert_eq!(a.to_string(), "q - 1");
        let sq = &a * &a;
        assert_eq!(sq.to_string(), "q^2 - 2*q + 1");
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.eval(&BigInt::from(3)), BigInt::from(4));
    }

    #[test]
    fn geometric_factors_invert() {
        let one = SeriesUQ::one(12);
        let s = one.div_one_minus(2, 3).mul_one_minus(2, 3);
        assert_eq!(s, one);
        let g = one.div_one_minus(1, 2);
        assert_eq!(g.coeff(4), &QPoly::monomial(2, 1.into()));
        assert!(g.coeff(3).is_zero());
    }

    #[test]
    fn big_powers_match_repeated_products() {
        let f = SeriesT::from_coeffs(ints(&[1, 2, 0, -1, 3]), 9);
        let mut acc = SeriesT::one(9);
        for k in 0..7u32 {
            assert_eq!(f.pow_big(&BigInt::from(k)), acc);
            acc = &acc * &f;
        }
    }

    #[test]
    fn partial_sums_and_stretch() {
        let f = SeriesT::from_coeffs(ints(&[1, 0, 6, 0, 24]), 4);
        assert_eq!(f.partial_sums(), ints(&[1, 1, 7, 7, 31]));
        let g = SeriesT::from_coeffs(ints(&[1, 5]), 1).stretch(3, 6);
        assert_eq!(g.coeffs(), &ints(&[1, 0, 0, 5, 0, 0, 0])[..]);
    }
}
