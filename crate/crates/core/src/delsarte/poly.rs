use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Multivariate polynomial in `X_1, X_2, …` with exact rational coefficients.
///
/// Monomials are exponent vectors with trailing zeros trimmed, so the key of
/// `X^{r(H)}` is exactly the signature of `H`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignaturePoly {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl SignaturePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(&[], BigRational::one())
    }

    pub fn monomial(exps: &[u32], coeff: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff);
        p
    }

    /// `X_i − c` (1-based variable index).
    pub fn linear(i: usize, c: BigInt) -> Self {
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        let mut p = Self::monomial(&exps, BigRational::one());
        p.add_term(&[], BigRational::from_integer(-c));
        p
    }

    pub fn add_term(&mut self, exps: &[u32], coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let key = trim(exps.to_vec());
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    /// Substitutes `X_i → c_i X_i`; variables beyond `c` are left unchanged.
    pub fn rescale_vars(&self, c: &[BigInt]) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            let f: BigInt = k
                .iter()
                .zip(c)
                .map(|(&e, ci)| Pow::pow(ci.clone(), e))
                .product();
            out.add_term(k, v * BigRational::from_integer(f));
        }
        out
    }

    /// Evaluates at `x`; missing trailing variables are taken as 1.
    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(k, v)| {
                let m: BigRational = k
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| match x.get(i) {
                        Some(xi) => Pow::pow(xi.clone(), e),
                        None => BigRational::one(),
                    })
                    .product();
                v * m
            })
            .sum()
    }

    pub fn eval_int(&self, x: &[BigInt]) -> BigRational {
        let xr: Vec<BigRational> = x.iter().cloned().map(BigRational::from_integer).collect();
        self.eval(&xr)
    }
}

impl Add for &SignaturePoly {
    type Output = SignaturePoly;
    fn add(self, rhs: &SignaturePoly) -> SignaturePoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl Sub for &SignaturePoly {
    type Output = SignaturePoly;
    fn sub(self, rhs: &SignaturePoly) -> SignaturePoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k, -v.clone());
        }
        out
    }
}

impl Mul for &SignaturePoly {
    type Output = SignaturePoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SignaturePoly) -> SignaturePoly {
        let mut out = SignaturePoly::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                let n = ka.len().max(kb.len());
                let exps: Vec<u32> = (0..n)
                    .map(|i| ka.get(i).unwrap_or(&0) + kb.get(i).unwrap_or(&0))
                    .collect();
                out.add_term(&exps, va * vb);
            }
        }
        out
    }
}

impl fmt::Display for SignaturePoly {
    /// Highest monomials first, e.g. `2*X1^2 - 3*X1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, v)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => format!("X{}", i + 1),
                    _ => format!("X{}^{}", i + 1, e),
                })
                .collect();
            let mag = v.abs();
            let sign = if v.is_negative() { "-" } else { "+" };
            if n == 0 {
                if v.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn arithmetic_and_display() {
        let a = SignaturePoly::linear(1, 1.into());
        let b = SignaturePoly::linear(1, 2.into());
        let ab = &a * &b;
        assert_eq!(ab.to_string(), "X1^2 - 3*X1 + 2");
        assert!((&ab - &ab).is_zero());
        assert_eq!(ab.eval_int(&[3.into()]), rat(2, 1));
        let scaled = ab.rescale_vars(&[2.into()]).scale(&rat(1, 3));
        assert_eq!(scaled.to_string(), "4/3*X1^2 - 2*X1 + 2/3");
    }

    #[test]
    fn missing_variables_evaluate_to_one() {
        let p = &SignaturePoly::linear(2, 1.into()) * &SignaturePoly::linear(1, 0.into());
        assert_eq!(p.eval_int(&[5.into()]), rat(0, 1));
        assert_eq!(p.coeff(&[1, 1, 0]), rat(1, 1));
    }
}
