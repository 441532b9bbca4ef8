//! The global conductor series of `F_q(T)` as a sum of Euler products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

use super::local::b_local;
use crate::delsarte::module_polynomial_with;
use crate::error::{Error, Result};
use crate::explicit::Limits;
use crate::field_model::{place_count, FieldSpec};
use crate::pgroup::{GroupDesc, Signature};
use crate::series::SeriesT;

/// Resource guard for global series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineLimits {
    pub max_trunc: usize,
    pub max_q: u64,
    pub groups: Limits,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            max_trunc: 64,
            max_q: 9,
            groups: Limits::default(),
        }
    }
}

impl EngineLimits {
    fn check(&self, q: u64, g: &GroupDesc, n: usize) -> Result<()> {
        FieldSpec::with_char(q, g.p())?;
        if q > self.max_q {
            return Err(Error::ResourceLimit(format!("q = {q} exceeds {}", self.max_q)));
        }
        if n > self.max_trunc {
            return Err(Error::TruncationTooLarge { max: self.max_trunc, got: n });
        }
        if g.is_trivial() {
            return Err(Error::TrivialGroup);
        }
        Ok(())
    }
}

/// `Φ_H = ∏_𝔭 Σ_m b_H(𝔭^m) N(𝔭)^{−ms}` in `t = q^{−s}`, to order `t^n`.
///
/// Places of equal degree contribute equal factors, so each degree is one
/// power of a specialized local series.
pub fn signature_series(q: u64, p: u64, sig: &Signature, n: usize) -> SeriesT {
    let mut acc = SeriesT::one(n);
    for d in 1..=n {
        let m_max = n / d;
        let qd: BigInt = Pow::pow(BigInt::from(q), d);
        let local: Vec<BigInt> = (0..=m_max as u64)
            .map(|m| b_local(sig, p, m).eval(&qd))
            .collect();
        if local[1..].iter().all(Zero::is_zero) {
            continue;
        }
        let count = BigInt::from(place_count(q, d as u64));
        let power = SeriesT::from_coeffs(local, m_max).pow_big(&count);
        acc = &acc * &power.stretch(d, n);
    }
    acc
}

/// Weights `w_H` by signature, so that `Φ(F, G; s) = Σ_H w_H Φ_H(s)`.
pub fn signature_weights(g: &GroupDesc, limits: &Limits) -> Result<Vec<(Signature, BigRational)>> {
    module_polynomial_with(g, limits)?
        .terms()
        .map(|(exps, c)| Ok((Signature::new(exps.to_vec())?, c.clone())))
        .collect()
}

/// One term `w_H Φ_H` of the global series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTerm {
    pub signature: Signature,
    pub weight: BigRational,
    pub series: SeriesT,
}

pub fn global_terms(q: u64, g: &GroupDesc, n: usize, limits: &EngineLimits) -> Result<Vec<SeriesTerm>> {
    limits.check(q, g, n)?;
    signature_weights(g, &limits.groups)?
        .into_iter()
        .map(|(signature, weight)| {
            let series = signature_series(q, g.p(), &signature, n);
            Ok(SeriesTerm { signature, weight, series })
        })
        .collect()
}

/// `Σ_n c_n t^n` where `c_n` counts G-extensions of `F_q(T)` inside a fixed
/// separable closure whose conductor has degree `n`.
pub fn global_series(q: u64, g: &GroupDesc, n: usize) -> Result<SeriesT> {
    global_series_with(q, g, n, &EngineLimits::default())
}

pub fn global_series_with(q: u64, g: &GroupDesc, n: usize, limits: &EngineLimits) -> Result<SeriesT> {
    let terms = global_terms(q, g, n, limits)?;
    let mut sum = vec![BigRational::zero(); n + 1];
    for t in &terms {
        for (acc, c) in sum.iter_mut().zip(t.series.coeffs()) {
            *acc += &t.weight * BigRational::from_integer(c.clone());
        }
    }
    let coeffs: Vec<BigInt> = sum
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            assert!(c.is_integer(), "c_{k} = {c} is not an integer");
            assert!(!c.is_negative(), "c_{k} = {c} is negative");
            c.to_integer()
        })
        .collect();
    assert_eq!(coeffs[0], BigInt::from(u8::from(g.is_cyclic())), "c_0 = [G cyclic]");
    if n >= 1 {
        assert!(coeffs[1].is_zero(), "no conductor of degree 1 is squareful");
    }
    Ok(SeriesT::from_coeffs(coeffs, n))
}

/// `C(F, G; q^n) = Σ_{k ≤ n} c_k`.
pub fn count_function(q: u64, g: &GroupDesc, n: usize) -> Result<BigInt> {
    Ok(global_series(q, g, n)?.partial_sums().pop().expect("nonempty series"))
}

/// Partial sum read from an already computed series.
pub fn count_from_series(series: &SeriesT, n: usize) -> Result<BigInt> {
    if n > series.trunc() {
        return Err(Error::TruncationTooSmall { need: n, got: series.trunc() });
    }
    Ok(series.coeffs()[..=n].iter().sum())
}
