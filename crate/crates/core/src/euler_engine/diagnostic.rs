//! Normalized growth of the counting function along residue classes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use super::global::global_series;
use crate::error::{Error, Result};
use crate::pgroup::GroupDesc;
use crate::series::SeriesT;

/// Minimum number of nonzero coefficients `c_n`, `n ≥ 1`, required.
pub const MIN_NONZERO: usize = 8;

/// `ρ_n = C(q^n) q^{−nα} n^{−(β−1)}` at one `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoPoint {
    pub n: usize,
    pub count: BigInt,
    pub rho: f64,
    /// Present when `nα` is an integer.
    pub exact: Option<BigRational>,
}

/// Mean of `ρ_n` over the class members in `[start, end)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    pub start: usize,
    pub end: usize,
    pub mean: f64,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidueClassReport {
    pub residue: usize,
    pub points: Vec<RhoPoint>,
    pub windows: Vec<Window>,
    /// `|m_last − m_prev| / |m_prev|` over the last two dyadic windows.
    pub relative_change: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticReport {
    pub q: u64,
    pub group: GroupDesc,
    pub trunc: usize,
    pub alpha: BigRational,
    pub beta: BigInt,
    /// `gcd` of the degrees `n ≥ 1` with `c_n ≠ 0`.
    pub period: usize,
    pub classes: Vec<ResidueClassReport>,
    /// `C(q^n) / q^n` for `n = 0..=N`.
    pub growth: Vec<f64>,
    /// Dyadic window means of `growth` over `n ≥ 1`.
    pub growth_windows: Vec<Window>,
    /// `log_2` of the ratio of the last two complete growth window means; a
    /// counting function of shape `q^n n^k` drives this towards `k`.
    pub growth_exponent: Option<f64>,
}

impl DiagnosticReport {
    pub fn class(&self, residue: usize) -> Option<&ResidueClassReport> {
        self.classes.iter().find(|c| c.residue == residue)
    }
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "logarithm of a nonpositive integer");
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    sign * (ln_big(&r.numer().abs()) - ln_big(r.denom())).exp()
}

pub fn asymptotic_diagnostic(q: u64, g: &GroupDesc, trunc: usize) -> Result<DiagnosticReport> {
    let series = global_series(q, g, trunc)?;
    diagnose_series(q, g, &series)
}

/// Report for a precomputed conductor series of `(q, G)`.
pub fn diagnose_series(q: u64, g: &GroupDesc, series: &SeriesT) -> Result<DiagnosticReport> {
    let inv = g.invariants()?;
    let (alpha, beta) = (inv.alpha, inv.beta);
    let trunc = series.trunc();
    let support: Vec<usize> = (1..=trunc).filter(|&n| !series.coeff(n).is_zero()).collect();
    if support.len() < MIN_NONZERO {
        return Err(Error::InsufficientData(format!(
            "{} nonzero coefficients up to degree {trunc}, need {MIN_NONZERO}",
            support.len()
        )));
    }
    let period = support.iter().fold(0usize, |acc, &n| acc.gcd(&n));
    let counts = series.partial_sums();
    let beta_m1 = (&beta - 1u32).to_u32().expect("small pole order");
    let alpha_f = rational_to_f64(&alpha);
    let ln_q = (q as f64).ln();

    let point = |n: usize| {
        let count = counts[n].clone();
        let rho = if count.is_zero() {
            0.0
        } else {
            (ln_big(&count) - n as f64 * alpha_f * ln_q - beta_m1 as f64 * (n as f64).ln()).exp()
        };
        let na = &alpha * BigRational::from_integer(n.into());
        let exact = na.is_integer().then(|| {
            let e = na.to_integer().to_u64().expect("small exponent");
            let den: BigInt = Pow::pow(BigInt::from(q), e) * Pow::pow(BigInt::from(n), beta_m1);
            BigRational::new(count.clone(), den)
        });
        RhoPoint { n, count, rho, exact }
    };

    let classes = (0..period)
        .map(|residue| {
            let points: Vec<RhoPoint> = (1..=trunc).filter(|n| n % period == residue).map(point).collect();
            let samples: Vec<(usize, f64)> = points.iter().map(|p| (p.n, p.rho)).collect();
            let windows = dyadic_windows(&samples, trunc);
            let relative_change = match windows.as_slice() {
                [.., prev, last] if prev.mean != 0.0 => Some((last.mean - prev.mean).abs() / prev.mean.abs()),
                _ => None,
            };
            ResidueClassReport { residue, points, windows, relative_change }
        })
        .collect();

    let growth: Vec<f64> = counts
        .iter()
        .enumerate()
        .map(|(n, c)| if c.is_zero() { 0.0 } else { (ln_big(c) - n as f64 * ln_q).exp() })
        .collect();
    let growth_windows = dyadic_windows(
        &growth.iter().enumerate().skip(1).map(|(n, &g)| (n, g)).collect::<Vec<_>>(),
        trunc,
    );
    let complete: Vec<&Window> = growth_windows.iter().filter(|w| w.end <= trunc + 1).collect();
    let growth_exponent = match complete.as_slice() {
        [.., prev, last] if prev.mean > 0.0 => Some((last.mean / prev.mean).log2()),
        _ => None,
    };

    Ok(DiagnosticReport {
        q,
        group: g.clone(),
        trunc,
        alpha,
        beta,
        period,
        classes,
        growth,
        growth_windows,
        growth_exponent,
    })
}

/// Means of `(n, value)` samples over `[2^k, 2^{k+1})`, empty windows skipped.
fn dyadic_windows(samples: &[(usize, f64)], trunc: usize) -> Vec<Window> {
    let mut out = Vec::new();
    let mut start = 1usize;
    while start <= trunc {
        let end = 2 * start;
        let members: Vec<f64> = samples
            .iter()
            .filter(|(n, _)| (start..end).contains(n))
            .map(|&(_, v)| v)
            .collect();
        if !members.is_empty() {
            out.push(Window {
                start,
                end,
                mean: members.iter().sum::<f64>() / members.len() as f64,
                len: members.len(),
            });
        }
        start = end;
    }
    out
}
