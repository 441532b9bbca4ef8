//! Conductor-discriminant bounds and discriminant-count exponents, in degree
//! (log-norm) space.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::big_pow;
use crate::error::{Error, Result};
use crate::euler_engine::global_series;
use crate::pgroup::GroupDesc;
use crate::series::SeriesT;

/// `Σ_{i<e} ⌈f/p^i⌉ (|p^iG| − |p^{i+1}G|)`, bounding the discriminant
/// exponent at a place of conductor exponent `f`.
pub fn disc_exponent_bound(g: &GroupDesc, f_exp: u64) -> Result<BigInt> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let f = BigInt::from(f_exp);
    Ok((0..g.exponent())
        .map(|i| {
            let ceil = f.div_ceil(&big_pow(g.p(), i as u64));
            ceil * (g.multiple_order(i) - g.multiple_order(i + 1))
        })
        .sum())
}

/// `⌊m̃_G deg 𝔣 + (|pG| − 1) deg 𝔣̃⌋` for a conductor given as `(deg 𝔭, exponent)` pairs,
/// `𝔣̃` its squarefree part.
pub fn disc_norm_bound_deg(g: &GroupDesc, conductor: &[(u64, u32)]) -> Result<BigInt> {
    if conductor.iter().any(|&(_, e)| e < 2) {
        return Err(Error::NonSquarefulConductor);
    }
    let deg_f: u64 = conductor.iter().map(|&(d, e)| d * e as u64).sum();
    let deg_rad: u64 = conductor.iter().map(|&(d, _)| d).sum();
    let bound = g.m_tilde()? * BigRational::from_integer(deg_f.into())
        + BigRational::from_integer((g.multiple_order(1) - 1) * deg_rad);
    Ok(bound.floor().to_integer())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSummary {
    /// `a_p(G)(1 − δ)`.
    pub lower: BigRational,
    /// `a_p(G)`.
    pub conjecture: BigRational,
    /// `d_p(G)`.
    pub upper: BigRational,
}

pub fn exponent_summary(g: &GroupDesc) -> Result<ExponentSummary> {
    let inv = g.invariants()?;
    let lower = &inv.a_p * (BigRational::one() - &inv.delta);
    assert!(lower <= inv.a_p && inv.a_p <= inv.d_p, "exponent ordering for {g}");
    Ok(ExponentSummary {
        lower,
        conjecture: inv.a_p,
        upper: inv.d_p,
    })
}

/// Discriminant-degree series for `Z/p`: every nontrivial character has the
/// full conductor, so `𝔡 = 𝔣^{p−1}` and `t^n` carries `c_{n/(p−1)}`.
pub fn z_series_cyclic_p(q: u64, p: u64, n: usize) -> Result<SeriesT> {
    let g = GroupDesc::cyclic(p, 1)?;
    let step = p as usize - 1;
    let conductors = global_series(q, &g, n / step)?;
    Ok(conductors.stretch(step, n))
}
