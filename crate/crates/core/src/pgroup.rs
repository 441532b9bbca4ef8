//! Finite abelian p-groups given by their cyclic type, and the scalar
//! invariants governing the conductor and discriminant counts.
//!
//! A group is `∏_j Z/p^{e_j}` with `e_1 ≥ e_2 ≥ … ≥ e_r ≥ 1`. Its signature
//! `r_i = log_p [p^{i-1}G : p^iG]` is the conjugate partition of the type.
//! Everything here is exact: invariants are `BigRational`, never floats.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{big_pow, is_prime, rat_int};
use crate::error::{Error, Result};

/// Finite abelian p-group `∏ Z/p^{e_j}` with exponents sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDesc {
    p: u64,
    exps: Vec<u32>,
}

/// The p-signature `(r_1, …, r_e)`, weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Signature(Vec<u32>);

impl Signature {
    /// Validates a rank sequence.
    pub fn new(ranks: Vec<u32>) -> Result<Self> {
        if ranks.contains(&0) {
            return Err(Error::NonPositiveExponent);
        }
        if ranks.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange("signature must be weakly decreasing".into()));
        }
        Ok(Signature(ranks))
    }

    /// Builds a signature from an exponent vector whose trailing entries may be zero.
    pub fn from_exponents(v: &[u32]) -> Result<Self> {
        let n = v.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1);
        Self::new(v[..n].to_vec())
    }

    pub fn ranks(&self) -> &[u32] {
        &self.0
    }

    /// Exponent `e` of the group (number of nonzero ranks).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `r_i` with 1-based index; zero beyond the exponent.
    pub fn r(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Cyclic type, i.e. the conjugate partition.
    pub fn cyclic_type(&self) -> Vec<u32> {
        let r1 = self.r(1);
        (1..=r1)
            .map(|j| self.0.iter().filter(|&&r| r >= j).count() as u32)
            .collect()
    }

    /// `Σ_i r_i w_i(l)`: the exponent of the residue norm in `u_G(𝔭^l)`.
    pub fn weighted_index(&self, p: u64, l: u64) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &r)| r as u64 * weight(p, k as u32 + 1, l))
            .sum()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl GroupDesc {
    /// Canonicalizes `type_` (sorted descending). The empty type is the trivial group.
    pub fn new(p: u64, type_: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if type_.contains(&0) {
            return Err(Error::NonPositiveExponent);
        }
        let mut exps = type_.to_vec();
        exps.sort_unstable_by(|a, b| b.cmp(a));
        Ok(GroupDesc { p, exps })
    }

    pub fn cyclic(p: u64, e: u32) -> Result<Self> {
        Self::new(p, &[e])
    }

    pub fn elementary(p: u64, rank: u32) -> Result<Self> {
        Self::new(p, &vec![1; rank as usize])
    }

    pub fn trivial(p: u64) -> Result<Self> {
        Self::new(p, &[])
    }

    pub fn from_signature(p: u64, sig: &Signature) -> Result<Self> {
        Self::new(p, &sig.cyclic_type())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn cyclic_type(&self) -> &[u32] {
        &self.exps
    }

    /// `e` with `p^e` the exponent of the group; 0 for the trivial group.
    pub fn exponent(&self) -> u32 {
        self.exps.first().copied().unwrap_or(0)
    }

    /// `log_p |G|`.
    pub fn order_log(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn order(&self) -> BigInt {
        big_pow(self.p, self.order_log() as u64)
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.is_empty()
    }

    /// Cyclic includes the trivial group.
    pub fn is_cyclic(&self) -> bool {
        self.exps.len() <= 1
    }

    /// `(Z/p)^r` for some `r ≥ 0`.
    pub fn is_elementary(&self) -> bool {
        self.exps.iter().all(|&e| e == 1)
    }

    /// The subgroup `p^iG` of `p^i`-th multiples.
    pub fn p_multiple(&self, i: u32) -> GroupDesc {
        GroupDesc {
            p: self.p,
            exps: self.exps.iter().filter(|&&e| e > i).map(|&e| e - i).collect(),
        }
    }

    /// `|p^iG|`.
    pub fn multiple_order(&self, i: u32) -> BigInt {
        self.p_multiple(i).order()
    }

    pub fn signature(&self) -> Signature {
        let e = self.exponent();
        Signature(
            (1..=e)
                .map(|i| self.exps.iter().filter(|&&ej| ej >= i).count() as u32)
                .collect(),
        )
    }

    /// Minimal `0 ≤ f ≤ e` with `p^fG` cyclic.
    pub fn cyclic_index(&self) -> u32 {
        (0..=self.exponent())
            .find(|&f| self.p_multiple(f).is_cyclic())
            .unwrap_or(0)
    }

    /// `|G| − |pG|` style differences `|p^iG| − |p^{i+1}G|`.
    fn layer(&self, i: u32) -> BigInt {
        self.multiple_order(i) - self.multiple_order(i + 1)
    }

    fn nontrivial(&self) -> Result<()> {
        if self.is_trivial() {
            Err(Error::TrivialGroup)
        } else {
            Ok(())
        }
    }

    /// Convergence abscissa `α_p(G) = (1 + (p−1) Σ_i p^{e−i} r_i) / p^e`.
    pub fn alpha(&self) -> Result<BigRational> {
        self.nontrivial()?;
        Ok(self.alpha_unchecked())
    }

    fn alpha_unchecked(&self) -> BigRational {
        let e = self.exponent() as u64;
        let sig = self.signature();
        let s: BigInt = (1..=e)
            .map(|i| big_pow(self.p, e - i) * sig.r(i as usize))
            .sum();
        let num = BigInt::one() + BigInt::from(self.p - 1) * s;
        BigRational::new(num, big_pow(self.p, e))
    }

    /// `m̃_G = Σ_{i<e} p^{−i} (|p^iG| − |p^{i+1}G|)`.
    pub fn m_tilde(&self) -> Result<BigRational> {
        self.nontrivial()?;
        Ok((0..self.exponent())
            .map(|i| BigRational::new(self.layer(i), big_pow(self.p, i as u64)))
            .sum())
    }

    pub fn invariants(&self) -> Result<InvariantReport> {
        self.nontrivial()?;
        let p = self.p;
        let e = self.exponent();
        let f = self.cyclic_index();
        let alpha = self.alpha_unchecked();
        let beta = if self.is_cyclic() {
            big_pow(p, e as u64) - 1u32
        } else {
            big_pow(p, (e - f) as u64)
        };
        let m_tilde = self.m_tilde()?;
        let a_p = &alpha / &m_tilde;
        let order = rat_int(self.order());
        let d_p = &alpha / (order * BigRational::new((p - 1).into(), p.into()));
        let pg = rat_int(self.multiple_order(1) - 1u32);
        let delta = &pg / (&m_tilde + &pg);

        let sig = self.signature();
        let weighted: BigInt = (1..=e as u64)
            .map(|i| big_pow(p, e as u64 - i) * sig.r(i as usize))
            .sum();
        let layered: BigInt = (0..e)
            .map(|i| big_pow(p, (e - i) as u64) * self.layer(i))
            .sum();
        let local_disc_exp = BigRational::new(
            BigInt::from(p - 1) * weighted,
            BigInt::from(p) * layered,
        );

        Ok(InvariantReport {
            e,
            f,
            alpha,
            beta,
            m_tilde,
            a_p,
            d_p,
            delta,
            local_disc_exp,
        })
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&e| format!("Z/{}", big_pow(self.p, e as u64)))
            .collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// Scalar invariants of a nontrivial group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub e: u32,
    /// Minimal `f` with `p^fG` cyclic; 0 for cyclic groups.
    pub f: u32,
    pub alpha: BigRational,
    /// Pole order at the abscissa: `p^e − 1` if cyclic, else `p^{e−f}`.
    pub beta: BigInt,
    pub m_tilde: BigRational,
    pub a_p: BigRational,
    pub d_p: BigRational,
    pub delta: BigRational,
    pub local_disc_exp: BigRational,
}

/// `w_i(l) = ⌊(l−1)/p^{i−1}⌋ − ⌊(l−1)/p^i⌋`, and `w_i(0) = 0`.
pub fn weight(p: u64, i: u32, l: u64) -> u64 {
    assert!(i >= 1, "weight index starts at 1");
    if l == 0 {
        return 0;
    }
    let lo = p.checked_pow(i - 1);
    let hi = p.checked_pow(i);
    let div = |d: Option<u64>| d.map_or(0, |d| (l - 1) / d);
    div(lo) - div(hi)
}

fn alpha_minus(g: &GroupDesc, num: u64, den: u64) -> BigRational {
    g.alpha_unchecked() - BigRational::new((1 + num).into(), den.into())
}

/// `ε(l) = α_p(G) − (1 + Σ r_i w_i(l)) / l` for `2 ≤ l ≤ p^e`.
pub fn epsilon_single(g: &GroupDesc, l: u64) -> Result<BigRational> {
    g.nontrivial()?;
    let pe = g.p.pow(g.exponent());
    if !(2..=pe).contains(&l) {
        return Err(Error::OutOfRange(format!("l = {l} outside [2, {pe}]")));
    }
    Ok(alpha_minus(g, g.signature().weighted_index(g.p, l), l))
}

/// `ε(l_1, …, l_k)` for `k ≥ 2` and `1 ≤ l_j ≤ p^e − 1`.
pub fn epsilon_multi(g: &GroupDesc, ls: &[u64]) -> Result<BigRational> {
    g.nontrivial()?;
    let pe = g.p.pow(g.exponent());
    if ls.len() < 2 {
        return Err(Error::OutOfRange("need at least two arguments".into()));
    }
    if let Some(l) = ls.iter().find(|&&l| l == 0 || l >= pe) {
        return Err(Error::OutOfRange(format!("l = {l} outside [1, {}]", pe - 1)));
    }
    let sig = g.signature();
    let num: u64 = ls.iter().map(|&l| sig.weighted_index(g.p, l)).sum();
    let den: u64 = ls.iter().sum();
    Ok(alpha_minus(g, num, den))
}

/// Whether `H` is an intermediate type: `r_i(G) ≥ r_i(H) ≥ r_{i+1}(G)` for all `i`.
pub fn is_intermediate(g: &Signature, h: &Signature) -> bool {
    let top = g.len().max(h.len());
    (1..=top).all(|i| g.r(i) >= h.r(i) && h.r(i) >= g.r(i + 1))
}

/// Decides the exceptional case where a proper intermediate `pG ⊴ H ⊲ G`
/// keeps the abscissa: `r_e(G) = 1`, `r_e(H) = 0`, and `r_i(G) = r_i(H)` below `e`.
pub fn alpha_gap_exceptional(g: &GroupDesc, h: &GroupDesc) -> Result<bool> {
    g.nontrivial()?;
    if g.p != h.p {
        return Err(Error::NotIntermediate);
    }
    let (gs, hs) = (g.signature(), h.signature());
    if !is_intermediate(&gs, &hs) {
        return Err(Error::NotIntermediate);
    }
    if gs == hs {
        return Err(Error::NotProper);
    }
    let e = gs.len();
    let exceptional =
        gs.r(e) == 1 && hs.r(e) == 0 && (1..e).all(|i| gs.r(i) == hs.r(i));
    debug_assert!(
        exceptional || {
            let gap = g.alpha_unchecked() - h.alpha_unchecked();
            gap > BigRational::new(1.into(), (2 * g.p.pow(e as u32)).into())
        }
    );
    Ok(exceptional)
}

/// All cyclic types (partitions) with at most `max_parts` parts each at most `max_exp`.
pub fn types_in_box(max_parts: u32, max_exp: u32) -> Vec<Vec<u32>> {
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, parts: u32, cap: u32) {
        out.push(cur.clone());
        if parts == 0 {
            return;
        }
        for e in 1..=cap {
            cur.push(e);
            rec(out, cur, parts - 1, e);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), max_parts, max_exp);
    for t in &mut out {
        t.sort_unstable_by(|a, b| b.cmp(a));
    }
    out.sort();
    out.dedup();
    out
}

/// All cyclic types of groups of order `p^k` with `k ≤ max_log`.
pub fn types_up_to_order(max_log: u32) -> Vec<Vec<u32>> {
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, left: u32, cap: u32) {
        out.push(cur.clone());
        for e in 1..=cap.min(left) {
            cur.push(e);
            rec(out, cur, left - e, e);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), max_log, max_log);
    out
}

/// `p`-adic valuation helper for divisibility `p^f | l`.
pub fn p_power_divides(p: u64, f: u32, l: u64) -> bool {
    l.is_multiple_of(p.pow(f))
}
