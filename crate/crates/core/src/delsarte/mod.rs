//! Delsarte–Möbius calculus for finite abelian p-groups.
//!
//! `f_G(X) = Σ_{pG ⊴ H ⊴ G} μ(G/H) X^{r(H)}` counts epimorphisms `A → G` when
//! evaluated at the index vector `x(A)`; dividing by `|Aut G|` counts the
//! subgroups of `A` with quotient `G`. The sum is computed by walking the
//! subspace lattice of `G/pG`, lifting each subspace to `H` and reading off
//! its signature by element enumeration. The closed product form serves as
//! the cross-check and as the fast evaluation route.

mod poly;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::arith::{big_pow, exact_log_big};
use crate::error::{Error, Result};
use crate::explicit::{ExplicitGroup, Limits};
use crate::pgroup::{GroupDesc, Signature};

pub use poly::SignaturePoly;

/// Delsarte–Möbius function of an elementary abelian group of rank `r`.
pub fn mu_elementary(p: u64, r: u32) -> BigInt {
    let m = big_pow(p, (r as u64) * (r as u64).saturating_sub(1) / 2);
    if r.is_multiple_of(2) {
        m
    } else {
        -m
    }
}

/// `μ(A) = (−1)^r p^{r(r−1)/2}` if `A ≅ (Z/p)^r`, else 0.
pub fn mu_delsarte(a: &GroupDesc) -> BigInt {
    if a.is_elementary() {
        mu_elementary(a.p(), a.rank() as u32)
    } else {
        BigInt::zero()
    }
}

/// All subspaces of `F_p^n`, each as the rows of its reduced row echelon basis.
pub fn subspaces(p: u64, n: usize, limit: usize) -> Result<Vec<Vec<Vec<u64>>>> {
    fn pivots(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            pivots(n, k, c + 1, cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    for k in 0..=n {
        let mut sets = Vec::new();
        pivots(n, k, 0, &mut Vec::new(), &mut sets);
        for piv in sets {
            // Free slots: (row, column) right of the row's pivot and not a pivot column.
            let free: Vec<(usize, usize)> = piv
                .iter()
                .enumerate()
                .flat_map(|(r, &c)| {
                    let piv = &piv;
                    (c + 1..n).filter(move |j| !piv.contains(j)).map(move |j| (r, j))
                })
                .collect();
            let combos = (p as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
            if out.len() as u128 + combos > limit as u128 {
                return Err(Error::ResourceLimit(format!(
                    "subspace lattice of F_{p}^{n} exceeds {limit}"
                )));
            }
            for mut code in 0..combos as u64 {
                let mut rows = vec![vec![0u64; n]; k];
                for (r, &c) in piv.iter().enumerate() {
                    rows[r][c] = 1;
                }
                for &(r, j) in &free {
                    rows[r][j] = code % p;
                    code /= p;
                }
                out.push(rows);
            }
        }
    }
    Ok(out)
}

/// A subgroup `pG ⊴ H ⊴ G`, recorded by its signature and `dim_{F_p}(G/H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intermediate {
    pub signature: Signature,
    pub codim: u32,
}

/// Every subgroup between `pG` and `G`, one per subspace of `G/pG`.
pub fn intermediate_subgroups(g: &GroupDesc, limits: &Limits) -> Result<Vec<Intermediate>> {
    let p = g.p();
    let eg = ExplicitGroup::new(g, limits)?;
    let r1 = g.rank();
    let p_gens: Vec<usize> = (0..r1).map(|j| eg.scale(p, eg.generator(j))).collect();
    let pg = eg.generate(&p_gens);
    let mut out = Vec::new();
    for basis in subspaces(p, r1, limits.max_subspaces)? {
        let h = basis
            .iter()
            .fold(pg.clone(), |acc, row| eg.join(&acc, eg.from_coords(row)));
        out.push(Intermediate {
            signature: eg.signature_of(&h),
            codim: (r1 - basis.len()) as u32,
        });
    }
    Ok(out)
}

fn weighted_sum(
    g: &GroupDesc,
    limits: &Limits,
    weight: impl Fn(&Signature) -> BigInt,
) -> Result<SignaturePoly> {
    let mut out = SignaturePoly::zero();
    for h in intermediate_subgroups(g, limits)? {
        let c = mu_elementary(g.p(), h.codim) * weight(&h.signature);
        out.add_term(h.signature.ranks(), BigRational::from_integer(c));
    }
    Ok(out)
}

/// `f_G` by subgroup enumeration, with the default resource guard.
pub fn f_polynomial(g: &GroupDesc) -> Result<SignaturePoly> {
    f_polynomial_with(g, &Limits::default())
}

pub fn f_polynomial_with(g: &GroupDesc, limits: &Limits) -> Result<SignaturePoly> {
    weighted_sum(g, limits, |_| BigInt::one())
}

/// `∏_i X_i^{r_{i+1}} ∏_{j=r_{i+1}}^{r_i−1} (X_i − p^j)`.
pub fn f_factorized(g: &GroupDesc) -> SignaturePoly {
    let sig = g.signature();
    let mut out = SignaturePoly::one();
    for i in 1..=sig.len() {
        let (ri, rnext) = (sig.r(i), sig.r(i + 1));
        let mut exps = vec![0; i];
        exps[i - 1] = rnext;
        out = &out * &SignaturePoly::monomial(&exps, BigRational::one());
        for j in rnext..ri {
            out = &out * &SignaturePoly::linear(i, big_pow(g.p(), j as u64));
        }
    }
    out
}

/// Index vector `x(A)_i = [p^{i−1}A : p^iA] = p^{r_i(A)}`.
pub fn index_vector(a: &GroupDesc) -> Vec<BigInt> {
    a.signature()
        .ranks()
        .iter()
        .map(|&r| big_pow(a.p(), r as u64))
        .collect()
}

/// `|Aut G| = f_G(x(G))`.
pub fn aut_order(g: &GroupDesc) -> BigInt {
    f_factorized(g).eval_int(&index_vector(g)).to_integer()
}

/// Homomorphism, epimorphism and quotient counts for an index vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    pub eta: BigInt,
    pub eps: BigInt,
    pub kappa: BigInt,
}

fn validate_index_vector(p: u64, x: &[BigUint]) -> Result<()> {
    let mut prev = u32::MAX;
    for xi in x {
        let k = exact_log_big(p, xi)
            .ok_or_else(|| Error::InvalidIndexVector(format!("{xi} is not a power of {p}")))?;
        if k > prev {
            return Err(Error::InvalidIndexVector(
                "p-logarithms must be weakly decreasing".into(),
            ));
        }
        prev = k;
    }
    Ok(())
}

/// `η = ∏ x_i^{r_i(G)}`, `ε = f_G(x)`, `κ = ε / |Aut G|` for `x = x(A)`.
pub fn counts(x: &[BigUint], g: &GroupDesc) -> Result<Counts> {
    validate_index_vector(g.p(), x)?;
    let xs: Vec<BigInt> = x.iter().cloned().map(BigInt::from).collect();
    let sig = g.signature();
    let eta: BigInt = (1..=sig.len())
        .map(|i| match xs.get(i - 1) {
            Some(xi) => Pow::pow(xi.clone(), sig.r(i)),
            None => BigInt::one(),
        })
        .product();
    let eps = f_factorized(g).eval_int(&xs).to_integer();
    let (kappa, rem) = eps.div_rem(&aut_order(g));
    assert!(rem.is_zero(), "Aut(G) acts freely on epimorphisms");
    Ok(Counts { eta, eps, kappa })
}

/// `e(X) = |Aut G|^{-1} Σ μ(G/H) [H : pH] X^{r(H)}`.
pub fn e_polynomial(g: &GroupDesc) -> Result<SignaturePoly> {
    e_polynomial_with(g, &Limits::default())
}

pub fn e_polynomial_with(g: &GroupDesc, limits: &Limits) -> Result<SignaturePoly> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let p = g.p();
    let sum = weighted_sum(g, limits, |s| big_pow(p, s.r(1) as u64))?;
    Ok(sum.scale(&BigRational::new(BigInt::one(), aut_order(g))))
}

/// `|Aut G|^{-1} Σ μ(G/H) |H| X^{r(H)}`, i.e. `f_G((p X_i)_i) / |Aut G|`.
///
/// Over a base field whose divisor class group is `Z` (genus 0), the ray class
/// group mod `𝔪` is `Z × U_𝔪`, so `x_i(Cl_𝔪) = p · u_i(𝔪)` for every `i`. Evaluated
/// at `u(𝔪)` this polynomial therefore counts the G-extensions with module `𝔪`.
/// It agrees with [`e_polynomial`] exactly when `G` is elementary abelian.
pub fn module_polynomial(g: &GroupDesc) -> Result<SignaturePoly> {
    module_polynomial_with(g, &Limits::default())
}

pub fn module_polynomial_with(g: &GroupDesc, limits: &Limits) -> Result<SignaturePoly> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let p = g.p();
    let sum = weighted_sum(g, limits, |s| big_pow(p, s.total() as u64))?;
    Ok(sum.scale(&BigRational::new(BigInt::one(), aut_order(g))))
}

/// Number of subgroups `B ⊴ A` with `A/B ≅ G`, by walking the subgroup lattice of `A`.
pub fn brute_quotient_count(a: &ExplicitGroup, g: &GroupDesc) -> Result<u64> {
    if a.desc().p() != g.p() {
        return Ok(u64::from(g.is_trivial()));
    }
    Ok(quotient_census(a)?
        .get(&g.signature())
        .copied()
        .unwrap_or(0))
}

/// Quotient types of all subgroups of `A`, tallied by signature.
pub fn quotient_census(a: &ExplicitGroup) -> Result<BTreeMap<Signature, u64>> {
    let limits = Limits::oracle();
    if a.order() > limits.max_elements {
        return Err(Error::ResourceLimit(format!(
            "|A| = {} exceeds {}",
            a.order(),
            limits.max_elements
        )));
    }
    let mut census = BTreeMap::new();
    for b in a.subgroups(&limits)? {
        *census.entry(a.quotient_signature(&b)).or_insert(0) += 1;
    }
    Ok(census)
}
