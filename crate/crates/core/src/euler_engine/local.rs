//! Local Euler factors at a single place, symbolic in the residue norm `q̂`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::pgroup::{GroupDesc, Signature};
use crate::series::{QPoly, SeriesUQ};

/// `u_H(𝔭^m) = q̂^{Σ_i r_i(H) w_i(m)}`.
pub fn u_value(sig: &Signature, p: u64, m: u64) -> QPoly {
    QPoly::monomial(sig.weighted_index(p, m) as usize, BigInt::one())
}

/// `b_H(𝔭^m)`: `1` at `m = 0`, else `u_H(𝔭^m) − u_H(𝔭^{m−1})`.
pub fn b_local(sig: &Signature, p: u64, m: u64) -> QPoly {
    if m == 0 {
        return QPoly::one();
    }
    &u_value(sig, p, m) - &u_value(sig, p, m - 1)
}

/// `Φ`, its factorization `Λ · Ψ`, and the verdicts of both local identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFactor {
    pub phi: SeriesUQ,
    pub lambda: SeriesUQ,
    pub psi: SeriesUQ,
    /// `Φ = Λ Ψ` coefficientwise.
    pub identity_ok: bool,
    /// `B_{kp^e+l} = U_{p^e}^k B_l` for `1 ≤ l ≤ p^e`, `kp^e + l ≤ M`.
    pub shift_identity_ok: bool,
}

fn period(sig: &Signature, p: u64, trunc: usize) -> Result<usize> {
    let pe = p.pow(sig.len() as u32) as usize;
    if trunc < pe {
        return Err(Error::TruncationTooSmall { need: pe, got: trunc });
    }
    Ok(pe)
}

/// `Σ_{m ≤ M} b_H(𝔭^m) u^m`.
pub fn phi_series(sig: &Signature, p: u64, trunc: usize) -> SeriesUQ {
    let coeffs = (0..=trunc as u64).map(|m| b_local(sig, p, m)).collect();
    SeriesUQ::from_coeffs(coeffs, trunc)
}

/// `∏_{l=2}^{p^e} (1 − q̂^{a(l)} u^l)^{−1}`.
pub fn lambda_series(sig: &Signature, p: u64, trunc: usize) -> SeriesUQ {
    let pe = p.pow(sig.len() as u32);
    (2..=pe).fold(SeriesUQ::one(trunc), |acc, l| {
        acc.div_one_minus(sig.weighted_index(p, l) as usize, l as usize)
    })
}

/// `(1 + Σ_{l<p^e} q̂^{a(l)} u^l) ∏_{l<p^e} (1 − q̂^{a(l)} u^l)`.
pub fn psi_series(sig: &Signature, p: u64, trunc: usize) -> SeriesUQ {
    let pe = p.pow(sig.len() as u32);
    let mut head = SeriesUQ::one(trunc);
    for l in 1..pe {
        head.add_monomial(l as usize, sig.weighted_index(p, l) as usize, BigInt::one());
    }
    (1..pe).fold(head, |acc, l| {
        acc.mul_one_minus(sig.weighted_index(p, l) as usize, l as usize)
    })
}

pub fn local_factor(sig: &Signature, p: u64, trunc: usize) -> Result<LocalFactor> {
    let pe = period(sig, p, trunc)?;
    let phi = phi_series(sig, p, trunc);
    let lambda = lambda_series(sig, p, trunc);
    let psi = psi_series(sig, p, trunc);
    let identity_ok = &lambda * &psi == phi;
    let u_top = sig.weighted_index(p, pe as u64) as usize;
    let shift_identity_ok = (0..=trunc / pe).all(|k| {
        (1..=pe)
            .filter(|l| k * pe + l <= trunc)
            .all(|l| *phi.coeff(k * pe + l) == phi.coeff(l).shift(k * u_top))
    });
    Ok(LocalFactor {
        phi,
        lambda,
        psi,
        identity_ok,
        shift_identity_ok,
    })
}

/// Checks that `Ψ` has no `u¹` term and that every monomial `q̂^a u^l`
/// (`l ≥ 1`) of `Ψ` satisfies `(1 + a)/l < α_p(G) − 1/(2p^e)`.
pub fn psi_exponent_check(sig: &Signature, p: u64, trunc: usize) -> Result<bool> {
    let pe = period(sig, p, trunc)?;
    if trunc < 2 * pe {
        return Err(Error::TruncationTooSmall { need: 2 * pe, got: trunc });
    }
    if sig.is_empty() {
        return Ok(true);
    }
    let g = GroupDesc::from_signature(p, sig)?;
    let bound = g.alpha()? - BigRational::new(BigInt::one(), BigInt::from(2 * pe as u64));
    let psi = psi_series(sig, p, trunc);
    if !psi.coeff(1).is_zero() {
        return Ok(false);
    }
    Ok((1..=trunc).all(|l| {
        psi.coeff(l).terms().all(|(a, _)| {
            BigRational::new(BigInt::from(1 + a), BigInt::from(l)) < bound
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: &[u32]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    fn qp(v: &[i64]) -> QPoly {
        QPoly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn u_and_b_values() {
        assert_eq!(u_value(&sig(&[1]), 2, 2), qp(&[0, 1]));
        assert_eq!(u_value(&sig(&[2, 1]), 2, 0), QPoly::one());
        assert_eq!(u_value(&sig(&[1, 1]), 2, 4), qp(&[0, 0, 0, 1]));
        assert!(b_local(&sig(&[1]), 2, 1).is_zero());
        assert_eq!(b_local(&sig(&[1]), 2, 2), qp(&[-1, 1]));
        assert!(b_local(&sig(&[1]), 2, 3).is_zero());
    }

    #[test]
    fn z2_factors() {
        let f = local_factor(&sig(&[1]), 2, 8).unwrap();
        assert!(f.identity_ok && f.shift_identity_ok);
        let expect = SeriesUQ::one(8).mul_one_minus(0, 2).div_one_minus(1, 2);
        assert_eq!(f.phi, expect);
        assert_eq!(f.lambda, SeriesUQ::one(8).div_one_minus(1, 2));
        assert_eq!(f.psi, SeriesUQ::one(8).mul_one_minus(0, 2));
        assert_eq!(f.phi.coeff(4), &qp(&[0, -1, 1]));
    }

    #[test]
    fn trivial_signature_is_unramified() {
        let f = local_factor(&sig(&[]), 3, 5).unwrap();
        assert_eq!(f.phi, SeriesUQ::one(5));
        assert!(f.identity_ok);
    }

    #[test]
    fn truncation_guard() {
        assert_eq!(
            local_factor(&sig(&[1, 1]), 2, 3),
            Err(Error::TruncationTooSmall { need: 4, got: 3 })
        );
        assert!(psi_exponent_check(&sig(&[1]), 2, 3).is_err());
    }

    #[test]
    fn psi_exponents() {
        assert!(psi_exponent_check(&sig(&[1]), 2, 4).unwrap());
        assert!(psi_exponent_check(&sig(&[2]), 2, 6).unwrap());
        assert!(psi_exponent_check(&sig(&[1, 1]), 2, 8).unwrap());
        assert!(psi_exponent_check(&sig(&[1]), 3, 6).unwrap());
    }
}
