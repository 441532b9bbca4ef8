//! One-unit groups `(1 + πR)/(1 + π^m R)` of residue rings `R = F_q[T]/π^m`,
//! realized element by element.

use std::collections::HashSet;

use crate::arith::exact_log;
use crate::error::{Error, Result};
use crate::field_model::{PlaceDesc, Poly, PolyRing, ResidueRing};
use crate::pgroup::{weight, Signature};

#[derive(Debug, Clone)]
pub struct OneUnitGroup {
    ring: ResidueRing,
    norm: u64,
    m: u32,
    elements: Vec<Poly>,
}

impl OneUnitGroup {
    pub fn new(q: u64, pi: &Poly, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange("m must be at least 1".into()));
        }
        let base = PolyRing::new(q)?;
        PlaceDesc::finite(&base, pi.clone())?;
        let d = pi.degree().expect("irreducible") as u32;
        let too_big = || {
            Error::ResourceLimit(format!(
                "residue ring of size {q}^{} exceeds {}",
                d * m,
                ResidueRing::MAX_SIZE
            ))
        };
        q.checked_pow(d * m)
            .filter(|&s| s <= ResidueRing::MAX_SIZE)
            .ok_or_else(too_big)?;
        let ring = ResidueRing::new(base.clone(), base.pow(pi, m))?;
        let norm = q.pow(d);
        let one = Poly::constant(1);
        let elements = (0..norm.pow(m - 1))
            .map(|n| base.add(&one, &base.mul(pi, &Poly::from_index(n, q))))
            .collect();
        Ok(OneUnitGroup { ring, norm, m, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `N(π) = q^{deg π}`.
    pub fn norm(&self) -> u64 {
        self.norm
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    /// `[U^{p^{i−1}} : U^{p^i}]` for `i = 1, 2, …` until `U^{p^i}` is trivial.
    pub fn power_indices(&self) -> Vec<u64> {
        let p = self.ring.ring().field().p();
        let mut cur: HashSet<Poly> = self.elements.iter().cloned().collect();
        let mut out = Vec::new();
        while cur.len() > 1 {
            let next: HashSet<Poly> = cur.iter().map(|x| self.ring.pow(x, p)).collect();
            out.push((cur.len() / next.len()) as u64);
            cur = next;
        }
        out
    }

    pub fn signature(&self) -> Signature {
        let p = self.ring.ring().field().p();
        let ranks = self
            .power_indices()
            .iter()
            .map(|&k| exact_log(p, k).expect("p-group indices are p-powers"))
            .collect();
        Signature::new(ranks).expect("p-power filtrations have decreasing ranks")
    }

    /// Indices against `N(π)^{w_i(m)}`, over every `i` where either side is nontrivial.
    pub fn hasse_holds(&self) -> bool {
        let p = self.ring.ring().field().p();
        let idx = self.power_indices();
        let top = (1..).take_while(|&i| weight(p, i, self.m as u64) > 0).count();
        (1..=idx.len().max(top) as u32).all(|i| {
            let got = idx.get(i as usize - 1).copied().unwrap_or(1);
            got == self.norm.pow(weight(p, i, self.m as u64) as u32)
        })
    }
}

pub fn one_unit_signature(q: u64, pi: &Poly, m: u32) -> Result<Signature> {
    Ok(OneUnitGroup::new(q, pi, m)?.signature())
}

pub fn hasse_check(q: u64, pi: &Poly, m: u32) -> Result<bool> {
    Ok(OneUnitGroup::new(q, pi, m)?.hasse_holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Poly {
        Poly::from_coeffs(v.to_vec())
    }

    #[test]
    fn signatures_at_t() {
        assert_eq!(one_unit_signature(2, &Poly::t(), 4).unwrap().ranks(), &[2, 1]);
        assert_eq!(one_unit_signature(2, &Poly::t(), 5).unwrap().ranks(), &[2, 1, 1]);
        assert!(one_unit_signature(2, &Poly::t(), 1).unwrap().is_empty());
    }

    #[test]
    fn hasse_examples() {
        let u = OneUnitGroup::new(2, &Poly::t(), 5).unwrap();
        assert_eq!(u.power_indices(), vec![4, 2, 2]);
        assert!(u.hasse_holds());
        assert!(hasse_check(3, &Poly::t(), 4).unwrap());
        let u = OneUnitGroup::new(2, &p(&[1, 1, 1]), 3).unwrap();
        assert_eq!(u.norm(), 4);
        assert_eq!(u.order(), 16);
        assert!(u.hasse_holds());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(OneUnitGroup::new(2, &p(&[1, 0, 1]), 3).is_err());
        assert!(matches!(
            OneUnitGroup::new(2, &Poly::t(), 17),
            Err(Error::ResourceLimit(_))
        ));
    }
}
