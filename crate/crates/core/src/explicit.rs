//! Concrete finite abelian p-groups with elements as mixed-radix indices,
//! and subgroups as bitsets. This is the substrate of the brute-force
//! subgroup oracles, sized for desk-scale groups.

use std::collections::HashSet;

use crate::arith::exact_log;
use crate::error::{Error, Result};
use crate::pgroup::{GroupDesc, Signature};

/// Resource guards for explicit enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_subgroups: usize,
    pub max_subspaces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1 << 16,
            max_subgroups: 1 << 16,
            max_subspaces: 1 << 16,
        }
    }
}

impl Limits {
    /// The tighter guard used by the quotient-count oracle.
    pub fn oracle() -> Self {
        Limits {
            max_elements: 1 << 12,
            ..Limits::default()
        }
    }
}

/// `∏_j Z/p^{e_j}` realized on exponent tuples; the group law is componentwise addition.
#[derive(Debug, Clone)]
pub struct ExplicitGroup {
    desc: GroupDesc,
    moduli: Vec<u64>,
    order: usize,
}

/// A subgroup stored as a membership bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    bits: Vec<u64>,
    size: usize,
}

impl Subgroup {
    fn empty(order: usize) -> Self {
        Subgroup {
            bits: vec![0; order.div_ceil(64)],
            size: 0,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits[x >> 6] >> (x & 63) & 1 == 1
    }

    fn insert(&mut self, x: usize) {
        if !self.contains(x) {
            self.bits[x >> 6] |= 1 << (x & 63);
            self.size += 1;
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

impl ExplicitGroup {
    pub fn new(desc: &GroupDesc, limits: &Limits) -> Result<Self> {
        let p = desc.p();
        let moduli: Vec<u64> = desc.cyclic_type().iter().map(|&e| p.pow(e)).collect();
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
            .filter(|&n| n <= limits.max_elements)
            .ok_or_else(|| {
                Error::ResourceLimit(format!(
                    "|{desc}| exceeds {} elements",
                    limits.max_elements
                ))
            })?;
        Ok(ExplicitGroup {
            desc: desc.clone(),
            moduli,
            order,
        })
    }

    pub fn desc(&self) -> &GroupDesc {
        &self.desc
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn coords(&self, mut x: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let c = x as u64 % m;
                x /= m as usize;
                c
            })
            .collect()
    }

    pub fn from_coords(&self, c: &[u64]) -> usize {
        let mut x = 0usize;
        for (&ci, &m) in c.iter().zip(&self.moduli).rev() {
            x = x * m as usize + (ci % m) as usize;
        }
        x
    }

    /// The `j`-th standard generator.
    pub fn generator(&self, j: usize) -> usize {
        let mut c = vec![0; self.moduli.len()];
        c[j] = 1;
        self.from_coords(&c)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let c: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        self.from_coords(&c)
    }

    pub fn scale(&self, k: u64, a: usize) -> usize {
        let c: Vec<u64> = self
            .coords(a)
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| ((x as u128 * k as u128) % m as u128) as u64)
            .collect();
        self.from_coords(&c)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut s = Subgroup::empty(self.order);
        s.insert(0);
        s
    }

    pub fn whole(&self) -> Subgroup {
        let mut s = Subgroup::empty(self.order);
        (0..self.order).for_each(|x| s.insert(x));
        s
    }

    /// `⟨S, a⟩ = ⋃_k (S + k·a)`.
    pub fn join(&self, s: &Subgroup, a: usize) -> Subgroup {
        if s.contains(a) {
            return s.clone();
        }
        let base: Vec<usize> = s.elements().collect();
        let mut out = s.clone();
        let mut shift = a;
        while !s.contains(shift) {
            for &x in &base {
                out.insert(self.add(x, shift));
            }
            shift = self.add(shift, a);
        }
        out
    }

    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        gens.iter()
            .fold(self.trivial_subgroup(), |s, &g| self.join(&s, g))
    }

    /// Image of multiplication by `k`.
    pub fn multiples(&self, s: &Subgroup, k: u64) -> Subgroup {
        let mut out = Subgroup::empty(self.order);
        for x in s.elements() {
            out.insert(self.scale(k, x));
        }
        out
    }

    /// Signature of a subgroup from the orders `|p^iS|`.
    pub fn signature_of(&self, s: &Subgroup) -> Signature {
        let p = self.desc.p();
        let mut ranks = Vec::new();
        let mut cur = s.clone();
        while cur.size() > 1 {
            let next = self.multiples(&cur, p);
            let idx = cur.size() / next.size();
            ranks.push(exact_log(p, idx as u64).expect("index of p-power subgroups"));
            cur = next;
        }
        Signature::new(ranks).expect("p-power filtration has decreasing ranks")
    }

    /// Signature of `A/B` from `|p^i(A/B)| = |p^iA + B| / |B|`.
    pub fn quotient_signature(&self, b: &Subgroup) -> Signature {
        let p = self.desc.p();
        let gens: Vec<usize> = (0..self.moduli.len()).map(|j| self.generator(j)).collect();
        let mut sizes = Vec::new();
        let mut k = 1u64;
        loop {
            let s = gens
                .iter()
                .fold(b.clone(), |acc, &g| self.join(&acc, self.scale(k, g)));
            sizes.push(s.size() / b.size());
            if s.size() == b.size() {
                break;
            }
            k *= p;
        }
        let ranks = sizes
            .windows(2)
            .map(|w| exact_log(p, (w[0] / w[1]) as u64).expect("p-power index"))
            .collect();
        Signature::new(ranks).expect("quotient filtration has decreasing ranks")
    }

    /// All subgroups, by a closure walk from the trivial subgroup.
    pub fn subgroups(&self, limits: &Limits) -> Result<Vec<Subgroup>> {
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let start = self.trivial_subgroup();
        seen.insert(start.clone());
        let mut frontier = vec![start];
        let mut all = Vec::new();
        while let Some(s) = frontier.pop() {
            for a in 0..self.order {
                if s.contains(a) {
                    continue;
                }
                let t = self.join(&s, a);
                if !seen.contains(&t) {
                    if seen.len() >= limits.max_subgroups {
                        return Err(Error::ResourceLimit(format!(
                            "more than {} subgroups",
                            limits.max_subgroups
                        )));
                    }
                    seen.insert(t.clone());
                    frontier.push(t);
                }
            }
            all.push(s);
        }
        Ok(all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eg(p: u64, t: &[u32]) -> ExplicitGroup {
        ExplicitGroup::new(&GroupDesc::new(p, t).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn coordinates_round_trip() {
        let a = eg(3, &[2, 1]);
        for x in 0..a.order() {
            assert_eq!(a.from_coords(&a.coords(x)), x);
        }
    }

    #[test]
    fn subgroup_counts() {
        // Z/4: 0, 2Z/4, Z/4.  (Z/2)^2: 5.  (Z/2)^3: 16.  Z/2×Z/4: 8.
        assert_eq!(eg(2, &[2]).subgroups(&Limits::default()).unwrap().len(), 3);
        assert_eq!(eg(2, &[1, 1]).subgroups(&Limits::default()).unwrap().len(), 5);
        assert_eq!(eg(2, &[1, 1, 1]).subgroups(&Limits::default()).unwrap().len(), 16);
        assert_eq!(eg(2, &[2, 1]).subgroups(&Limits::default()).unwrap().len(), 8);
        assert_eq!(eg(3, &[1, 1]).subgroups(&Limits::default()).unwrap().len(), 6);
    }

    #[test]
    fn signatures_of_whole_and_quotients() {
        let a = eg(2, &[3, 1]);
        assert_eq!(a.signature_of(&a.whole()).ranks(), &[2, 1, 1]);
        assert_eq!(a.quotient_signature(&a.trivial_subgroup()).ranks(), &[2, 1, 1]);
        assert!(a.quotient_signature(&a.whole()).is_empty());
    }

    #[test]
    fn limits_are_enforced() {
        let g = GroupDesc::new(2, &[13]).unwrap();
        assert!(matches!(
            ExplicitGroup::new(&g, &Limits::oracle()),
            Err(Error::ResourceLimit(_))
        ));
        let a = eg(2, &[1, 1, 1, 1]);
        let tight = Limits {
            max_subgroups: 10,
            ..Limits::default()
        };
        assert!(matches!(a.subgroups(&tight), Err(Error::ResourceLimit(_))));
    }
}
