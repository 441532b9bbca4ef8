//! Artin-Schreier classes of `F_p(T)` with bounded conductor.
//!
//! Classes of `F/℘(F)` whose conductor divides `𝔪` are `L(D)/℘(L(D'))` with
//! `D = Σ (m_v − 1) v` and `D' = Σ ⌊(m_v − 1)/p⌋ v`. `L(D)` has the partial
//! fraction basis `1`, `T^j/π^k` (`j < deg π`, `1 ≤ k < m_v`) and `T^k`
//! (`1 ≤ k < m_∞`). `℘` preserves each place's block, so conductors are
//! computed block by block.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::field_model::{DivisorDesc, PlaceDesc, Poly, PolyRing};

use super::linalg::Span;

/// Largest module degree accepted by the oracle.
pub const MAX_MODULE_DEGREE: usize = 12;
/// Largest class space enumerated element by element.
pub const MAX_CLASSES: u64 = 1 << 16;

#[derive(Debug, Clone)]
struct Block {
    place: PlaceDesc,
    start: usize,
    /// `deg π`, or 1 at infinity.
    width: usize,
    max_pole: usize,
    /// `℘(L(D'))` restricted to this block.
    images: Span,
}

impl Block {
    fn coord(&self, k: usize, j: usize) -> usize {
        self.start + (k - 1) * self.width + j
    }

    fn len(&self) -> usize {
        self.width * self.max_pole
    }
}

/// `L(D)/℘(L(D'))` for a module `𝔪` of `F_p(T)`.
#[derive(Debug, Clone)]
pub struct AswClassSpace {
    p: u32,
    modulus: DivisorDesc,
    blocks: Vec<Block>,
    ambient: usize,
    images: Span,
}

impl AswClassSpace {
    pub fn new(p: u64, modulus: &DivisorDesc) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if modulus.degree() > MAX_MODULE_DEGREE {
            return Err(Error::ResourceLimit(format!(
                "module degree {} exceeds {MAX_MODULE_DEGREE}",
                modulus.degree()
            )));
        }
        let ring = PolyRing::new(p)?;
        let mut blocks = Vec::new();
        let mut next = 1usize;
        for (v, m) in modulus.iter() {
            if let PlaceDesc::Finite(pi) = v {
                PlaceDesc::finite(&ring, pi.clone())?;
            }
            let block = Block {
                place: v.clone(),
                start: next,
                width: v.degree(),
                max_pole: m as usize - 1,
                images: Span::new(p as u32, 0),
            };
            next += block.len();
            blocks.push(block);
        }
        let ambient = next;
        let mut images = Span::new(p as u32, ambient);
        for b in &mut blocks {
            let mut local = Span::new(p as u32, b.len());
            for img in wp_images(&ring, b, ambient) {
                images.insert(&img);
                local.insert(&img[b.start..b.start + b.len()]);
            }
            b.images = local;
        }
        Ok(AswClassSpace {
            p: p as u32,
            modulus: modulus.clone(),
            blocks,
            ambient,
            images,
        })
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn modulus(&self) -> &DivisorDesc {
        &self.modulus
    }

    /// `dim L(D)`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// `dim_{F_p}` of the class space.
    pub fn dim(&self) -> usize {
        self.ambient - self.images.dim()
    }

    /// Number of classes with conductor dividing `𝔪`, the trivial class included.
    pub fn class_count(&self) -> u64 {
        (self.p as u64).pow(self.dim() as u32)
    }

    /// Canonical representative of the class of `f` (coordinates in the basis of `L(D)`).
    pub fn class_key(&self, f: &[u32]) -> Vec<u32> {
        self.images.reduce(f)
    }

    /// Conductor of the class of `f`: exponent `s + 1` at each place where the
    /// least pole order over `f + ℘(L(D'))` is `s ≥ 1`.
    pub fn conductor(&self, f: &[u32]) -> DivisorDesc {
        let mut out = DivisorDesc::zero();
        for b in &self.blocks {
            let local = &f[b.start..b.start + b.len()];
            let mut span = b.images.clone();
            for s in 0..=b.max_pole {
                if s > 0 {
                    for j in 0..b.width {
                        let mut e = vec![0; b.len()];
                        e[b.coord(s, j) - b.start] = 1;
                        span.insert(&e);
                    }
                }
                if span.contains(local) {
                    debug_assert!(s == 0 || s % self.p as usize != 0, "reduced pole orders are prime to p");
                    if s > 0 {
                        out.set(b.place.clone(), s as u32 + 1);
                    }
                    break;
                }
            }
        }
        out
    }

    /// One canonical representative per class.
    pub fn classes(&self) -> Result<Vec<Vec<u32>>> {
        let total = (self.p as u64)
            .checked_pow(self.dim() as u32)
            .filter(|&c| c <= MAX_CLASSES)
            .ok_or_else(|| Error::ResourceLimit(format!("more than {MAX_CLASSES} classes")))?;
        let free: Vec<usize> = (0..self.ambient)
            .filter(|c| !self.images.pivots().contains(c))
            .collect();
        Ok((0..total)
            .map(|mut n| {
                let mut v = vec![0u32; self.ambient];
                for &c in &free {
                    v[c] = (n % self.p as u64) as u32;
                    n /= self.p as u64;
                }
                v
            })
            .collect())
    }

    /// `a f + b g` coordinatewise.
    pub fn combine(&self, a: u32, f: &[u32], b: u32, g: &[u32]) -> Vec<u32> {
        f.iter().zip(g).map(|(&x, &y)| (a * x + b * y) % self.p).collect()
    }

    /// `℘` of each basis element of `L(D')`, as vectors of `L(D)`.
    pub fn wp_basis(&self) -> Vec<Vec<u32>> {
        let ring = PolyRing::new(self.p as u64).expect("prime field");
        self.blocks.iter().flat_map(|b| wp_images(&ring, b, self.ambient)).collect()
    }
}

/// `℘` of the basis of `L(D')` inside one block, as vectors of `L(D)`.
fn wp_images(ring: &PolyRing, b: &Block, ambient: usize) -> Vec<Vec<u32>> {
    let p = ring.field().p() as usize;
    let field = ring.field();
    let mut out = Vec::new();
    for k in 1..=b.max_pole / p {
        for j in 0..b.width {
            let mut v = vec![0u32; ambient];
            match &b.place {
                PlaceDesc::Infinite => v[b.coord(k * p, 0)] = 1,
                PlaceDesc::Finite(pi) => {
                    // T^{jp}/π^{kp} = Σ_i a_i / π^{kp−i} with a_i the π-adic digits of T^{jp}.
                    let mut num = Poly::monomial(j * p, 1);
                    let mut i = 0;
                    while !num.is_zero() {
                        let (quo, digit) = ring.divmod(&num, pi);
                        for (jj, &c) in digit.coeffs().iter().enumerate() {
                            v[b.coord(k * p - i, jj)] = c;
                        }
                        num = quo;
                        i += 1;
                    }
                }
            }
            let c = b.coord(k, j);
            v[c] = field.sub(v[c], 1);
            out.push(v);
        }
    }
    out
}

/// Sub-divisors `𝔪 − Σ_{v ∈ S} v`, `S ⊆ supp 𝔪`, with sign `(−1)^{|S|}`.
fn moebius_children(m: &DivisorDesc) -> Vec<(DivisorDesc, i64)> {
    let support: Vec<(PlaceDesc, u32)> = m.iter().map(|(v, e)| (v.clone(), e)).collect();
    (0u32..1 << support.len())
        .map(|mask| {
            let mut d = m.clone();
            let mut sign = 1;
            for (i, (v, e)) in support.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d.set(v.clone(), e - 1);
                    sign = -sign;
                }
            }
            (d, sign)
        })
        .collect()
}

/// Number of `Z/p`-extensions of `F_p(T)` with conductor exactly `𝔪`.
pub fn asw_count(p: u64, m: &DivisorDesc) -> Result<u64> {
    let mut exact = 0i64;
    for (d, sign) in moebius_children(m) {
        exact += sign * AswClassSpace::new(p, &d)?.class_count() as i64;
    }
    // The trivial class has conductor 1; each extension is a line minus 0.
    exact -= i64::from(m.is_zero());
    assert!(exact >= 0 && exact % (p as i64 - 1) == 0, "classes come in F_p^× orbits");
    Ok(exact as u64 / (p - 1))
}

/// Number of `(Z/2)²`-extensions of `F_2(T)` with conductor exactly `𝔪`, by
/// enumerating pairs of classes.
pub fn asw_rank2_count(m: &DivisorDesc) -> Result<u64> {
    let space = AswClassSpace::new(2, m)?;
    let classes = space.classes()?;
    let conductors: Vec<DivisorDesc> = classes.iter().map(|f| space.conductor(f)).collect();
    let index = |f: &[u32]| {
        classes
            .iter()
            .position(|c| c.as_slice() == f)
            .expect("classes are closed under addition")
    };
    let mut pairs = 0u64;
    for a in 1..classes.len() {
        for b in a + 1..classes.len() {
            let s = index(&space.class_key(&space.combine(1, &classes[a], 1, &classes[b])));
            let f = conductors[a].lcm(&conductors[b]).lcm(&conductors[s]);
            if f == *m {
                pairs += 1;
            }
        }
    }
    // A plane has three nonzero vectors, hence three unordered pairs.
    assert_eq!(pairs % 3, 0);
    Ok(pairs / 3)
}

/// `Σ_{deg 𝔪 ≤ n}` of the exact-conductor counts for `(Z/p)^rank`.
pub fn asw_counting_function(p: u64, n: usize, rank: u32) -> Result<u64> {
    Ok(asw_degree_counts(p, n, rank)?.iter().sum())
}

/// Exact-conductor counts grouped by `deg 𝔪 = 0..=n`.
pub fn asw_degree_counts(p: u64, n: usize, rank: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    match rank {
        1 => {}
        2 if p == 2 => {}
        2 => return Err(Error::OutOfRange("the rank-2 oracle is implemented for p = 2".into())),
        _ => return Err(Error::OutOfRange(format!("rank {rank} is not 1 or 2"))),
    }
    if n > MAX_MODULE_DEGREE {
        return Err(Error::ResourceLimit(format!("degree {n} exceeds {MAX_MODULE_DEGREE}")));
    }
    let ring = PolyRing::new(p)?;
    let mut out = vec![0u64; n + 1];
    for m in DivisorDesc::up_to_degree(&ring, n) {
        out[m.degree()] += match rank {
            1 => asw_count(p, &m)?,
            _ => asw_rank2_count(&m)?,
        };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_pow(k: u32) -> DivisorDesc {
        DivisorDesc::single(PlaceDesc::Finite(Poly::t()), k)
    }

    #[test]
    fn counts_at_t() {
        assert_eq!(asw_count(2, &t_pow(2)).unwrap(), 2);
        assert_eq!(asw_count(2, &t_pow(4)).unwrap(), 4);
        assert_eq!(asw_count(2, &t_pow(3)).unwrap(), 0);
        assert_eq!(asw_count(2, &DivisorDesc::zero()).unwrap(), 1);
    }

    #[test]
    fn class_space_of_t4() {
        let s = AswClassSpace::new(2, &t_pow(4)).unwrap();
        assert_eq!(s.ambient_dim(), 4);
        assert_eq!(s.dim(), 3);
        let conds: Vec<u32> = s
            .classes()
            .unwrap()
            .iter()
            .map(|f| s.conductor(f).exponent(&PlaceDesc::Finite(Poly::t())))
            .collect();
        assert_eq!(conds.iter().filter(|&&e| e == 4).count(), 4);
        assert_eq!(conds.iter().filter(|&&e| e == 2).count(), 2);
        assert_eq!(conds.iter().filter(|&&e| e == 0).count(), 2);
    }

    #[test]
    fn infinite_place_matches_finite() {
        for k in 0..=6 {
            let inf = DivisorDesc::single(PlaceDesc::Infinite, k);
            assert_eq!(asw_count(2, &inf).unwrap(), asw_count(2, &t_pow(k)).unwrap());
        }
    }

    #[test]
    fn counting_functions() {
        assert_eq!(asw_counting_function(2, 4, 1).unwrap(), 31);
        assert_eq!(asw_counting_function(2, 2, 1).unwrap(), 7);
        assert_eq!(asw_counting_function(2, 0, 2).unwrap(), 0);
        assert!(asw_counting_function(3, 2, 2).is_err());
    }
}
