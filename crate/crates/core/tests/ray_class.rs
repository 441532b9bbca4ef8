//! Conductor counts from explicit ray class groups.
//!
//! Over `F_q(T)` the p-part of the ray class group mod `𝔪` is
//! `Z × ∏_v (1 + 𝔭_v)/(1 + 𝔭_v^{m_v})`. Its G-quotients are those of
//! `Z/p^e × ∏_v U_v` for `p^e = exp G`. Counting them by subgroup enumeration
//! and inverting over sub-modules gives the number of G-extensions with
//! conductor exactly `𝔪`, independently of the Euler product.

use std::collections::HashMap;

use asw_core::delsarte::brute_quotient_count;
use asw_core::euler_engine::global_series;
use asw_core::explicit::{ExplicitGroup, Limits};
use asw_core::field_model::{DivisorDesc, PlaceDesc, Poly, PolyRing};
use asw_core::oracles::one_unit_signature;
use asw_core::GroupDesc;
use num_bigint::BigInt;

struct RayClassCounter {
    q: u64,
    g: GroupDesc,
    cache: HashMap<Vec<u32>, u64>,
}

impl RayClassCounter {
    fn new(q: u64, g: GroupDesc) -> Self {
        RayClassCounter { q, g, cache: HashMap::new() }
    }

    /// Cyclic type of `Z/p^e × ∏_v U_v`.
    fn ray_type(&self, m: &DivisorDesc) -> Vec<u32> {
        let mut t = vec![self.g.exponent()];
        for (v, k) in m.iter() {
            let pi = match v {
                PlaceDesc::Finite(pi) => pi.clone(),
                PlaceDesc::Infinite => Poly::t(),
            };
            t.extend(one_unit_signature(self.q, &pi, k).unwrap().cyclic_type());
        }
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// G-extensions with conductor dividing `m`.
    fn dividing(&mut self, m: &DivisorDesc) -> u64 {
        let t = self.ray_type(m);
        if let Some(&c) = self.cache.get(&t) {
            return c;
        }
        let a = GroupDesc::new(self.g.p(), &t).unwrap();
        let eg = ExplicitGroup::new(&a, &Limits::oracle()).unwrap();
        let c = brute_quotient_count(&eg, &self.g).unwrap();
        self.cache.insert(t, c);
        c
    }

    fn exact(&mut self, m: &DivisorDesc) -> i64 {
        let support: Vec<(PlaceDesc, u32)> = m.iter().map(|(v, k)| (v.clone(), k)).collect();
        let mut acc = 0i64;
        for mask in 0u32..1 << support.len() {
            let mut d = m.clone();
            let mut sign = 1;
            for (i, (v, k)) in support.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d.set(v.clone(), k - 1);
                    sign = -sign;
                }
            }
            acc += sign * self.dividing(&d) as i64;
        }
        acc
    }
}

fn check(q: u64, p: u64, t: &[u32], n: usize) {
    let g = GroupDesc::new(p, t).unwrap();
    let ring = PolyRing::new(q).unwrap();
    let mut counter = RayClassCounter::new(q, g.clone());
    let mut by_degree = vec![0i64; n + 1];
    for m in DivisorDesc::up_to_degree(&ring, n) {
        let c = counter.exact(&m);
        assert!(c >= 0, "negative count at {m}");
        by_degree[m.degree()] += c;
    }
    let engine: Vec<BigInt> = global_series(q, &g, n).unwrap().into_coeffs();
    let brute: Vec<BigInt> = by_degree.into_iter().map(BigInt::from).collect();
    assert_eq!(engine, brute, "q = {q}, G = {g}");
}

#[test]
fn cyclic_of_order_four_over_f2() {
    check(2, 2, &[2], 6);
}

#[test]
fn cyclic_of_order_eight_over_f2() {
    check(2, 2, &[3], 5);
}

#[test]
fn mixed_type_over_f2() {
    check(2, 2, &[2, 1], 5);
}

#[test]
fn klein_four_over_f2() {
    check(2, 2, &[1, 1], 6);
}

#[test]
fn cyclic_of_order_four_over_f4() {
    check(4, 2, &[2], 3);
}

#[test]
fn cyclic_of_order_nine_over_f3() {
    check(3, 3, &[2], 4);
}
