use asw_core::arith::rat;
use asw_core::pgroup::{alpha_gap_exceptional, is_intermediate, types_up_to_order};
use asw_core::{GroupDesc, Signature};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn groups(p: u64, max_log: u32) -> Vec<GroupDesc> {
    types_up_to_order(max_log)
        .into_iter()
        .filter(|t| !t.is_empty())
        .map(|t| GroupDesc::new(p, &t).unwrap())
        .collect()
}

#[test]
fn signatures_partition_the_order() {
    for p in [2u64, 3, 5] {
        for g in groups(p, 8) {
            let sig = g.signature();
            assert_eq!(sig.total(), g.cyclic_type().iter().sum::<u32>());
            assert!(sig.ranks().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

#[test]
fn alpha_detects_cyclicity() {
    for p in [2u64, 3, 5] {
        for g in groups(p, 6) {
            let alpha = g.alpha().unwrap();
            if g.is_cyclic() {
                assert!(alpha.is_one());
            } else {
                let pe = p.pow(g.exponent()) as i64;
                assert!(alpha >= BigRational::one() + rat(p as i64 - 1, pe), "G = {g}");
            }
        }
    }
}

#[test]
fn derived_exponents_are_consistent() {
    for p in [2u64, 3] {
        for g in groups(p, 6) {
            let inv = g.invariants().unwrap();
            assert_eq!(&inv.a_p * &inv.m_tilde, inv.alpha);
            let pg = BigRational::from_integer(g.multiple_order(1) - 1);
            let whole = BigRational::from_integer(g.order() - 1);
            assert!(inv.delta <= pg / whole);
        }
    }
}

#[test]
fn alpha_gap_dichotomy() {
    for p in [2u64, 3] {
        for g in groups(p, 6) {
            let gs = g.signature();
            for h in groups(p, g.order_log()) {
                let hs = h.signature();
                if hs == gs || !is_intermediate(&gs, &hs) {
                    continue;
                }
                let gap = g.alpha().unwrap() - h.alpha().unwrap();
                let pe = p.pow(g.exponent()) as i64;
                if alpha_gap_exceptional(&g, &h).unwrap() {
                    assert_eq!(gap, BigRational::from_integer(0.into()), "G = {g}, H = {h}");
                } else {
                    assert!(gap > rat(1, 2 * pe), "G = {g}, H = {h}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn type_signature_round_trip(p in prop::sample::select(vec![2u64, 3, 5, 7]), t in prop::collection::vec(1u32..6, 0..5)) {
        let g = GroupDesc::new(p, &t).unwrap();
        let back = GroupDesc::from_signature(p, &g.signature()).unwrap();
        prop_assert_eq!(back, g.clone());
        let sig = g.signature();
        prop_assert_eq!(Signature::new(sig.ranks().to_vec()).unwrap().cyclic_type(), g.cyclic_type().to_vec());
    }
}
