use asw_core::bounds::{disc_exponent_bound, exponent_summary};
use asw_core::pgroup::types_up_to_order;
use asw_core::GroupDesc;
use num_traits::Zero;

fn groups_up_to_64(p: u64) -> Vec<GroupDesc> {
    let max_log = (1..).take_while(|&k| p.pow(k) <= 64).last().unwrap();
    types_up_to_order(max_log)
        .into_iter()
        .filter(|t| !t.is_empty())
        .map(|t| GroupDesc::new(p, &t).unwrap())
        .collect()
}

#[test]
fn exponent_bound_is_monotone() {
    for p in [2u64, 3, 5, 7] {
        for g in groups_up_to_64(p) {
            let vals: Vec<_> = (0..=40).map(|f| disc_exponent_bound(&g, f).unwrap()).collect();
            assert!(vals.windows(2).all(|w| w[0] <= w[1]), "G = {g}");
        }
    }
}

#[test]
fn elementary_groups_have_no_defect() {
    for p in [2u64, 3, 5, 7] {
        for g in groups_up_to_64(p).into_iter().filter(GroupDesc::is_elementary) {
            let inv = g.invariants().unwrap();
            assert!(inv.delta.is_zero());
            let s = exponent_summary(&g).unwrap();
            assert_eq!(s.lower, s.conjecture);
            assert_eq!(s.conjecture, inv.a_p);
        }
    }
}
