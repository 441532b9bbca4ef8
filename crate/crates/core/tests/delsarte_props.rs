use asw_core::delsarte::{
    aut_order, brute_quotient_count, counts, e_polynomial, f_factorized, f_polynomial, index_vector, module_polynomial,
};
use asw_core::explicit::{ExplicitGroup, Limits};
use asw_core::GroupDesc;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn type_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=3, 0..=3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn to_index(x: &[BigInt]) -> Vec<BigUint> {
    x.iter().map(|v| v.to_biguint().unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_group_is_its_own_unique_quotient(p in prop::sample::select(vec![2u64, 3, 5]), t in type_strategy()) {
        let g = GroupDesc::new(p, &t).unwrap();
        let c = counts(&to_index(&index_vector(&g)), &g).unwrap();
        prop_assert_eq!(c.kappa, BigInt::one());
        prop_assert_eq!(c.eps, aut_order(&g));
    }

    #[test]
    fn kappa_matches_subgroup_lattice(a in type_strategy(), g in type_strategy()) {
        let (a, g) = (GroupDesc::new(2, &a).unwrap(), GroupDesc::new(2, &g).unwrap());
        prop_assume!(a.order_log() <= 6);
        let brute = brute_quotient_count(&ExplicitGroup::new(&a, &Limits::oracle()).unwrap(), &g).unwrap();
        let kappa = counts(&to_index(&index_vector(&a)), &g).unwrap().kappa;
        prop_assert_eq!(kappa, BigInt::from(brute));
    }

    #[test]
    fn weight_polynomials_rescale_f(p in prop::sample::select(vec![2u64, 3]), t in type_strategy()) {
        let g = GroupDesc::new(p, &t).unwrap();
        prop_assume!(!g.is_trivial() && g.order_log() <= 6);
        let f = f_polynomial(&g).unwrap();
        prop_assert_eq!(&f, &f_factorized(&g));
        let aut = BigRational::new(BigInt::one(), aut_order(&g));
        let e = g.exponent() as usize;
        let pv = BigInt::from(p);
        let all_p = vec![pv.clone(); e];
        let mut first_p = vec![BigInt::one(); e];
        first_p[0] = pv;
        prop_assert_eq!(module_polynomial(&g).unwrap(), f.rescale_vars(&all_p).scale(&aut));
        prop_assert_eq!(e_polynomial(&g).unwrap(), f.rescale_vars(&first_p).scale(&aut));
    }
}
