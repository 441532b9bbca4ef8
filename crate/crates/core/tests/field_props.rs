use asw_core::field_model::{euler_product_zeta, zeta_series, Poly, PolyRing, ResidueRing};
use proptest::prelude::*;

#[test]
fn euler_product_equals_zeta() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        assert_eq!(euler_product_zeta(q, 30), zeta_series(q, 30), "q = {q}");
    }
}

#[test]
fn residue_units_of_prime_powers() {
    for q in [2u64, 3, 4] {
        let ring = PolyRing::new(q).unwrap();
        for pi in ring.monic_irreducibles(2) {
            for m in 1..=3 {
                let rr = ResidueRing::new(ring.clone(), ring.pow(&pi, m)).unwrap();
                let n = q * q;
                assert_eq!(rr.units().len() as u64, n.pow(m - 1) * (n - 1));
            }
        }
    }
}

fn poly_strategy(q: u64, max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..q as u32, 0..=max_len).prop_map(Poly::from_coeffs)
}

proptest! {
    #[test]
    fn division_reconstructs(
        q in prop::sample::select(vec![2u64, 3, 4, 5, 9]),
        seed in any::<(u64, u64)>(),
    ) {
        let ring = PolyRing::new(q).unwrap();
        let a = Poly::from_index(seed.0 % q.pow(7), q);
        let b = Poly::from_index(1 + seed.1 % (q.pow(4) - 1), q);
        let (quo, rem) = ring.divmod(&a, &b);
        prop_assert_eq!(ring.add(&ring.mul(&quo, &b), &rem), a.clone());
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
        let g = ring.gcd(&a, &b);
        prop_assert!(ring.rem(&a, &g).is_zero() && ring.rem(&b, &g).is_zero());
    }

    #[test]
    fn products_are_reducible(a in poly_strategy(3, 4), b in poly_strategy(3, 4)) {
        prop_assume!(a.degree().unwrap_or(0) >= 1 && b.degree().unwrap_or(0) >= 1);
        let ring = PolyRing::new(3).unwrap();
        prop_assert!(!ring.is_irreducible(&ring.mul(&a, &b)));
    }
}
