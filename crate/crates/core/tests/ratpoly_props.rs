mod common;

use common::*;
use proptest::prelude::*;
use sepvar::{rational_kth_root, Rational, RationalPoly};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws(f in poly(5, 9), g in poly(5, 9), h in poly(5, 9)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(6, 9), g in poly(6, 9), r in small_rational(12)) {
        prop_assert_eq!((&f + &g).eval(&r), f.eval(&r) + g.eval(&r));
        prop_assert_eq!((&f - &g).eval(&r), f.eval(&r) - g.eval(&r));
        prop_assert_eq!((&f * &g).eval(&r), f.eval(&r) * g.eval(&r));
    }

    #[test]
    fn product_degree(f in poly_of_degree(0, 6, 9), g in poly_of_degree(0, 6, 9)) {
        prop_assert_eq!((&f * &g).degree(), Some(f.deg() + g.deg()));
    }

    #[test]
    fn compose_degree_and_eval(f in poly_of_degree(1, 5, 7), g in poly_of_degree(1, 4, 7), r in small_rational(6)) {
        let fg = f.compose(&g);
        prop_assert_eq!(fg.degree(), Some(f.deg() * g.deg()));
        prop_assert_eq!(fg.eval(&r), f.eval(&g.eval(&r)));
    }

    #[test]
    fn pow_matches_repeated_product(f in poly(3, 5), k in 0u32..7) {
        let mut expected = RationalPoly::one();
        for _ in 0..k {
            expected = &expected * &f;
        }
        prop_assert_eq!(f.pow(k), expected);
    }

    #[test]
    fn derivative_is_linear_and_leibniz(f in poly(6, 9), g in poly(6, 9)) {
        prop_assert_eq!((&f + &g).derivative(), &f.derivative() + &g.derivative());
        prop_assert_eq!(
            (&f * &g).derivative(),
            &(&f.derivative() * &g) + &(&f * &g.derivative())
        );
    }

    #[test]
    fn kth_root_of_a_power(t in small_rational(50), k in 1u32..9) {
        let r = num_traits::pow(t.clone(), k as usize);
        let roots = rational_kth_root(&r, k);
        for s in &roots {
            prop_assert_eq!(num_traits::pow(s.clone(), k as usize), r.clone());
        }
        if k % 2 == 1 || t == int(0) {
            prop_assert_eq!(roots, vec![t]);
        } else {
            prop_assert!(roots.contains(&t) && roots.contains(&-t.clone()));
            prop_assert_eq!(roots.len(), 2);
        }
    }

    #[test]
    fn kth_root_never_returns_wrong_values(r in small_rational(1000), k in 1u32..7) {
        for s in rational_kth_root(&r, k) {
            prop_assert_eq!(num_traits::pow(s, k as usize), r.clone());
        }
    }

    #[test]
    fn div_rem_identity(f in poly(8, 9), d in poly_of_degree(0, 4, 9)) {
        let (q, r) = f.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, f);
        prop_assert!(r.is_zero() || r.deg() < d.deg() || d.deg() == 0 && r.is_zero());
    }
}

#[test]
fn kth_root_rejects_non_powers() {
    assert!(rational_kth_root(&rat(2, 9), 2).is_empty());
    assert!(rational_kth_root(&rat(4, 3), 2).is_empty());
    assert!(rational_kth_root(&Rational::from_integer(16.into()), 3).is_empty());
}
