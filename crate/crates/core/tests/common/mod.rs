#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use sepvar::{Rational, RationalPoly};

pub fn p(c: &[i64]) -> RationalPoly {
    RationalPoly::from_ints(c)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn g3_poly() -> RationalPoly {
    p(&[1, 3, 3, 1, 0, 0, 1])
}

pub fn h3_poly() -> RationalPoly {
    p(&[1, 0, -6, 0, 15, 0, -19, 0, 15, 0, -6, 0, 1])
}

pub const G3_SRC: &str = "n=3; 1*(x^2); 1*(x+1)";
pub const H3_SRC: &str = "n=3; 1*(y^4-2*y^2+1); 1*(y^2)";
pub const H7_SRC: &str = "n=7; 1*(y^2); 1*(y+2)";

/// Rational with numerator and denominator magnitudes at most `bound`.
pub fn small_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (1..=bound, 1..=bound, any::<bool>())
        .prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

/// Polynomial of degree at most `max_deg` (possibly zero).
pub fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec(small_rational(bound), 0..=max_deg + 1).prop_map(RationalPoly::new)
}

/// Polynomial of exact degree in `min_deg..=max_deg`.
pub fn poly_of_degree(min_deg: usize, max_deg: usize, bound: i64) -> impl Strategy<Value = RationalPoly> {
    (min_deg..=max_deg)
        .prop_flat_map(move |d| {
            (
                prop::collection::vec(small_rational(bound), d),
                nonzero_rational(bound),
            )
        })
        .prop_map(|(mut lower, lead)| {
            lower.push(lead);
            RationalPoly::new(lower)
        })
}

pub fn rand_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn rand_nonzero<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = rand_rational(rng, bound);
        if r != int(0) {
            return r;
        }
    }
}

/// Random polynomial of exact degree `deg`.
pub fn rand_poly<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> RationalPoly {
    let mut coeffs: Vec<_> = (0..deg).map(|_| rand_rational(rng, bound)).collect();
    coeffs.push(rand_nonzero(rng, bound));
    RationalPoly::new(coeffs)
}
