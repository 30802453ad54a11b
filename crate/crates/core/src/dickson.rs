//! Dickson polynomials `D_k(x, a)`, characterized by
//! `D_k(u + a/u, a) = u^k + (a/u)^k`.

use num_traits::Zero;
use thiserror::Error;

use crate::ratpoly::{rational_pow, Rational, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DicksonError {
    #[error("sample point {index} is zero")]
    ZeroSample { index: usize },
}

/// `D_k(x, a)` via `D_0 = 2`, `D_1 = x`, `D_k = x D_{k-1} - a D_{k-2}`.
pub fn dickson(k: u32, a: &Rational) -> RationalPoly {
    let two = RationalPoly::from_ints(&[2]);
    if k == 0 {
        return two;
    }
    let x = RationalPoly::x();
    let mut prev = two;
    let mut cur = x.clone();
    for _ in 1..k {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// True iff `poly(u + a/u) = u^k + (a/u)^k` at every sample `u`.
///
/// Takes the candidate polynomial explicitly so corrupted variants can be
/// checked against the same equation.
pub fn satisfies_functional_equation(
    poly: &RationalPoly,
    k: u32,
    a: &Rational,
    samples: &[Rational],
) -> Result<bool, DicksonError> {
    for (index, u) in samples.iter().enumerate() {
        if u.is_zero() {
            return Err(DicksonError::ZeroSample { index });
        }
        let a_over_u = a / u;
        let lhs = poly.eval(&(u + &a_over_u));
        let rhs = rational_pow(u, k.into()) + rational_pow(&a_over_u, k.into());
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check_functional_equation(
    k: u32,
    a: &Rational,
    samples: &[Rational],
) -> Result<bool, DicksonError> {
    satisfies_functional_equation(&dickson(k, a), k, a, samples)
}

/// Exact polynomial identity `D_{kl}(x, a) = D_k(D_l(x, a), a^l)`.
pub fn check_composition(k: u32, l: u32, a: &Rational) -> bool {
    let lhs = dickson(k * l, a);
    let rhs = dickson(k, &rational_pow(a, l.into())).compose(&dickson(l, a));
    lhs == rhs
}
