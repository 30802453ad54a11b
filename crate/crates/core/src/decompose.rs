//! Functional decomposition `f = g ∘ h` over Q.
//!
//! Right factors are normalized to be monic with zero constant term, which
//! makes the right factor of a given degree unique in characteristic zero.
//! The candidate is read off the top coefficients of `f` (the polynomial
//! part of its formal `e`-th root) and confirmed by an h-adic expansion.

use num_traits::Zero;
use thiserror::Error;

use crate::ratpoly::{Rational, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("polynomial must have degree at least {min}, got {degree:?}")]
    DegreeTooSmall { min: usize, degree: Option<usize> },
    #[error("inner degree {inner} must satisfy 2 <= {inner} < {total} and divide {total}")]
    BadInnerDegree { inner: usize, total: usize },
}

/// `outer ∘ inner`, with `inner` monic and `inner(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub outer: RationalPoly,
    pub inner: RationalPoly,
}

impl Decomposition {
    pub fn compose(&self) -> RationalPoly {
        self.outer.compose(&self.inner)
    }
}

/// Monic degree-`d` right factor of `f` with zero constant term, if any.
pub fn right_factor(f: &RationalPoly, d: usize) -> Result<Option<RationalPoly>, DecomposeError> {
    let total = match f.degree() {
        Some(n) if n >= 1 => n,
        degree => return Err(DecomposeError::DegreeTooSmall { min: 1, degree }),
    };
    if d < 2 || d >= total || total % d != 0 {
        return Err(DecomposeError::BadInnerDegree { inner: d, total });
    }
    let e = u32::try_from(total / d).expect("degree fits in u32");
    let target = f.monic();
    let e_rat = Rational::from_integer(e.into());

    // h = x^d + h_{d-1} x^{d-1} + ... + h_1 x. The coefficient of x^{total-j}
    // in h^e is e*h_{d-j} plus terms in the already known h_{d-1..d-j+1}.
    let mut coeffs = vec![Rational::zero(); d + 1];
    coeffs[d] = Rational::from_integer(1.into());
    for j in 1..d {
        let partial = RationalPoly::new(coeffs.clone()).pow(e);
        let gap = target.coeff(total - j) - partial.coeff(total - j);
        coeffs[d - j] = gap / &e_rat;
    }
    let h = RationalPoly::new(coeffs);
    Ok(left_factor(f, &h).map(|_| h))
}

/// `g` with `f = g ∘ h`, found by the h-adic expansion `f = Σ r_i h^i`.
///
/// Returns `None` unless every remainder `r_i` is a constant.
pub fn left_factor(f: &RationalPoly, h: &RationalPoly) -> Option<RationalPoly> {
    if h.degree().is_none_or(|d| d < 1) {
        return None;
    }
    let mut digits = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(h).expect("h is nonzero");
        if !r.is_constant() {
            return None;
        }
        digits.push(r.constant_term());
        rest = q;
    }
    Some(RationalPoly::new(digits))
}

/// First decomposition found, trying inner degrees in increasing order.
/// `None` means `f` is indecomposable.
pub fn decompose_once(f: &RationalPoly) -> Result<Option<Decomposition>, DecomposeError> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        degree => return Err(DecomposeError::DegreeTooSmall { min: 2, degree }),
    };
    for d in (2..n).filter(|d| n % d == 0) {
        if let Some(inner) = right_factor(f, d)? {
            let outer = left_factor(f, &inner).expect("right_factor verified the expansion");
            return Ok(Some(Decomposition { outer, inner }));
        }
    }
    Ok(None)
}

pub fn is_indecomposable(f: &RationalPoly) -> Result<bool, DecomposeError> {
    decompose_once(f).map(|d| d.is_none())
}
