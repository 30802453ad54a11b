//! The five kinds of standard pairs over Q, and a checker for
//! factorizations `f = φ ∘ f₁ ∘ λ` with `λ` linear.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::dickson::dickson;
use crate::ratpoly::{int, rational_pow, Rational, RationalPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardPairKind {
    First,
    Second,
    Third,
    Fourth,
    Fifth,
}

impl StandardPairKind {
    pub fn from_index(i: u8) -> Option<Self> {
        Some(match i {
            1 => Self::First,
            2 => Self::Second,
            3 => Self::Third,
            4 => Self::Fourth,
            5 => Self::Fifth,
            _ => return None,
        })
    }

    pub fn index(self) -> u8 {
        match self {
            Self::First => 1,
            Self::Second => 2,
            Self::Third => 3,
            Self::Fourth => 4,
            Self::Fifth => 5,
        }
    }
}

impl fmt::Display for StandardPairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::First => "first",
            Self::Second => "second",
            Self::Third => "third",
            Self::Fourth => "fourth",
            Self::Fifth => "fifth",
        };
        write!(f, "{name} kind")
    }
}

/// Kind-specific parameters. `k`, `l` are positive except that kind one
/// allows `l = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairParams {
    /// `(x^k, a x^l p(x)^k)`
    First { k: u32, l: u32, a: Rational, p: RationalPoly },
    /// `(x^2, (a x^2 + b) p(x)^2)`
    Second { a: Rational, b: Rational, p: RationalPoly },
    /// `(D_k(x, a^l), D_l(x, a^k))`
    Third { k: u32, l: u32, a: Rational },
    /// `(a^{-k/2} D_k(x, a), -b^{-l/2} D_l(x, b))`
    Fourth { k: u32, l: u32, a: Rational, b: Rational },
    /// `((a x^2 - 1)^3, 3x^4 - 4x^3)`
    Fifth { a: Rational },
}

impl PairParams {
    pub fn kind(&self) -> StandardPairKind {
        match self {
            Self::First { .. } => StandardPairKind::First,
            Self::Second { .. } => StandardPairKind::Second,
            Self::Third { .. } => StandardPairKind::Third,
            Self::Fourth { .. } => StandardPairKind::Fourth,
            Self::Fifth { .. } => StandardPairKind::Fifth,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StdPairError {
    #[error("{kind}: side condition violated: {condition}")]
    SideCondition {
        kind: StandardPairKind,
        condition: &'static str,
    },
    #[error("inner polynomial must be linear, got degree {degree:?}")]
    NotLinear { degree: Option<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPair {
    pub params: PairParams,
    pub f1: RationalPoly,
    pub g1: RationalPoly,
    /// `(f1, g1)` are exchanged relative to the canonical order.
    pub swapped: bool,
}

impl StandardPair {
    pub fn kind(&self) -> StandardPairKind {
        self.params.kind()
    }

    /// Rebuilds the realized polynomials from the stored parameters.
    pub fn rederive(&self) -> Result<(RationalPoly, RationalPoly), StdPairError> {
        let pair = make_standard_pair(self.params.clone(), self.swapped)?;
        Ok((pair.f1, pair.g1))
    }
}

fn require(kind: StandardPairKind, ok: bool, condition: &'static str) -> Result<(), StdPairError> {
    if ok {
        Ok(())
    } else {
        Err(StdPairError::SideCondition { kind, condition })
    }
}

fn x_pow(k: u32) -> RationalPoly {
    RationalPoly::monomial(int(1), k as usize)
}

/// Checks the side conditions of `params` and realizes the pair.
pub fn make_standard_pair(params: PairParams, swapped: bool) -> Result<StandardPair, StdPairError> {
    let kind = params.kind();
    let (f1, g1) = match &params {
        PairParams::First { k, l, a, p } => {
            require(kind, *k >= 1, "k >= 1")?;
            require(kind, l < k, "0 <= l < k")?;
            require(kind, k.gcd(l) == 1, "gcd(k, l) = 1")?;
            require(kind, !a.is_zero(), "a != 0")?;
            require(kind, !p.is_zero(), "p != 0")?;
            require(kind, *l as usize + p.deg() > 0, "l + deg p > 0")?;
            (x_pow(*k), (&x_pow(*l) * &p.pow(*k)).scale(a))
        }
        PairParams::Second { a, b, p } => {
            require(kind, !a.is_zero(), "a != 0")?;
            require(kind, !b.is_zero(), "b != 0")?;
            require(kind, !p.is_zero(), "p != 0")?;
            let quad = RationalPoly::new(vec![b.clone(), Rational::zero(), a.clone()]);
            (x_pow(2), &quad * &p.pow(2))
        }
        PairParams::Third { k, l, a } => {
            require(kind, *k >= 1 && *l >= 1, "k, l >= 1")?;
            require(kind, k.gcd(l) == 1, "gcd(k, l) = 1")?;
            require(kind, !a.is_zero(), "a != 0")?;
            (
                dickson(*k, &rational_pow(a, (*l).into())),
                dickson(*l, &rational_pow(a, (*k).into())),
            )
        }
        PairParams::Fourth { k, l, a, b } => {
            require(kind, *k >= 1 && *l >= 1, "k, l >= 1")?;
            require(kind, k.gcd(l) == 2, "gcd(k, l) = 2")?;
            require(kind, !a.is_zero(), "a != 0")?;
            require(kind, !b.is_zero(), "b != 0")?;
            // k and l are even here, so both scalings stay in Q.
            let fa = rational_pow(a, -i64::from(k / 2));
            let gb = -rational_pow(b, -i64::from(l / 2));
            (dickson(*k, a).scale(&fa), dickson(*l, b).scale(&gb))
        }
        PairParams::Fifth { a } => {
            require(kind, !a.is_zero(), "a != 0")?;
            let inner = RationalPoly::new(vec![int(-1), Rational::zero(), a.clone()]);
            (inner.pow(3), RationalPoly::from_ints(&[0, 0, 0, -4, 3]))
        }
    };
    let (f1, g1) = if swapped { (g1, f1) } else { (f1, g1) };
    Ok(StandardPair {
        params,
        f1,
        g1,
        swapped,
    })
}

/// True iff `f = phi ∘ f1 ∘ lam` exactly. `lam` must have degree 1.
pub fn verify_bt_factorization(
    f: &RationalPoly,
    phi: &RationalPoly,
    f1: &RationalPoly,
    lam: &RationalPoly,
) -> Result<bool, StdPairError> {
    if lam.degree() != Some(1) {
        return Err(StdPairError::NotLinear {
            degree: lam.degree(),
        });
    }
    Ok(phi.compose(&f1.compose(lam)) == *f)
}
