//! Solving `H = G ∘ P` for `P` by comparing coefficients from the top down.
//!
//! With `r = deg H / deg G` and leading coefficient `s` of `P`, adding
//! `p_{r-j} x^{r-j}` to a partial `P` changes the coefficient of
//! `x^{deg H - j}` in `G ∘ P` by `deg G · lc(G) · s^{deg G - 1} · p_{r-j}` and
//! leaves every higher coefficient alone. Each unknown is therefore fixed by
//! one linear equation, and a final exact check decides the branch.

use num_bigint::BigInt;
use thiserror::Error;

use crate::ratpoly::{rational_kth_root, rational_pow, Rational, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompFactorOutcome {
    /// `G ∘ P = H` exactly.
    Found(RationalPoly),
    /// `deg G` does not divide `deg H`.
    NoDegree,
    /// `lc(H) / lc(G)` has no rational `deg G`-th root.
    NoLeadingRoot,
    /// Every leading-coefficient branch failed the final comparison.
    CoefficientContradiction,
}

impl CompFactorOutcome {
    pub fn found(&self) -> Option<&RationalPoly> {
        match self {
            Self::Found(p) => Some(p),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Found(_) => "found",
            Self::NoDegree => "no-degree",
            Self::NoLeadingRoot => "no-leading-root",
            Self::CoefficientContradiction => "coefficient-contradiction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompFactorError {
    #[error("{which} polynomial must be nonconstant")]
    Constant { which: &'static str },
}

/// Finds `P` with `outer ∘ P = target`, preferring the positive leading
/// coefficient when `deg outer` is even and both signs work.
pub fn comp_factor(
    outer: &RationalPoly,
    target: &RationalPoly,
) -> Result<CompFactorOutcome, CompFactorError> {
    let deg_g = match outer.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(CompFactorError::Constant { which: "outer" }),
    };
    let deg_h = match target.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(CompFactorError::Constant { which: "target" }),
    };
    if deg_h % deg_g != 0 {
        return Ok(CompFactorOutcome::NoDegree);
    }
    let r = deg_h / deg_g;
    let k = u32::try_from(deg_g).expect("degree fits in u32");

    let lc_ratio = target.leading_coeff() / outer.leading_coeff();
    let roots = rational_kth_root(&lc_ratio, k);
    if roots.is_empty() {
        return Ok(CompFactorOutcome::NoLeadingRoot);
    }

    for s in roots {
        if let Some(p) = solve_branch(outer, target, deg_g, r, s) {
            return Ok(CompFactorOutcome::Found(p));
        }
    }
    Ok(CompFactorOutcome::CoefficientContradiction)
}

fn solve_branch(
    outer: &RationalPoly,
    target: &RationalPoly,
    deg_g: usize,
    r: usize,
    s: Rational,
) -> Option<RationalPoly> {
    let deg_h = deg_g * r;
    let multiplier = Rational::from_integer(BigInt::from(deg_g))
        * outer.leading_coeff()
        * rational_pow(&s, deg_g as i64 - 1);

    let mut coeffs = vec![Rational::default(); r + 1];
    coeffs[r] = s;
    for j in 1..=r {
        let partial = outer.compose(&RationalPoly::new(coeffs.clone()));
        let gap = target.coeff(deg_h - j) - partial.coeff(deg_h - j);
        coeffs[r - j] = gap / &multiplier;
    }
    let p = RationalPoly::new(coeffs);
    (outer.compose(&p) == *target).then_some(p)
}
