//! Polynomial power sums `a_1 α_1(x)^n + ... + a_d α_d(x)^n` and the
//! hypothesis bundle ("required shape") the decision procedure relies on.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ratpoly::{Rational, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowerSumError {
    #[error("index n must be at least 1")]
    IndexTooSmall,
    #[error("a power sum needs at least one characteristic root")]
    NoTerms,
    #[error("coefficient of root {index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("root {index} is the zero polynomial")]
    ZeroRoot { index: usize },
    #[error("roots {first} and {second} are equal")]
    DuplicateRoot { first: usize, second: usize },
    #[error("polynomial is constant")]
    ConstantInput,
}

/// One summand `coeff * root^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumTerm {
    pub root: RationalPoly,
    pub coeff: Rational,
}

impl PowerSumTerm {
    pub fn new(root: RationalPoly, coeff: Rational) -> Self {
        Self { root, coeff }
    }
}

/// The `n`-th element of a simple linear recurrence of polynomials, kept in
/// Binet form. Roots are pairwise distinct and nonzero, coefficients nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumSpec {
    pub n: u32,
    pub terms: Vec<PowerSumTerm>,
    /// Variable name from the source text; cosmetic only.
    pub var: Option<String>,
}

impl PowerSumSpec {
    pub fn new(n: u32, terms: Vec<PowerSumTerm>) -> Result<Self, PowerSumError> {
        if n < 1 {
            return Err(PowerSumError::IndexTooSmall);
        }
        if terms.is_empty() {
            return Err(PowerSumError::NoTerms);
        }
        for (i, t) in terms.iter().enumerate() {
            if t.coeff.is_zero() {
                return Err(PowerSumError::ZeroCoefficient { index: i });
            }
            if t.root.is_zero() {
                return Err(PowerSumError::ZeroRoot { index: i });
            }
            if let Some(j) = terms[..i].iter().position(|s| s.root == t.root) {
                return Err(PowerSumError::DuplicateRoot { first: j, second: i });
            }
        }
        Ok(Self {
            n,
            terms,
            var: None,
        })
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = Some(var.into());
        self
    }

    /// Number of characteristic roots.
    pub fn d(&self) -> usize {
        self.terms.len()
    }

    /// `Σ a_i α_i^n` as an explicit polynomial.
    pub fn expand(&self) -> RationalPoly {
        self.terms.iter().fold(RationalPoly::zero(), |acc, t| {
            &acc + &t.root.pow(self.n).scale(&t.coeff)
        })
    }

    /// The unique root of strictly maximal degree, if there is one.
    pub fn dominant_root(&self) -> Option<&PowerSumTerm> {
        let max = self.terms.iter().map(|t| t.root.deg()).max()?;
        let mut at_max = self.terms.iter().filter(|t| t.root.deg() == max);
        let first = at_max.next();
        if at_max.next().is_some() {
            None
        } else {
            first
        }
    }

    pub fn validate_shape(&self) -> ShapeReport {
        validate_shape(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeCheck {
    /// At least two characteristic roots.
    AtLeastTwoRoots,
    /// A unique root of strictly maximal degree.
    DominantRoot,
    AtMostOneConstantRoot,
    /// The expansion is not `ã₁ L(x)^{kn} + ã₂` with `L` linear.
    NotForbiddenBinomial,
    /// `n > 2`.
    IndexAboveTwo,
    /// Consequence of the first four checks: the dominant root has degree at least 2.
    DominantDegreeAtLeastTwo,
}

impl ShapeCheck {
    pub fn name(self) -> &'static str {
        match self {
            ShapeCheck::AtLeastTwoRoots => "d>=2",
            ShapeCheck::DominantRoot => "dominant-root",
            ShapeCheck::AtMostOneConstantRoot => "at-most-one-constant-root",
            ShapeCheck::NotForbiddenBinomial => "not-forbidden-binomial",
            ShapeCheck::IndexAboveTwo => "n>2",
            ShapeCheck::DominantDegreeAtLeastTwo => "dominant-degree>=2",
        }
    }
}

impl fmt::Display for ShapeCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not evaluated because a check it depends on failed.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: ShapeCheck,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub ok: bool,
    pub checks: Vec<CheckOutcome>,
    /// Degree of the dominant root, when one exists.
    pub dominant_degree: Option<usize>,
}

impl ShapeReport {
    pub fn status(&self, check: ShapeCheck) -> CheckStatus {
        self.checks
            .iter()
            .find(|c| c.check == check)
            .map(|c| c.status)
            .expect("every check is reported")
    }

    pub fn passed(&self, check: ShapeCheck) -> bool {
        self.status(check) == CheckStatus::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// True when everything except the `n > 2` index check passes.
    pub fn shape_ok(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.check != ShapeCheck::IndexAboveTwo)
            .all(|c| c.status == CheckStatus::Pass)
    }
}

pub fn validate_shape(spec: &PowerSumSpec) -> ShapeReport {
    let mut checks = Vec::with_capacity(6);
    let mut push = |check, pass: bool, detail: String| {
        checks.push(CheckOutcome {
            check,
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        });
    };

    let d = spec.d();
    push(ShapeCheck::AtLeastTwoRoots, d >= 2, format!("d = {d}"));

    let dominant = spec.dominant_root();
    let dominant_degree = dominant.map(|t| t.root.deg());
    match dominant_degree {
        Some(deg) => push(
            ShapeCheck::DominantRoot,
            true,
            format!("dominant root has degree {deg}"),
        ),
        None => {
            let max = spec.terms.iter().map(|t| t.root.deg()).max().unwrap_or(0);
            push(
                ShapeCheck::DominantRoot,
                false,
                format!("several roots share the maximal degree {max}"),
            )
        }
    }

    let constants = spec.terms.iter().filter(|t| t.root.is_constant()).count();
    push(
        ShapeCheck::AtMostOneConstantRoot,
        constants <= 1,
        format!("{constants} constant root(s)"),
    );

    let expanded = spec.expand();
    if expanded.is_constant() {
        push(
            ShapeCheck::NotForbiddenBinomial,
            false,
            "expansion is constant".to_string(),
        );
    } else {
        match linear_power_form(&expanded).expect("nonconstant input") {
            Some(form) if form.exponent % spec.n == 0 => push(
                ShapeCheck::NotForbiddenBinomial,
                false,
                format!("expansion equals {form} with {} divisible by n = {}", form.exponent, spec.n),
            ),
            _ => push(
                ShapeCheck::NotForbiddenBinomial,
                true,
                "expansion is not a shifted power of a linear polynomial".to_string(),
            ),
        }
    }

    push(ShapeCheck::IndexAboveTwo, spec.n > 2, format!("n = {}", spec.n));

    let premises_hold = checks
        .iter()
        .filter(|c| c.check != ShapeCheck::IndexAboveTwo)
        .all(|c| c.status == CheckStatus::Pass);
    let derived = if premises_hold {
        let deg = dominant_degree.expect("dominant root check passed");
        CheckOutcome {
            check: ShapeCheck::DominantDegreeAtLeastTwo,
            status: if deg >= 2 { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("deg α₁ = {deg}"),
        }
    } else {
        CheckOutcome {
            check: ShapeCheck::DominantDegreeAtLeastTwo,
            status: CheckStatus::Skipped,
            detail: "not evaluated: an earlier shape check failed".to_string(),
        }
    };
    checks.push(derived);

    let ok = checks.iter().all(|c| c.status == CheckStatus::Pass);
    ShapeReport {
        ok,
        checks,
        dominant_degree,
    }
}

/// `a (c x + d)^N + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPowerForm {
    pub a: Rational,
    pub c: Rational,
    pub d: Rational,
    pub exponent: u32,
    pub b: Rational,
}

impl LinearPowerForm {
    pub fn to_poly(&self) -> RationalPoly {
        let inner = RationalPoly::linear(self.c.clone(), self.d.clone());
        &inner.pow(self.exponent).scale(&self.a) + &RationalPoly::constant(self.b.clone())
    }
}

impl fmt::Display for LinearPowerForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = RationalPoly::linear(self.c.clone(), self.d.clone());
        write!(
            f,
            "{}*({})^{}",
            crate::ratpoly::format_rational(&self.a),
            inner,
            self.exponent
        )?;
        if self.b.is_negative() {
            write!(f, " - {}", crate::ratpoly::format_rational(&-&self.b))
        } else if !self.b.is_zero() {
            write!(f, " + {}", crate::ratpoly::format_rational(&self.b))
        } else {
            Ok(())
        }
    }
}

/// Writes `f` as `a (x + d)^N + b` with `N = deg f` when possible.
///
/// The normalization `c = 1` fixes the form uniquely. The test is that `f′`
/// must be `lc(f′) (x − r)^{N−1}`, where `r` is read off the subleading
/// coefficient of the monic derivative.
pub fn linear_power_form(f: &RationalPoly) -> Result<Option<LinearPowerForm>, PowerSumError> {
    let Some(n) = f.degree().filter(|&n| n >= 1) else {
        return Err(PowerSumError::ConstantInput);
    };
    let exponent = u32::try_from(n).expect("degree fits in u32");
    if n == 1 {
        return Ok(Some(LinearPowerForm {
            a: f.leading_coeff(),
            c: Rational::one(),
            d: Rational::zero(),
            exponent: 1,
            b: f.constant_term(),
        }));
    }
    let df = f.derivative();
    let monic = df.monic();
    let r = -monic.coeff(n - 2) / Rational::from_integer((n - 1).into());
    let shifted = RationalPoly::linear(Rational::one(), -r.clone());
    if shifted.pow(exponent - 1).scale(&df.leading_coeff()) != df {
        return Ok(None);
    }
    let form = LinearPowerForm {
        a: f.leading_coeff(),
        c: Rational::one(),
        d: -r.clone(),
        exponent,
        b: f.eval(&r),
    };
    Ok((form.to_poly() == *f).then_some(form))
}
