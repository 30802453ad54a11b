//! The decision rule for `G_n(x) = H_m(y)` and the solution generators
//! around it.
//!
//! Under the hypotheses (both sides of the required shape, `n, m > 2`, `G_n`
//! indecomposable) the equation has infinitely many rational solutions with
//! a bounded denominator iff `H_m = G_n ∘ P` for some `P ∈ Q[y]`. A `Finite`
//! verdict never comes with a list of solutions; [`brute_force_solutions`]
//! is only a bounded probe.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::compfactor::{comp_factor, CompFactorOutcome};
use crate::decompose::is_indecomposable;
use crate::powersum::{linear_power_form, PowerSumError, PowerSumSpec, PowerSumTerm};
use crate::ratpoly::{Rational, RationalPoly};

/// A named hypothesis of the decision rule that does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisFailure {
    /// `G` is not of the required shape; carries the failed check and detail.
    ShapeOfG { check: &'static str, detail: String },
    ShapeOfH { check: &'static str, detail: String },
    IndexN { n: u32 },
    IndexM { m: u32 },
    GDecomposable,
    /// The target polynomial `h` has degree at most 4.
    TargetDegree { degree: Option<usize> },
    /// The target polynomial has the shape `a (c y + d)^k + b`.
    TargetLinearPower { form: String },
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ShapeOfG { check, detail } => write!(f, "shape of G: {check} fails ({detail})"),
            Self::ShapeOfH { check, detail } => write!(f, "shape of H: {check} fails ({detail})"),
            Self::IndexN { n } => write!(f, "n > 2 fails (n = {n})"),
            Self::IndexM { m } => write!(f, "m > 2 fails (m = {m})"),
            Self::GDecomposable => f.write_str("G is decomposable"),
            Self::TargetDegree { degree } => match degree {
                Some(d) => write!(f, "deg h > 4 fails (deg h = {d})"),
                None => f.write_str("deg h > 4 fails (h = 0)"),
            },
            Self::TargetLinearPower { form } => {
                write!(f, "h has the shape a(cy+d)^k + b: h = {form}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Infinitely many solutions; `G ∘ witness = H`.
    Infinite(RationalPoly),
    Finite,
    HypothesisViolation(Vec<HypothesisFailure>),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Infinite(_) => "infinite",
            Self::Finite => "finite",
            Self::HypothesisViolation(_) => "hypothesis-violation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    /// How the composition search ended, when it ran.
    pub search: Option<CompFactorOutcome>,
    /// Whether the right-hand side is indecomposable, when it was checked.
    pub target_indecomposable: Option<bool>,
}

impl Decision {
    fn violation(reasons: Vec<HypothesisFailure>) -> Self {
        Self {
            verdict: Verdict::HypothesisViolation(reasons),
            search: None,
            target_indecomposable: None,
        }
    }

    pub fn witness(&self) -> Option<&RationalPoly> {
        match &self.verdict {
            Verdict::Infinite(p) => Some(p),
            _ => None,
        }
    }
}

fn shape_failures(
    spec: &PowerSumSpec,
    reasons: &mut Vec<HypothesisFailure>,
    make: fn(&'static str, String) -> HypothesisFailure,
) {
    let report = spec.validate_shape();
    for c in report.failures() {
        if c.check != crate::powersum::ShapeCheck::IndexAboveTwo {
            reasons.push(make(c.check.name(), c.detail.clone()));
        }
    }
}

fn g_hypotheses(g_spec: &PowerSumSpec, g: &RationalPoly, reasons: &mut Vec<HypothesisFailure>) {
    shape_failures(g_spec, reasons, |check, detail| HypothesisFailure::ShapeOfG { check, detail });
    if g_spec.n <= 2 {
        reasons.push(HypothesisFailure::IndexN { n: g_spec.n });
    }
    if g.deg() >= 2 && !is_indecomposable(g).expect("degree checked") {
        reasons.push(HypothesisFailure::GDecomposable);
    }
}

fn run_search(g: &RationalPoly, h: &RationalPoly) -> Decision {
    let outcome = comp_factor(g, h).expect("hypotheses guarantee nonconstant inputs");
    let target_indecomposable = is_indecomposable(h).ok();
    let verdict = match &outcome {
        CompFactorOutcome::Found(p) => {
            if target_indecomposable == Some(true) {
                assert_eq!(p.deg(), 1, "indecomposable H forces a linear witness");
            }
            Verdict::Infinite(p.clone())
        }
        _ => Verdict::Finite,
    };
    Decision {
        verdict,
        search: Some(outcome),
        target_indecomposable,
    }
}

/// Decides `G_n(x) = H_m(y)` for two power sums.
pub fn decide_infinite(g_spec: &PowerSumSpec, h_spec: &PowerSumSpec) -> Decision {
    let g = g_spec.expand();
    let h = h_spec.expand();
    let mut reasons = Vec::new();
    g_hypotheses(g_spec, &g, &mut reasons);
    shape_failures(h_spec, &mut reasons, |check, detail| HypothesisFailure::ShapeOfH { check, detail });
    if h_spec.n <= 2 {
        reasons.push(HypothesisFailure::IndexM { m: h_spec.n });
    }
    if !reasons.is_empty() {
        return Decision::violation(reasons);
    }
    run_search(&g, &h)
}

/// Decides `G_n(x) = h(y)` for a fixed polynomial `h` with `deg h > 4` that
/// is not of the shape `a (c y + d)^k + b`.
pub fn decide_vs_polynomial(g_spec: &PowerSumSpec, h: &RationalPoly) -> Decision {
    let g = g_spec.expand();
    let mut reasons = Vec::new();
    g_hypotheses(g_spec, &g, &mut reasons);
    if h.degree().is_none_or(|d| d <= 4) {
        reasons.push(HypothesisFailure::TargetDegree { degree: h.degree() });
    }
    match linear_power_form(h) {
        Ok(Some(form)) => reasons.push(HypothesisFailure::TargetLinearPower {
            form: form.to_string(),
        }),
        Err(PowerSumError::ConstantInput) => reasons.push(HypothesisFailure::TargetLinearPower {
            form: h.to_string(),
        }),
        _ => {}
    }
    if !reasons.is_empty() {
        return Decision::violation(reasons);
    }
    run_search(&g, h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionPair {
    pub x: Rational,
    pub y: Rational,
    /// Positive `z` with `z x` and `z y` integral.
    pub denominator_witness: BigInt,
}

impl SolutionPair {
    pub fn satisfies(&self, f: &RationalPoly, g: &RationalPoly) -> bool {
        f.eval(&self.x) == g.eval(&self.y)
    }

    pub fn clears(&self) -> bool {
        let z = Rational::from_integer(self.denominator_witness.clone());
        (&self.x * &z).is_integer() && (&self.y * &z).is_integer()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("parameter {name} must be nonzero")]
    ZeroParameter { name: &'static str },
    #[error("denominator bound must be positive")]
    NonPositiveDenominator,
    #[error("pair at t = {t} does not clear denominator {z}")]
    DenominatorNotCleared { t: String, z: BigInt },
    #[error("equation fails at t = {t}")]
    EquationFails { t: String },
}

/// The family `a(ex+c)^n + b = a(fy+d)^m + b` excluded from the decision rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedFamily {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub n: u32,
    pub m: u32,
}

impl ExcludedFamily {
    fn check(&self) -> Result<(), SolutionError> {
        for (name, v) in [("a", &self.a), ("e", &self.e), ("f", &self.f)] {
            if v.is_zero() {
                return Err(SolutionError::ZeroParameter { name });
            }
        }
        Ok(())
    }

    fn side(a: &Rational, b: &Rational, slope: &Rational, shift: &Rational, k: u32) -> RationalPoly {
        let lin = RationalPoly::linear(slope.clone(), shift.clone());
        &lin.pow(k).scale(a) + &RationalPoly::constant(b.clone())
    }

    /// `a (e x + c)^n + b` as a polynomial.
    pub fn lhs(&self) -> RationalPoly {
        Self::side(&self.a, &self.b, &self.e, &self.c, self.n)
    }

    /// `a (f y + d)^m + b` as a polynomial.
    pub fn rhs(&self) -> RationalPoly {
        Self::side(&self.a, &self.b, &self.f, &self.d, self.m)
    }

    fn spec(&self, slope: &Rational, shift: &Rational, k: u32, var: &str) -> PowerSumSpec {
        let mut terms = vec![PowerSumTerm::new(
            RationalPoly::linear(slope.clone(), shift.clone()),
            self.a.clone(),
        )];
        if !self.b.is_zero() {
            terms.push(PowerSumTerm::new(RationalPoly::one(), self.b.clone()));
        }
        PowerSumSpec::new(k, terms)
            .expect("nonzero parameters give a valid spec")
            .with_var(var)
    }

    /// The left side as a two-term power sum (one term when `b = 0`).
    pub fn g_spec(&self) -> Result<PowerSumSpec, SolutionError> {
        self.check()?;
        Ok(self.spec(&self.e, &self.c, self.n, "x"))
    }

    pub fn h_spec(&self) -> Result<PowerSumSpec, SolutionError> {
        self.check()?;
        Ok(self.spec(&self.f, &self.d, self.m, "y"))
    }
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Points `x = (t^m - c)/e`, `y = (t^n - d)/f`, each checked exactly.
pub fn excluded_family_solutions(
    family: &ExcludedFamily,
    t_values: &[BigInt],
) -> Result<Vec<SolutionPair>, SolutionError> {
    family.check()?;
    let lhs = family.lhs();
    let rhs = family.rhs();
    let mut points = Vec::with_capacity(t_values.len());
    for t in t_values {
        let t_rat = Rational::from_integer(t.clone());
        let x = (num_traits::pow(t_rat.clone(), family.m as usize) - &family.c) / &family.e;
        let y = (num_traits::pow(t_rat, family.n as usize) - &family.d) / &family.f;
        if lhs.eval(&x) != rhs.eval(&y) {
            return Err(SolutionError::EquationFails { t: t.to_string() });
        }
        points.push((x, y));
    }
    let z = lcm_of_denominators(points.iter().flat_map(|(x, y)| [x, y]));
    Ok(points
        .into_iter()
        .map(|(x, y)| SolutionPair {
            x,
            y,
            denominator_witness: z.clone(),
        })
        .collect())
}

/// Pairs `(P(t), t)`, which solve `G(x) = (G ∘ P)(y)`. Each must clear `z`.
pub fn solution_family(
    p: &RationalPoly,
    t_values: &[Rational],
    z: &BigInt,
) -> Result<Vec<SolutionPair>, SolutionError> {
    if !z.is_positive() {
        return Err(SolutionError::NonPositiveDenominator);
    }
    t_values
        .iter()
        .map(|t| {
            let pair = SolutionPair {
                x: p.eval(t),
                y: t.clone(),
                denominator_witness: z.clone(),
            };
            if pair.clears() {
                Ok(pair)
            } else {
                Err(SolutionError::DenominatorNotCleared {
                    t: crate::ratpoly::format_rational(t),
                    z: z.clone(),
                })
            }
        })
        .collect()
}

/// All `(p/z, q/z)` with `|p|, |q| <= bound` and `f(p/z) = g(q/z)`, sorted
/// by `(p, q)`. A bounded probe, not a proof of finiteness.
pub fn brute_force_solutions(
    f: &RationalPoly,
    g: &RationalPoly,
    z: &BigInt,
    bound: u64,
) -> Result<Vec<SolutionPair>, SolutionError> {
    if !z.is_positive() {
        return Err(SolutionError::NonPositiveDenominator);
    }
    let bound = i64::try_from(bound).unwrap_or(i64::MAX);
    let scaled = |k: i64| Rational::new(BigInt::from(k), z.clone());

    let mut by_value: HashMap<Rational, Vec<i64>> = HashMap::new();
    for q in -bound..=bound {
        by_value.entry(g.eval(&scaled(q))).or_default().push(q);
    }
    let mut out = Vec::new();
    for p in -bound..=bound {
        let x = scaled(p);
        if let Some(qs) = by_value.get(&f.eval(&x)) {
            for &q in qs {
                out.push(SolutionPair {
                    x: x.clone(),
                    y: scaled(q),
                    denominator_witness: z.clone(),
                });
            }
        }
    }
    // p ascending from the outer loop; q ascending from the table
    Ok(out)
}
