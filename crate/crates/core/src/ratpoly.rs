//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending order of degree, `coeffs[i]` being
//! the coefficient of `x^i`. Trailing zeros are never stored, so the zero
//! polynomial is the empty vector and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut poly = Self { coeffs };
        poly.normalize();
        poly
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: Rational, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self { coeffs }
    }

    /// `c1 * x + c0`
    pub fn linear(c1: Rational, c0: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = 0, for places where the zero
    /// polynomial is already excluded or irrelevant.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// `self^k` by repeated squaring; `f^0 = 1`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self ∘ inner`, evaluated by Horner's rule over polynomials.
    pub fn compose(&self, inner: &RationalPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc = acc.add_constant(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value at `r` by Horner evaluation.
    pub fn eval(&self, r: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    fn add_constant(mut self, c: &Rational) -> Self {
        if self.coeffs.is_empty() {
            return Self::constant(c.clone());
        }
        self.coeffs[0] += c;
        self.normalize();
        self
    }

    /// Euclidean division, returning `(quotient, remainder)` with
    /// `deg remainder < deg divisor`. `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &RationalPoly) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Some((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = &rem[i + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({})", crate::parse::format_poly(self))
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_poly(self))
    }
}

impl<'a> Add<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &'a RationalPoly) -> RationalPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        RationalPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &'a RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RationalPoly::new(coeffs)
    }
}

impl<'a> Mul<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &'a RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPoly::new(coeffs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: &'a RationalPoly) -> RationalPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        -&self
    }
}

/// Exact integer `k`-th root of a nonnegative integer, if one exists.
fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let root = n.nth_root(k);
    (num_traits::pow(root.clone(), k as usize) == *n).then_some(root)
}

/// All rationals `s` with `s^k = r`, positive root first.
///
/// Works on numerator and denominator separately, which is valid because
/// `r` is in lowest terms. The result has zero, one or two elements.
pub fn rational_kth_root(r: &Rational, k: u32) -> Vec<Rational> {
    assert!(k >= 1, "root index must be positive");
    if r.is_zero() {
        return vec![Rational::zero()];
    }
    let negative = r.is_negative();
    if negative && k.is_multiple_of(2) {
        return Vec::new();
    }
    let num = r.numer().abs();
    let Some(num_root) = exact_root(&num, k) else {
        return Vec::new();
    };
    let Some(den_root) = exact_root(r.denom(), k) else {
        return Vec::new();
    };
    let root = Rational::new(num_root, den_root);
    if negative {
        vec![-root]
    } else if k.is_multiple_of(2) {
        vec![root.clone(), -root]
    } else {
        vec![root]
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational as `p/q`, always including the denominator.
pub fn format_rational_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `r^k` for a possibly negative exponent. Panics on `0^k` with `k < 0`.
pub fn rational_pow(r: &Rational, k: i64) -> Rational {
    let base = if k < 0 { r.recip() } else { r.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    fn g3() -> RationalPoly {
        p(&[1, 3, 3, 1, 0, 0, 1])
    }

    fn h3() -> RationalPoly {
        p(&[1, 0, -6, 0, 15, 0, -19, 0, 15, 0, -6, 0, 1])
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        assert_eq!(&g3() + &RationalPoly::zero(), g3());
    }

    #[test]
    fn g3_from_binet_terms() {
        let x2 = RationalPoly::monomial(int(1), 2);
        let x1 = p(&[1, 1]);
        assert_eq!(x2.pow(3) + x1.pow(3), g3());
    }

    #[test]
    fn zero_is_canonical() {
        let z = &p(&[1, 2]) - &p(&[1, 2]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z, RationalPoly::new(vec![int(0), int(0)]));
    }

    #[test]
    fn pow_examples() {
        let q = p(&[-1, 0, 1]);
        assert_eq!(q.pow(2), p(&[1, 0, -2, 0, 1]));
        assert_eq!(q.pow(1), q);
        assert_eq!(q.pow(0), RationalPoly::one());

        // binomial expansion of (x+2)^7
        let e = p(&[2, 1]).pow(7);
        let binom = [1i64, 7, 21, 35, 35, 21, 7, 1];
        for (i, b) in binom.iter().enumerate() {
            assert_eq!(e.coeff(i), int(b * 2i64.pow(7 - i as u32)));
        }
        assert_eq!(e.leading_coeff(), int(1));
        assert_eq!(e.constant_term(), int(128));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(g3().compose(&p(&[-1, 0, 1])), h3());
        assert_eq!(g3().compose(&RationalPoly::x()), g3());
        let x2 = RationalPoly::monomial(int(1), 2);
        let x3 = RationalPoly::monomial(int(1), 3);
        assert_eq!(x2.compose(&x3), RationalPoly::monomial(int(1), 6));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(g3().derivative(), p(&[3, 6, 3, 0, 0, 6]));
        assert!(RationalPoly::constant(int(7)).derivative().is_zero());
        // chain rule: d/dx 2(3x+1)^4 + 5 = 2*4*3*(3x+1)^3
        let f = &p(&[1, 3]).pow(4).scale(&int(2)) + &RationalPoly::constant(int(5));
        assert_eq!(f.derivative(), p(&[1, 3]).pow(3).scale(&int(24)));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(g3().eval(&int(3)), int(793));
        assert_eq!(h3().eval(&int(2)), int(793));
        assert_eq!(g3().eval(&int(0)), g3().constant_term());
        assert_eq!(RationalPoly::zero().eval(&rat(5, 7)), int(0));
    }

    #[test]
    fn kth_root_examples() {
        assert_eq!(rational_kth_root(&int(64), 3), vec![int(4)]);
        assert_eq!(rational_kth_root(&rat(16, 81), 4), vec![rat(2, 3), rat(-2, 3)]);
        assert!(rational_kth_root(&int(2), 2).is_empty());
        assert!(rational_kth_root(&int(-4), 2).is_empty());
        assert_eq!(rational_kth_root(&rat(-8, 27), 3), vec![rat(-2, 3)]);
        assert_eq!(rational_kth_root(&int(0), 4), vec![int(0)]);
        assert_eq!(rational_kth_root(&rat(5, 3), 1), vec![rat(5, 3)]);
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = h3();
        let d = p(&[-1, 0, 1]);
        let (q, r) = f.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, f);
        assert!(r.degree().is_none_or(|rd| rd < 2));
        assert!(f.div_rem(&RationalPoly::zero()).is_none());
        let (q, r) = p(&[1, 2]).div_rem(&p(&[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[1, 2]));
    }
}
