//! Parsing and printing of polynomial expressions and power-sum specs.
//!
//! Polynomial grammar (whitespace between tokens is ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-'? factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | var | '(' expr ')'
//! ```
//!
//! A rational literal is `digits` or `digits/digits` with no inner spaces.
//! Multiplication must be written explicitly.
//!
//! Power sums use `n=<int>; <coeff>*(<root-expr>); ...`, where `<coeff>` is
//! an optionally signed rational literal. A trailing `;` is accepted.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::powersum::{PowerSumError, PowerSumSpec, PowerSumTerm};
use crate::ratpoly::{format_rational, Rational, RationalPoly};

/// Largest exponent literal accepted by the parser.
pub const MAX_EXPONENT: u32 = 4096;
/// Largest polynomial degree the parser will build.
pub const MAX_DEGREE: usize = 4096;
/// Rough cap on coefficient size (bits of numerator plus denominator).
const MAX_COEFF_BITS: u64 = 1 << 20;

fn coeff_bits(f: &RationalPoly) -> u64 {
    f.coeffs()
        .iter()
        .map(|c| c.numer().bits() + c.denom().bits())
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    /// 0-based byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            offset,
            message: message.into(),
        }
    }
}

/// A parsed polynomial together with the variable name it was written in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPoly {
    pub poly: RationalPoly,
    pub var: Option<String>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    var: Option<String>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            pos: 0,
            var: None,
        }
    }

    fn bytes(&self) -> &[u8] {
        self.src.as_bytes()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected '{}'", c as char)))
        }
    }

    fn unexpected(&mut self, what: &str) -> ParseError {
        let offset = {
            self.skip_ws();
            self.pos
        };
        match self.src[offset..].chars().next() {
            Some(ch) => ParseError::new(offset, format!("{what}, found '{ch}'")),
            None => ParseError::new(offset, format!("{what}, found end of input")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let src = self.src;
        let len = src.as_bytes()[start..]
            .iter()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &src[start..start + len]))
    }

    /// `digits` or `digits/digits`.
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let Some((start, num)) = self.digits() else {
            return Err(self.unexpected("expected a number"));
        };
        let num: BigInt = num.parse().expect("digit string");
        let bytes = self.bytes();
        if bytes.get(self.pos) == Some(&b'/') && bytes.get(self.pos + 1).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
            let (_, den) = self.digits().expect("digit follows '/'");
            let den: BigInt = den.parse().expect("digit string");
            if den.is_zero() {
                return Err(ParseError::new(start, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let src = self.src;
        let bytes = src.as_bytes();
        if !bytes.get(start).is_some_and(|b| b.is_ascii_alphabetic() || *b == b'_') {
            return None;
        }
        let len = bytes[start..]
            .iter()
            .take_while(|b| b.is_ascii_alphanumeric() || **b == b'_')
            .count();
        self.pos += len;
        Some((start, &src[start..start + len]))
    }

    fn expr(&mut self) -> Result<RationalPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalPoly, ParseError> {
        let negate = self.eat(b'-');
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.factor()?;
            if acc.deg() + rhs.deg() > MAX_DEGREE {
                return Err(ParseError::new(at, format!("degree exceeds {MAX_DEGREE}")));
            }
            if coeff_bits(&acc) + coeff_bits(&rhs) > MAX_COEFF_BITS {
                return Err(ParseError::new(at, "coefficients too large"));
            }
            acc = &acc * &rhs;
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<RationalPoly, ParseError> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let Some((at, digits)) = self.digits() else {
            return Err(self.unexpected("exponent must be a nonnegative integer literal"));
        };
        let exp = digits
            .parse::<u32>()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| ParseError::new(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
        if base.deg().saturating_mul(exp as usize) > MAX_DEGREE {
            return Err(ParseError::new(at, format!("degree exceeds {MAX_DEGREE}")));
        }
        let growth = coeff_bits(&base) + u64::from((base.coeffs().len().max(1) as u64).ilog2()) + 1;
        if growth.saturating_mul(u64::from(exp)) > MAX_COEFF_BITS {
            return Err(ParseError::new(at, "coefficients too large"));
        }
        Ok(base.pow(exp))
    }

    fn base(&mut self) -> Result<RationalPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => Ok(RationalPoly::constant(self.rational()?)),
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let (at, name) = self.ident().expect("identifier start");
                match &self.var {
                    Some(v) if v != name => Err(ParseError::new(
                        at,
                        format!("second variable '{name}' (already using '{v}')"),
                    )),
                    Some(_) => Ok(RationalPoly::x()),
                    None => {
                        self.var = Some(name.to_string());
                        Ok(RationalPoly::x())
                    }
                }
            }
            _ => Err(self.unexpected("expected a number, variable or '('")),
        }
    }
}

/// Parses a univariate polynomial expression.
pub fn parse_poly(src: &str) -> Result<RationalPoly, ParseError> {
    parse_poly_named(src).map(|p| p.poly)
}

/// Like [`parse_poly`], also reporting the variable name used (if any).
pub fn parse_poly_named(src: &str) -> Result<ParsedPoly, ParseError> {
    let mut parser = Parser::new(src);
    let poly = parser.expr()?;
    if !parser.at_end() {
        return Err(parser.unexpected("expected operator or end of input"));
    }
    Ok(ParsedPoly {
        poly,
        var: parser.var,
    })
}

/// Parses a rational constant such as `3`, `-1/2` or `(2/3)`.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let poly = parse_poly(src)?;
    if poly.is_constant() {
        Ok(poly.constant_term())
    } else {
        Err(ParseError::new(0, "expected a rational constant"))
    }
}

/// Errors from [`parse_powersum`]: either syntax or a rejected spec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowerSumParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("invalid power sum: {0}")]
    Invalid(#[from] PowerSumError),
}

/// Parses `n=<int>; <coeff>*(<root>); ...` into a [`PowerSumSpec`].
pub fn parse_powersum(src: &str) -> Result<PowerSumSpec, PowerSumParseError> {
    let mut parser = Parser::new(src);
    match parser.ident() {
        Some((_, "n")) => {}
        _ => {
            parser.pos = 0;
            return Err(ParseError::new(parser.pos, "expected 'n=<index>'").into());
        }
    }
    parser.expect(b'=')?;
    let Some((at, digits)) = parser.digits() else {
        return Err(parser.unexpected("expected index n").into());
    };
    let n: u32 = digits
        .parse()
        .map_err(|_| ParseError::new(at, "index n too large"))?;
    if n < 1 {
        return Err(PowerSumError::IndexTooSmall.into());
    }

    let mut terms = Vec::new();
    while parser.eat(b';') {
        if parser.at_end() {
            break;
        }
        let negate = parser.eat(b'-');
        let mut coeff = parser.rational()?;
        if negate {
            coeff = -coeff;
        }
        parser.expect(b'*')?;
        parser.expect(b'(')?;
        let root = parser.expr()?;
        parser.expect(b')')?;
        terms.push(PowerSumTerm { root, coeff });
    }
    if !parser.at_end() {
        return Err(parser.unexpected("expected ';' or end of input").into());
    }
    let mut spec = PowerSumSpec::new(n, terms)?;
    spec.var = parser.var;
    Ok(spec)
}

/// Canonical descending-degree rendering in the variable `x`.
pub fn format_poly(f: &RationalPoly) -> String {
    format_poly_var(f, "x")
}

/// Canonical descending-degree rendering in the given variable.
///
/// The output is accepted by [`parse_poly`] and parses back to `f`.
pub fn format_poly_var(f: &RationalPoly, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        let monomial = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if monomial.is_empty() {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&format_rational(&mag));
            out.push('*');
            out.push_str(&monomial);
        }
    }
    out
}

/// Renders a spec in the `n=<int>; <coeff>*(<root>)` surface syntax.
pub fn format_powersum(spec: &PowerSumSpec) -> String {
    let var = spec.var.as_deref().unwrap_or("x");
    let mut out = format!("n={}", spec.n);
    for t in &spec.terms {
        out.push_str(&format!(
            "; {}*({})",
            format_rational(&t.coeff),
            format_poly_var(&t.root, var)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat};

    fn g3() -> RationalPoly {
        RationalPoly::from_ints(&[1, 3, 3, 1, 0, 0, 1])
    }

    #[test]
    fn parses_g3_expansion() {
        assert_eq!(parse_poly("x^6 + x^3 + 3*x^2 + 3*x + 1").unwrap(), g3());
        assert_eq!(parse_poly("(x^2)^3 + (x+1)^3").unwrap(), g3());
    }

    #[test]
    fn parses_zero_and_rationals() {
        assert!(parse_poly("0").unwrap().is_zero());
        let f = parse_poly("(1/2)*x^2 - 3/4").unwrap();
        assert_eq!(f, RationalPoly::new(vec![rat(-3, 4), int(0), rat(1, 2)]));
    }

    #[test]
    fn records_variable() {
        let p = parse_poly_named("y^2 - 1").unwrap();
        assert_eq!(p.var.as_deref(), Some("y"));
        assert_eq!(parse_poly_named("7").unwrap().var, None);
    }

    #[test]
    fn unary_minus_binds_to_term() {
        assert_eq!(parse_poly("-x^2").unwrap(), RationalPoly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("x - -1").unwrap(), RationalPoly::from_ints(&[1, 1]));
        assert_eq!(parse_poly("-2*x").unwrap(), RationalPoly::from_ints(&[0, -2]));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let e = parse_poly("2x").unwrap_err();
        assert_eq!(e.offset, 1);
        let e = parse_poly("x^-1").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.message.contains("exponent"));
        let e = parse_poly("x^(2)").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_poly("x + y").unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_poly("(x + 1").unwrap_err();
        assert_eq!(e.offset, 6);
        let e = parse_poly("").unwrap_err();
        assert_eq!(e.offset, 0);
        let e = parse_poly("1/0").unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(parse_poly("x^99999").is_err());
        assert!(parse_poly("x ^ 3 ^ 2").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_poly(&g3()), "x^6 + x^3 + 3*x^2 + 3*x + 1");
        assert_eq!(format_poly(&RationalPoly::zero()), "0");
        assert_eq!(
            format_poly(&RationalPoly::monomial(rat(-1, 2), 2)),
            "-1/2*x^2"
        );
        assert_eq!(
            format_poly_var(&RationalPoly::from_ints(&[-1, 0, 1]), "y"),
            "y^2 - 1"
        );
        assert_eq!(format_poly(&RationalPoly::from_ints(&[0, -1])), "-x");
    }

    #[test]
    fn parses_powersums() {
        let g = parse_powersum("n=3; 1*(x^2); 1*(x+1)").unwrap();
        assert_eq!(g.n, 3);
        assert_eq!(g.terms.len(), 2);
        assert_eq!(g.terms[0].root, RationalPoly::monomial(int(1), 2));
        assert_eq!(g.terms[1].root, RationalPoly::from_ints(&[1, 1]));
        assert_eq!(g.var.as_deref(), Some("x"));

        let h = parse_powersum("n=7; 1*(y^2); 1*(y+2)").unwrap();
        assert_eq!(h.n, 7);
        assert_eq!(h.terms[1].root, RationalPoly::from_ints(&[2, 1]));
        assert_eq!(h.var.as_deref(), Some("y"));

        let s = parse_powersum("n=5; 2*(x^3+x); -1/3*(x); 4*(2)").unwrap();
        assert_eq!(s.n, 5);
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.terms[1].coeff, rat(-1, 3));
        assert_eq!(s.terms[2].root, RationalPoly::constant(int(2)));
        assert_eq!(s.terms[2].coeff, int(4));

        assert!(parse_powersum("n=3;\n 1*(x^2);\n 1*(x+1);\n").is_ok());
    }

    #[test]
    fn powersum_errors() {
        assert!(matches!(
            parse_powersum("1*(x^2)"),
            Err(PowerSumParseError::Syntax(_))
        ));
        assert!(matches!(
            parse_powersum("n=0; 1*(x)"),
            Err(PowerSumParseError::Invalid(PowerSumError::IndexTooSmall))
        ));
        assert!(matches!(
            parse_powersum("n=3"),
            Err(PowerSumParseError::Invalid(PowerSumError::NoTerms))
        ));
        assert!(matches!(
            parse_powersum("n=3; 0*(x^2); 1*(x)"),
            Err(PowerSumParseError::Invalid(PowerSumError::ZeroCoefficient { .. }))
        ));
        assert!(matches!(
            parse_powersum("n=3; 1*(x); 2*(x)"),
            Err(PowerSumParseError::Invalid(PowerSumError::DuplicateRoot { .. }))
        ));
        assert!(matches!(
            parse_powersum("n=3; 1*(x); 2*(y)"),
            Err(PowerSumParseError::Syntax(_))
        ));
        assert!(matches!(
            parse_powersum("n=3; 1*x"),
            Err(PowerSumParseError::Syntax(_))
        ));
    }

    #[test]
    fn powersum_format_roundtrip() {
        let src = "n=5; 2*(x^3 + x); -1/3*(x); 4*(2)";
        let spec = parse_powersum(src).unwrap();
        assert_eq!(format_powersum(&spec), src);
        assert_eq!(parse_powersum(&format_powersum(&spec)).unwrap(), spec);
    }
}
