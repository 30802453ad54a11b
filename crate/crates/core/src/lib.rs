//! Exact decision procedure for equations `G_n(x) = H_m(y)` between
//! polynomial power sums.
//!
//! For power sums of the required shape with `G_n` indecomposable and
//! `n, m > 2`, the equation has infinitely many rational solutions with a
//! bounded denominator exactly when `H_m = G_n ∘ P` for some `P ∈ Q[y]`.
//! [`decide`] checks the hypotheses and searches for `P` with the
//! coefficient-comparison solver in [`compfactor`].

pub mod cli;
pub mod compfactor;
pub mod decide;
pub mod decompose;
pub mod dickson;
pub mod parse;
pub mod powersum;
pub mod ratpoly;
pub mod stdpairs;

pub use compfactor::{comp_factor, CompFactorOutcome};
pub use decide::{decide_infinite, decide_vs_polynomial, Decision, Verdict};
pub use parse::{format_poly, parse_poly, parse_powersum};
pub use powersum::{PowerSumSpec, PowerSumTerm, ShapeReport};
pub use ratpoly::{rational_kth_root, Rational, RationalPoly};
