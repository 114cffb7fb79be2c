//! Exact arithmetic in `Q[q]`, `Q(q)` and `Q(q)[x]`.
//!
//! `q` is a formal indeterminate here; analytic conditions on `q` only
//! matter once values are pushed into `Q_p` by the [`crate::padic`] module.

mod intgcd;
mod poly;
mod ratfunc;
mod render;
mod xpoly;

pub use poly::{q_bracket, QPolynomial};
pub use ratfunc::QRational;
pub use xpoly::XPolynomial;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `[2]_q = 1 + q`, which recurs throughout the identities.
pub fn two_q() -> QRational {
    QRational::from_poly(q_bracket(2))
}
