//! Exact q-Genocchi numbers and polynomials with weight zero.
//!
//! The crate is split into:
//!
//! * [`exactq`]: polynomials and rational functions in the indeterminate `q`
//!   over arbitrary-precision rationals, plus polynomials in `x` over that field.
//! * [`genocchi`]: the numbers `G~_{n,q}`, their polynomials, Frobenius–Euler
//!   polynomials at `u = -1/q`, and the fermionic moment oracle.
//! * [`bernstein`]: Bernstein bases, operator and products in monomial form.
//! * [`identities`]: mechanical verifiers that reduce each identity to a
//!   canonical-form equality and emit [`IdentityReport`]s.
//! * [`padic`]: precision-tracked `Q_p` arithmetic, fermionic Riemann sums,
//!   the Iwasawa logarithm and the log-gamma series.

pub mod bernstein;
mod combinat;
pub mod error;
pub mod exactq;
pub mod genocchi;
pub mod identities;
pub mod padic;

pub use bernstein::BernsteinIndex;
pub use error::{Error, Result};
pub use exactq::{q_bracket, QPolynomial, QRational, Rational, XPolynomial};
pub use genocchi::{GenocchiTable, SeriesExpansion};
pub use identities::{IdentityId, IdentityReport, Verdict};
pub use padic::{IntegrandSpec, PadicContext, PadicNumber};
