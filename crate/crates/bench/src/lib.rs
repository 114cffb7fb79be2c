//! Benchmark workloads for qgenocchi.

use qgenocchi::genocchi::{genocchi_series_oracle, GenocchiTable};
use qgenocchi::identities::{run_suite, SuiteRanges, Verification};
use qgenocchi::padic::{fermionic_riemann_sum, loggamma_direct, loggamma_series};
use qgenocchi::{IdentityId, IntegrandSpec, PadicContext, PadicNumber, QRational, Rational, Result};

/// `G~_0..=G~_n` from a fresh recurrence table.
pub fn recurrence(n: usize) -> Vec<QRational> {
    let table = GenocchiTable::new();
    table.extend_to(n);
    table.snapshot()
}

/// `G~_0..=G~_n` by inverting the generating function.
pub fn series(n: usize) -> Vec<QRational> {
    genocchi_series_oracle(n).coefficients
}

pub fn identity_suite(id: IdentityId, n_max: usize) -> Vec<Verification> {
    run_suite(&[id], &SuiteRanges::capped(n_max))
}

/// Level `m` Riemann sum of `x^n` at `q = 1 + p`.
pub fn riemann_sum(p: u64, precision: u32, n: u32, m: u32) -> Result<PadicNumber> {
    let ctx = PadicContext::new(p, precision)?;
    let q = PadicNumber::from_integer(1 + p as i64, ctx);
    fermionic_riemann_sum(&IntegrandSpec::Monomial(n), m, &q, ctx)
}

/// Series and level `m` direct values of the log-gamma function at `x = 1/p`, `q = 1 + p`.
pub fn loggamma_pair(p: u64, precision: u32, m: u32) -> Result<(PadicNumber, PadicNumber)> {
    let ctx = PadicContext::new(p, precision)?;
    let q = PadicNumber::from_integer(1 + p as i64, ctx);
    let x = PadicNumber::from_rational(&Rational::new(1.into(), (p as i64).into()), ctx);
    Ok((loggamma_series(&x, &q, ctx)?, loggamma_direct(&x, &q, m, ctx)?))
}
