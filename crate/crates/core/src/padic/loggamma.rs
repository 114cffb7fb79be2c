use super::integral::{eval_qrational, fermionic_riemann_sum, IntegrandSpec};
use super::log::iwasawa_log;
use super::number::{PadicContext, PadicNumber};
use crate::error::{Error, Result};
use crate::genocchi::genocchi_number;

fn pole_order(x: &PadicNumber) -> Result<i64> {
    match x.valuation() {
        Some(v) if v < 0 => Ok(-v),
        _ => Err(Error::Domain(format!("log-gamma needs v(x) < 0, got x = {x}"))),
    }
}

/// Number of series terms after which every omitted term has valuation
/// above `N + 2`. Term `n` has valuation at least
/// `n j - floor(log_p(n+2))` where `j = -v(x)`: the `G~` values are
/// `p`-integral for `|q-1|_p < 1` and at most one of `n, n+1, n+2` is
/// divisible by `p`.
pub fn loggamma_term_count(x: &PadicNumber, ctx: PadicContext) -> Result<usize> {
    let j = pole_order(x)?;
    let target = i64::from(ctx.precision()) + 2;
    let mut n: u64 = 1;
    while (n as i64) * j - ctx.floor_log(n + 2) <= target {
        n += 1;
    }
    Ok((n - 1) as usize)
}

/// `G_p(x) = (x + G~_{2,q}/2) log_p x
///   + sum_{n=1..terms} (-1)^{n+1} G~_{n+2,q} / (n (n+1) (n+2) x^n) - x`.
pub fn loggamma_series_terms(
    x: &PadicNumber,
    q: &PadicNumber,
    terms: usize,
    ctx: PadicContext,
) -> Result<PadicNumber> {
    pole_order(x)?;
    let log_x = iwasawa_log(x)?;
    let two = PadicNumber::from_integer(2, ctx);
    let g2 = eval_qrational(&genocchi_number(2), q)?;
    let mut total = x.add(&g2.div(&two)?).mul(&log_x).sub(x);
    let mut x_power = PadicNumber::one(ctx);
    for n in 1..=terms {
        x_power = x_power.mul(x);
        let g = eval_qrational(&genocchi_number(n + 2), q)?;
        let denom = PadicNumber::from_integer((n * (n + 1) * (n + 2)) as u64, ctx).mul(&x_power);
        let term = g.div(&denom)?;
        total = if n % 2 == 1 { total.add(&term) } else { total.sub(&term) };
    }
    Ok(total.truncate(i64::from(ctx.precision())))
}

/// The log-gamma series truncated by [`loggamma_term_count`].
pub fn loggamma_series(x: &PadicNumber, q: &PadicNumber, ctx: PadicContext) -> Result<PadicNumber> {
    loggamma_series_terms(x, q, loggamma_term_count(x, ctx)?, ctx)
}

/// Level-`m` Riemann sum of `(x + ξ)(log_p(x + ξ) - 1)` against `μ_{-q}`.
pub fn loggamma_direct(x: &PadicNumber, q: &PadicNumber, m: u32, ctx: PadicContext) -> Result<PadicNumber> {
    pole_order(x)?;
    fermionic_riemann_sum(&IntegrandSpec::LogGamma(x.clone()), m, q, ctx)
}
