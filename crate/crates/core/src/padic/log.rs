use super::number::PadicNumber;
use crate::error::{Error, Result};

/// Target absolute precision for a series in `z`: what `z` itself
/// justifies, or `v(z) + N` for an exact argument.
fn target(z: &PadicNumber, v: i64) -> i64 {
    let n = i64::from(z.context().precision());
    z.abs_precision().unwrap_or(v + n).min(v + n)
}

fn require_small(z: &PadicNumber, what: &str) -> Result<Option<i64>> {
    match z.valuation_bound() {
        None => Ok(None),
        Some(v) if v >= 1 => Ok(z.valuation()),
        Some(v) => Err(Error::Domain(format!("{what} needs valuation >= 1, got {v}"))),
    }
}

/// `log_p(1 + z) = sum_{n>=1} (-1)^{n+1} z^n / n` for `v(z) >= 1`.
///
/// Terms are added while `n v(z) - floor(log_p n)` stays within the target
/// precision plus two guard digits; that bound increases with `n`, so it
/// also bounds every omitted term. The result is truncated to the target.
pub fn padic_log1p(z: &PadicNumber) -> Result<PadicNumber> {
    let ctx = z.context();
    let Some(v) = require_small(z, "log(1+z)")? else {
        return Ok(z.clone());
    };
    let t = target(z, v);
    let mut sum = PadicNumber::zero(ctx);
    let mut power = PadicNumber::one(ctx);
    let mut n: u64 = 1;
    while (n as i64) * v - ctx.floor_log(n) <= t + 2 {
        power = power.mul(z);
        let term = power.div(&PadicNumber::from_integer(n, ctx))?;
        sum = if n % 2 == 1 { sum.add(&term) } else { sum.sub(&term) };
        n += 1;
    }
    Ok(sum.truncate(t))
}

/// `(1 + z) log(1 + z)` through its own series
/// `z + sum_{n>=1} (-1)^{n+1} z^{n+1} / (n (n+1))`.
pub fn one_plus_z_log(z: &PadicNumber) -> Result<PadicNumber> {
    let ctx = z.context();
    let Some(v) = require_small(z, "(1+z)log(1+z)")? else {
        return Ok(z.clone());
    };
    let t = target(z, v);
    let mut sum = z.clone();
    let mut power = z.clone();
    let mut n: u64 = 1;
    while ((n + 1) as i64) * v - ctx.floor_log(n + 1) <= t + 2 {
        power = power.mul(z);
        let term = power.div(&PadicNumber::from_integer(n * (n + 1), ctx))?;
        sum = if n % 2 == 1 { sum.add(&term) } else { sum.sub(&term) };
        n += 1;
    }
    Ok(sum.truncate(t))
}

/// Iwasawa logarithm on `Q_p^×`: `log_p p = 0`, so `log_p(p^v u) = log_p u`,
/// and `log_p u = log_p(u^{p-1}) / (p-1)` with `u^{p-1} ≡ 1 (mod p)`.
pub fn iwasawa_log(x: &PadicNumber) -> Result<PadicNumber> {
    let ctx = x.context();
    let u = x
        .unit_part()
        .ok_or_else(|| Error::Domain(format!("log of {x}")))?;
    let p = ctx.p();
    let w = u.pow((p - 1) as u32).sub(&PadicNumber::one(ctx));
    padic_log1p(&w)?.div(&PadicNumber::from_integer(p - 1, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::Rational;
    use crate::padic::number::{Agreement, PadicContext};

    fn ctx(p: u64, n: u32) -> PadicContext {
        PadicContext::new(p, n).unwrap()
    }

    /// Partial sum of `log(1+z)` over the rationals, embedded at the end.
    fn log1p_exact(z: &Rational, terms: u32, c: PadicContext) -> PadicNumber {
        let sum = (1..=terms).fold(Rational::from_integer(0.into()), |acc, n| {
            let t = num_traits::pow(z.clone(), n as usize) / Rational::from_integer(n.into());
            if n % 2 == 1 { acc + t } else { acc - t }
        });
        PadicNumber::from_rational(&sum, c)
    }

    #[test]
    fn log_of_one_plus_p() {
        let c = ctx(3, 6);
        let three = PadicNumber::from_integer(3, c);
        let l = padic_log1p(&three).unwrap();
        assert_eq!(l.valuation(), Some(1));
        let reference = log1p_exact(&Rational::from_integer(3.into()), 40, c);
        assert!(l.agreement(&reference).reaches(l.abs_precision().unwrap()));
        assert!(padic_log1p(&PadicNumber::zero(c)).unwrap().is_zero());
        assert!(matches!(padic_log1p(&PadicNumber::one(c)), Err(Error::Domain(_))));
    }

    #[test]
    fn log_doubles_on_squares() {
        let c = ctx(3, 8);
        let z = PadicNumber::from_integer(3, c);
        let one = PadicNumber::one(c);
        let sq = one.add(&z).pow(2).sub(&one);
        let lhs = padic_log1p(&sq).unwrap();
        let rhs = padic_log1p(&z).unwrap().mul(&PadicNumber::from_integer(2, c));
        let joint = lhs.abs_precision().unwrap().min(rhs.abs_precision().unwrap());
        assert!(lhs.agreement(&rhs).reaches(joint));
    }

    #[test]
    fn one_plus_z_log_matches_product() {
        let c = ctx(5, 10);
        let z = PadicNumber::from_rational(&Rational::new(10.into(), 7.into()), c);
        let series = one_plus_z_log(&z).unwrap();
        let product = PadicNumber::one(c).add(&z).mul(&padic_log1p(&z).unwrap());
        let joint = series.abs_precision().unwrap().min(product.abs_precision().unwrap());
        assert!(series.agreement(&product).reaches(joint));
    }

    #[test]
    fn iwasawa_convention() {
        let c = ctx(3, 10);
        let third = PadicNumber::from_rational(&Rational::new(1.into(), 3.into()), c);
        assert_eq!(iwasawa_log(&third).unwrap(), PadicNumber::zero(c));
        let four = PadicNumber::from_integer(4, c);
        let direct = padic_log1p(&PadicNumber::from_integer(3, c)).unwrap();
        let joint = direct.abs_precision().unwrap();
        assert!(iwasawa_log(&four).unwrap().agreement(&direct).reaches(joint));
        // log(-1) = 0 and log(x y) = log x + log y
        let minus_one = PadicNumber::from_integer(-1, c);
        assert!(matches!(iwasawa_log(&minus_one).unwrap().agreement(&PadicNumber::zero(c)), Agreement::AtLeast(_)));
        let two = PadicNumber::from_integer(2, c);
        let eight_thirds = PadicNumber::from_rational(&Rational::new(8.into(), 3.into()), c);
        let lhs = iwasawa_log(&eight_thirds).unwrap();
        let rhs = iwasawa_log(&two).unwrap().mul(&PadicNumber::from_integer(3, c));
        assert!(lhs.agreement(&rhs).reaches(lhs.abs_precision().unwrap().min(rhs.abs_precision().unwrap())));
    }
}
