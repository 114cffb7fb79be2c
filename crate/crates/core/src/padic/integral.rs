use num_bigint::BigInt;
use serde_json::{json, Value};

use super::log::{iwasawa_log, padic_log1p};
use super::number::{Agreement, PadicContext, PadicNumber};
use crate::error::{Error, Result};
use crate::exactq::{QPolynomial, QRational, Rational, XPolynomial};
use crate::genocchi::moment;

/// The integrands the Riemann sums know how to evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegrandSpec {
    /// `ξ^n`.
    Monomial(u32),
    /// `sum_i c_i ξ^i`.
    Polynomial(Vec<Rational>),
    /// `(x + ξ)(log_p(x + ξ) - 1)` for the given `x` with `v(x) < 0`.
    LogGamma(PadicNumber),
}

impl IntegrandSpec {
    /// A polynomial in `x` over `Q(q)` with `q` specialised to `q0`.
    pub fn from_xpolynomial(p: &XPolynomial, q0: &Rational) -> Result<Self> {
        let coeffs = p.coeffs().iter().map(|c| c.eval(q0)).collect::<Result<_>>()?;
        Ok(IntegrandSpec::Polynomial(coeffs))
    }
}

fn eval_poly(p: &QPolynomial, q: &PadicNumber) -> PadicNumber {
    let ctx = q.context();
    p.coeffs().iter().rev().fold(PadicNumber::zero(ctx), |acc, c| {
        acc.mul(q).add(&PadicNumber::from_rational(c, ctx))
    })
}

/// Evaluates a rational function of `q` at a p-adic point. An exactly known
/// point is evaluated over the rationals first.
pub fn eval_qrational(r: &QRational, q: &PadicNumber) -> Result<PadicNumber> {
    if let Some(q0) = q.exact_value() {
        return Ok(PadicNumber::from_rational(&r.eval(&q0)?, q.context()));
    }
    let den = eval_poly(r.denom(), q);
    if den.is_zero() && den.is_exact() {
        return Err(Error::Pole(q.to_string()));
    }
    eval_poly(r.numer(), q).div(&den)
}

fn check_q(q: &PadicNumber) -> Result<()> {
    let d = q.sub(&PadicNumber::one(q.context()));
    match d.valuation_bound() {
        Some(v) if v < 1 => Err(Error::Domain(format!("|q - 1|_p < 1 fails for q = {q}"))),
        _ => Ok(()),
    }
}

struct LogGammaTerm {
    x: PadicNumber,
    log_x: PadicNumber,
}

impl LogGammaTerm {
    fn new(x: &PadicNumber) -> Result<Self> {
        match x.valuation() {
            Some(v) if v < 0 => Ok(Self { x: x.clone(), log_x: iwasawa_log(x)? }),
            _ => Err(Error::Domain(format!("log-gamma needs v(x) < 0, got x = {x}"))),
        }
    }

    /// `(x + ξ)(log_p x + log_p(1 + ξ/x) - 1)`.
    fn eval(&self, xi: &PadicNumber) -> Result<PadicNumber> {
        let ctx = xi.context();
        let z = xi.div(&self.x)?;
        let log = self.log_x.add(&padic_log1p(&z)?).sub(&PadicNumber::one(ctx));
        Ok(self.x.add(xi).mul(&log))
    }
}

/// Level-`m` approximation `(1+q)/(1+q^{p^m}) sum_{ξ<p^m} (-1)^ξ q^ξ f(ξ)`
/// of the fermionic integral.
///
/// For `f = ξ^0` the alternating geometric sum telescopes to exactly 1, and
/// the exact value is returned.
pub fn fermionic_riemann_sum(
    f: &IntegrandSpec,
    m: u32,
    q: &PadicNumber,
    ctx: PadicContext,
) -> Result<PadicNumber> {
    if q.context() != ctx {
        return Err(Error::InvalidContext("q belongs to a different context".into()));
    }
    if m == 0 {
        return Err(Error::Domain("level must be at least 1".into()));
    }
    check_q(q)?;
    let log_gamma = match f {
        IntegrandSpec::LogGamma(x) => Some(LogGammaTerm::new(x)?),
        _ => None,
    };
    let len = num_traits::pow(ctx.p(), m as usize);
    let minus_q = q.neg();
    let mut weight = PadicNumber::one(ctx);
    let mut sum = PadicNumber::zero(ctx);
    for xi in 0..len {
        let value = match f {
            IntegrandSpec::Monomial(n) => PadicNumber::from_integer(num_traits::pow(BigInt::from(xi), *n as usize), ctx),
            IntegrandSpec::Polynomial(c) => {
                let x = Rational::from_integer(xi.into());
                let v = c.iter().rev().fold(Rational::from_integer(0.into()), |acc, a| acc * &x + a);
                PadicNumber::from_rational(&v, ctx)
            }
            IntegrandSpec::LogGamma(_) => {
                let term = log_gamma.as_ref().expect("built above");
                term.eval(&PadicNumber::from_integer(xi, ctx))?
            }
        };
        sum = sum.add(&weight.mul(&value));
        weight = weight.mul(&minus_q);
    }
    // `weight` is now (-q)^{p^m} = -q^{p^m}
    let one = PadicNumber::one(ctx);
    let prefactor = one.add(q).div(&one.sub(&weight))?;
    let result = prefactor.mul(&sum);
    if *f == IntegrandSpec::Monomial(0) {
        debug_assert!(result.agreement(&one).reaches(result.abs_precision().unwrap_or(0)));
        return Ok(one);
    }
    Ok(result)
}

/// One level of a convergence experiment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergencePoint {
    pub level: u32,
    pub error: Agreement,
}

impl ConvergencePoint {
    /// `{"level", "error_valuation"}`; an exact match reports `"exact"`,
    /// and a match up to the working precision adds `"precision_limited"`.
    pub fn to_json(&self) -> Value {
        match self.error {
            Agreement::Exact => json!({"level": self.level, "error_valuation": "exact"}),
            Agreement::Finite(v) => json!({"level": self.level, "error_valuation": v}),
            Agreement::AtLeast(v) => {
                json!({"level": self.level, "error_valuation": v, "precision_limited": true})
            }
        }
    }
}

pub fn convergence_json(points: &[ConvergencePoint]) -> String {
    Value::Array(points.iter().map(ConvergencePoint::to_json).collect()).to_string()
}

/// Error valuations compared with exact as `+inf`: strictly increasing,
/// except that exact may repeat.
pub fn is_strictly_increasing(points: &[ConvergencePoint]) -> bool {
    points.windows(2).all(|w| match (w[0].error.bound(), w[1].error.bound()) {
        (None, None) => true,
        (None, Some(_)) => false,
        (Some(_), None) => true,
        (Some(a), Some(b)) => a < b,
    })
}

/// `v_p(S_m - moment(n))` for `m = 1..=m_max`, where `S_m` is the level-`m`
/// Riemann sum of `ξ^n`.
pub fn moment_convergence(
    n: u32,
    q: &PadicNumber,
    m_max: u32,
    ctx: PadicContext,
) -> Result<Vec<ConvergencePoint>> {
    let limit = eval_qrational(&moment(n as usize), q)?;
    (1..=m_max)
        .map(|m| {
            let s = fermionic_riemann_sum(&IntegrandSpec::Monomial(n), m, q, ctx)?;
            Ok(ConvergencePoint { level: m, error: s.agreement(&limit) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, n: u32) -> PadicContext {
        PadicContext::new(p, n).unwrap()
    }

    #[test]
    fn constant_integrand_is_exactly_one() {
        let c = ctx(3, 8);
        for q in [1, 4, 7, -2] {
            let q = PadicNumber::from_integer(q, c);
            for m in 1..=4 {
                let s = fermionic_riemann_sum(&IntegrandSpec::Monomial(0), m, &q, c).unwrap();
                assert_eq!(s, PadicNumber::one(c));
            }
        }
    }

    #[test]
    fn first_moment_at_q_one() {
        let c = ctx(3, 6);
        let one = PadicNumber::one(c);
        let s = fermionic_riemann_sum(&IntegrandSpec::Monomial(1), 2, &one, c).unwrap();
        assert_eq!(s.agreement(&PadicNumber::from_integer(4, c)), Agreement::AtLeast(6));
        assert_eq!(s.unit(), Some(&BigInt::from(4)));
        let half = PadicNumber::from_rational(&Rational::new((-1).into(), 2.into()), c);
        assert!(s.agreement(&half).reaches(2));
    }

    #[test]
    fn domain_checks() {
        let c = ctx(3, 6);
        let two = PadicNumber::from_integer(2, c);
        assert!(matches!(
            fermionic_riemann_sum(&IntegrandSpec::Monomial(1), 1, &two, c),
            Err(Error::Domain(_))
        ));
        let one = PadicNumber::one(c);
        let x = PadicNumber::from_integer(3, c);
        assert!(matches!(
            fermionic_riemann_sum(&IntegrandSpec::LogGamma(x), 1, &one, c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rational_function_evaluation() {
        let c = ctx(3, 4);
        let q = PadicNumber::from_integer(4, c);
        // -q/(1+q) at q = 4 is -4/5
        let r: QRational = "(-q)/(1+q)".parse().unwrap();
        let v = eval_qrational(&r, &q).unwrap();
        assert_eq!(v, PadicNumber::from_rational(&Rational::new((-4).into(), 5.into()), c));
        let pole: QRational = "1/(-4+q)".parse().unwrap();
        assert!(matches!(eval_qrational(&pole, &q), Err(Error::Pole(_))));
        // -1 is not held exactly, so its pole only shows as lost precision
        let inexact: QRational = "1/(1+q)".parse().unwrap();
        assert!(matches!(
            eval_qrational(&inexact, &PadicNumber::from_integer(-1, c)),
            Err(Error::PrecisionExhausted(_))
        ));
    }

    #[test]
    fn first_moment_converges() {
        let c = ctx(3, 12);
        let q = PadicNumber::from_integer(4, c);
        let pts = moment_convergence(1, &q, 3, c).unwrap();
        assert!(is_strictly_increasing(&pts));
        assert_eq!(pts[0].to_json(), json!({"level": 1, "error_valuation": 1}));
        let exact = moment_convergence(0, &q, 2, c).unwrap();
        assert!(exact.iter().all(|p| p.error == Agreement::Exact));
        assert_eq!(
            convergence_json(&exact),
            r#"[{"error_valuation":"exact","level":1},{"error_valuation":"exact","level":2}]"#
        );
    }

    #[test]
    fn polynomial_integrand_matches_oracle_limit() {
        let c = ctx(5, 10);
        let q = PadicNumber::from_integer(6, c);
        let f = XPolynomial::from_ints(&[1, -1]).pow(2);
        let spec = IntegrandSpec::from_xpolynomial(&f, &Rational::from_integer(6.into())).unwrap();
        let limit = eval_qrational(&crate::genocchi::integrate_polynomial(&f), &q).unwrap();
        let errs: Vec<Agreement> = (1..=3)
            .map(|m| fermionic_riemann_sum(&spec, m, &q, c).unwrap().agreement(&limit))
            .collect();
        assert!(errs.windows(2).all(|w| w[0].bound() < w[1].bound()), "{errs:?}");
    }
}
