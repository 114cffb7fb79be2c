use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::Rational;

/// An odd prime `p` and the working relative precision `N` (base-`p` digits).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadicContext {
    p: u64,
    precision: u32,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl PadicContext {
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidContext(format!("{p} is not an odd prime")));
        }
        if precision == 0 {
            return Err(Error::InvalidContext("precision must be at least 1".into()));
        }
        Ok(Self { p, precision })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn with_precision(&self, precision: u32) -> Result<Self> {
        Self::new(self.p, precision)
    }

    pub(crate) fn prime(&self) -> BigInt {
        BigInt::from(self.p)
    }

    pub(crate) fn pow(&self, e: i64) -> BigInt {
        debug_assert!(e >= 0);
        num_traits::pow(self.prime(), e as usize)
    }

    /// Splits `n = p^v * u` with `p ∤ u`. `n` must be nonzero.
    pub(crate) fn split(&self, n: &BigInt) -> (i64, BigInt) {
        let p = self.prime();
        let mut u = n.clone();
        let mut v = 0;
        loop {
            let (q, r) = u.div_rem(&p);
            if !r.is_zero() {
                return (v, u);
            }
            u = q;
            v += 1;
        }
    }

    /// Largest `e` with `p^e <= n`, for `n >= 1`.
    pub(crate) fn floor_log(&self, n: u64) -> i64 {
        let mut e = 0;
        let mut pe = self.p;
        while pe <= n {
            e += 1;
            pe = pe.saturating_mul(self.p);
        }
        e
    }
}

/// An element of `Q_p` known to a tracked absolute precision.
///
/// A nonzero value is `p^v * u` with `p ∤ u`, known modulo `p^abs`. The unit
/// is stored in `[1, p^(abs - v))` and the relative precision `abs - v` never
/// exceeds the context precision. `abs_precision = None` marks a value known
/// exactly, which only happens when `u` itself fits in `[1, p^N)`. A zero is
/// either exact or `O(p^abs)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    ctx: PadicContext,
    valuation: Option<i64>,
    unit: BigInt,
    abs_precision: Option<i64>,
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "inverse of a non-unit");
    e.x.mod_floor(m)
}

impl PadicNumber {
    pub fn zero(ctx: PadicContext) -> Self {
        Self { ctx, valuation: None, unit: BigInt::zero(), abs_precision: None }
    }

    /// `O(p^abs)`: a zero known only modulo `p^abs`.
    pub fn approximate_zero(ctx: PadicContext, abs: i64) -> Self {
        Self { ctx, valuation: None, unit: BigInt::zero(), abs_precision: Some(abs) }
    }

    pub fn one(ctx: PadicContext) -> Self {
        Self::from_integer(1, ctx)
    }

    pub fn from_integer(n: impl Into<BigInt>, ctx: PadicContext) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()), ctx)
    }

    pub fn from_rational(r: &Rational, ctx: PadicContext) -> Self {
        if r.is_zero() {
            return Self::zero(ctx);
        }
        let (vn, un) = ctx.split(r.numer());
        let (vd, ud) = ctx.split(r.denom());
        let v = vn - vd;
        if ud.is_one() {
            return Self::normalize(ctx, un, v, None);
        }
        let rel = i64::from(ctx.precision);
        let modulus = ctx.pow(rel);
        let unit = (un * mod_inverse(&ud, &modulus)).mod_floor(&modulus);
        Self { ctx, valuation: Some(v), unit, abs_precision: Some(v + rel) }
    }

    /// Builds `p^scale * value` known modulo `p^abs` (`None`: exactly).
    fn normalize(ctx: PadicContext, value: BigInt, scale: i64, abs: Option<i64>) -> Self {
        let n = i64::from(ctx.precision);
        let value = match abs {
            Some(a) if a <= scale => return Self::approximate_zero(ctx, a),
            Some(a) => value.mod_floor(&ctx.pow(a - scale)),
            None => value,
        };
        if value.is_zero() {
            return Self { ctx, valuation: None, unit: BigInt::zero(), abs_precision: abs };
        }
        let (k, u) = ctx.split(&value);
        let v = scale + k;
        if abs.is_none() && u.is_positive() && u < ctx.pow(n) {
            return Self { ctx, valuation: Some(v), unit: u, abs_precision: None };
        }
        let a = abs.map_or(v + n, |a| a.min(v + n));
        let unit = u.mod_floor(&ctx.pow(a - v));
        Self { ctx, valuation: Some(v), unit, abs_precision: Some(a) }
    }

    pub fn context(&self) -> PadicContext {
        self.ctx
    }

    /// `None` for zero (exact or approximate).
    pub fn valuation(&self) -> Option<i64> {
        self.valuation
    }

    /// `None` for zero.
    pub fn unit(&self) -> Option<&BigInt> {
        self.valuation.map(|_| &self.unit)
    }

    /// `None` when the value is known exactly.
    pub fn abs_precision(&self) -> Option<i64> {
        self.abs_precision
    }

    /// Digits known beyond the valuation; `None` for exact values and zeros.
    pub fn rel_precision(&self) -> Option<i64> {
        Some(self.abs_precision? - self.valuation?)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_none()
    }

    pub fn is_exact(&self) -> bool {
        self.abs_precision.is_none()
    }

    /// The value as a rational, when it is known exactly.
    pub fn exact_value(&self) -> Option<Rational> {
        if !self.is_exact() {
            return None;
        }
        Some(match self.valuation {
            None => Rational::from_integer(BigInt::zero()),
            Some(v) if v >= 0 => Rational::from_integer(&self.unit * self.ctx.pow(v)),
            Some(v) => Rational::new(self.unit.clone(), self.ctx.pow(-v)),
        })
    }

    /// Lower bound on the valuation: the valuation itself, or the absolute
    /// precision of an approximate zero.
    pub fn valuation_bound(&self) -> Option<i64> {
        self.valuation.or(self.abs_precision)
    }

    /// Forgets digits at and beyond `p^abs`.
    pub fn truncate(&self, abs: i64) -> Self {
        if self.abs_precision.is_some_and(|a| a <= abs) {
            return self.clone();
        }
        match self.valuation {
            None => Self::approximate_zero(self.ctx, abs),
            Some(v) => Self::normalize(self.ctx, self.unit.clone(), v, Some(abs)),
        }
    }

    fn check_ctx(&self, other: &Self) {
        assert_eq!(self.ctx, other.ctx, "p-adic numbers from different contexts");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.ctx).combine(self, true)
    }

    /// Subtraction is done directly rather than through [`PadicNumber::neg`]
    /// so that the difference of two exact values stays exact.
    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        self.check_ctx(other);
        if other.is_zero() && other.is_exact() {
            return self.clone();
        }
        if self.is_zero() && self.is_exact() && !negate {
            return other.clone();
        }
        let abs = match (self.abs_precision, other.abs_precision) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let scale = match (self.valuation, other.valuation) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return Self::approximate_zero(self.ctx, abs.expect("approximate zeros")),
        };
        let part = |x: &Self| match x.valuation {
            Some(v) => &x.unit * self.ctx.pow(v - scale),
            None => BigInt::zero(),
        };
        let value = if negate { part(self) - part(other) } else { part(self) + part(other) };
        Self::normalize(self.ctx, value, scale, abs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ctx(other);
        let exact_zero = |x: &Self| x.is_zero() && x.is_exact();
        if exact_zero(self) || exact_zero(other) {
            return Self::zero(self.ctx);
        }
        match (self.valuation, other.valuation) {
            (Some(va), Some(vb)) => {
                let v = va + vb;
                let rel = match (self.rel_precision(), other.rel_precision()) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                Self::normalize(self.ctx, &self.unit * &other.unit, v, rel.map(|r| v + r))
            }
            _ => {
                let bound = |x: &Self| x.valuation_bound().expect("nonzero or approximate");
                Self::approximate_zero(self.ctx, bound(self) + bound(other))
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other);
        let Some(vb) = other.valuation else {
            return Err(if other.is_exact() {
                Error::DivisionByZero
            } else {
                Error::PrecisionExhausted(format!("divisor is {other}"))
            });
        };
        let Some(va) = self.valuation else {
            return Ok(match self.abs_precision {
                None => Self::zero(self.ctx),
                Some(a) => Self::approximate_zero(self.ctx, a - vb),
            });
        };
        let v = va - vb;
        let rel = match (self.rel_precision(), other.rel_precision()) {
            (None, None) if other.unit.is_one() => {
                return Ok(Self::normalize(self.ctx, self.unit.clone(), v, None));
            }
            (None, None) => i64::from(self.ctx.precision),
            (Some(a), Some(b)) => a.min(b),
            (a, b) => a.or(b).expect("one side is inexact"),
        };
        let modulus = self.ctx.pow(rel);
        let value = &self.unit * mod_inverse(&other.unit, &modulus);
        Ok(Self::normalize(self.ctx, value, v, Some(v + rel)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The unit part `p^-v * self`, with valuation 0. `None` for zero.
    pub fn unit_part(&self) -> Option<Self> {
        let v = self.valuation?;
        Some(Self {
            ctx: self.ctx,
            valuation: Some(0),
            unit: self.unit.clone(),
            abs_precision: self.abs_precision.map(|a| a - v),
        })
    }

    /// Valuation of `self - other`, with the distinction between an exact
    /// match and a match as far as the precision goes.
    pub fn agreement(&self, other: &Self) -> Agreement {
        let d = self.sub(other);
        match (d.valuation, d.abs_precision) {
            (Some(v), _) => Agreement::Finite(v),
            (None, None) => Agreement::Exact,
            (None, Some(a)) => Agreement::AtLeast(a),
        }
    }

    /// Base-`p` digits of the unit, most significant first.
    pub fn unit_digits(&self) -> Vec<u64> {
        let p = self.ctx.prime();
        let mut digits = Vec::new();
        let mut rest = self.unit.clone();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&p);
            digits.push(u64::try_from(r).expect("digit below p"));
            rest = q;
        }
        digits.reverse();
        digits
    }
}

/// `v_p(a - b)`, or the knowledge that it is infinite or beyond precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Exact,
    Finite(i64),
    AtLeast(i64),
}

impl Agreement {
    /// Lower bound on the valuation of the difference; `None` for exact.
    pub fn bound(&self) -> Option<i64> {
        match *self {
            Agreement::Exact => None,
            Agreement::Finite(v) | Agreement::AtLeast(v) => Some(v),
        }
    }

    /// Whether the valuation is known to be at least `target`.
    pub fn reaches(&self, target: i64) -> bool {
        self.bound().is_none_or(|b| b >= target)
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Agreement::Exact => f.write_str("exact"),
            Agreement::Finite(v) => write!(f, "{v}"),
            Agreement::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// `p^v * u + O(p^A)` with `u` in base-`p` digits tagged `_p`. Digits are
/// separated by `.` when `p > 10`. Exact values omit the `O` term.
impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.ctx.p;
        match (self.valuation, self.abs_precision) {
            (None, None) => f.write_str("0"),
            (None, Some(a)) => write!(f, "O({p}^{a})"),
            (Some(v), abs) => {
                let sep = if p > 10 { "." } else { "" };
                let digits: Vec<String> = self.unit_digits().iter().map(u64::to_string).collect();
                write!(f, "{p}^{v} * {}_{p}", digits.join(sep))?;
                if let Some(a) = abs {
                    write!(f, " + O({p}^{a})")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, n: u32) -> PadicContext {
        PadicContext::new(p, n).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn context_validation() {
        assert!(PadicContext::new(2, 4).is_err());
        assert!(PadicContext::new(9, 4).is_err());
        assert!(PadicContext::new(3, 0).is_err());
        assert!(PadicContext::new(101, 3).is_ok());
    }

    #[test]
    fn embedding_examples() {
        let c = ctx(3, 4);
        assert!(PadicNumber::from_rational(&rat(0, 1), c).is_zero());
        let third = PadicNumber::from_rational(&rat(1, 3), c);
        assert_eq!(third.valuation(), Some(-1));
        assert_eq!(third.unit(), Some(&BigInt::from(1)));
        let half = PadicNumber::from_rational(&rat(-1, 2), c);
        assert_eq!(half.valuation(), Some(0));
        assert_eq!(half.unit(), Some(&BigInt::from(40)));
        assert_eq!(half.abs_precision(), Some(4));
    }

    #[test]
    fn arithmetic_examples() {
        let c = ctx(3, 4);
        let a = PadicNumber::from_rational(&rat(7, 5), c);
        assert_eq!(a.add(&PadicNumber::zero(c)), a);
        let prod = PadicNumber::from_integer(4, c).mul(&PadicNumber::from_rational(&rat(1, 3), c));
        assert_eq!(prod.valuation(), Some(-1));
        assert_eq!(prod.unit(), Some(&BigInt::from(4)));
        let inv = PadicNumber::one(c).div(&PadicNumber::from_integer(4, c)).unwrap();
        assert_eq!(inv.unit(), Some(&BigInt::from(61)));
        assert_eq!(PadicNumber::one(c).div(&PadicNumber::zero(c)), Err(Error::DivisionByZero));
        assert!(matches!(
            PadicNumber::one(c).div(&PadicNumber::approximate_zero(c, 3)),
            Err(Error::PrecisionExhausted(_))
        ));
    }

    #[test]
    fn cancellation_loses_absolute_precision_only() {
        let c = ctx(5, 6);
        let a = PadicNumber::from_rational(&rat(1, 7), c);
        let b = PadicNumber::from_rational(&(rat(1, 7) + rat(125, 1)), c);
        let d = b.sub(&a);
        assert_eq!(d.valuation(), Some(3));
        assert_eq!(d.abs_precision(), Some(6));
        assert_eq!(a.sub(&a), PadicNumber::approximate_zero(c, 6));
    }

    #[test]
    fn rendering() {
        let c = ctx(3, 4);
        assert_eq!(PadicNumber::from_rational(&rat(-1, 2), c).to_string(), "3^0 * 1111_3 + O(3^4)");
        assert_eq!(PadicNumber::from_rational(&rat(4, 3), c).to_string(), "3^-1 * 11_3");
        assert_eq!(PadicNumber::approximate_zero(c, 5).to_string(), "O(3^5)");
        assert_eq!(PadicNumber::zero(c).to_string(), "0");
        let big = PadicNumber::from_integer(12, ctx(11, 2));
        assert_eq!(big.to_string(), "11^0 * 1.1_11");
    }

    #[test]
    fn truncation_and_agreement() {
        let c = ctx(3, 6);
        let a = PadicNumber::from_rational(&rat(1, 2), c);
        let t = a.truncate(2);
        assert_eq!(t.abs_precision(), Some(2));
        assert_eq!(t.unit(), Some(&BigInt::from(5)));
        assert_eq!(a.agreement(&t), Agreement::AtLeast(2));
        let b = a.add(&PadicNumber::from_integer(27, c));
        assert_eq!(a.agreement(&b), Agreement::Finite(3));
        assert_eq!(PadicNumber::one(c).agreement(&PadicNumber::one(c)), Agreement::Exact);
    }
}
