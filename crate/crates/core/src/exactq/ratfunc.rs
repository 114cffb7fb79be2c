use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::forward_owned;
use super::{QPolynomial, Rational};
use crate::error::{Error, Result};

/// Rational function `num / den` in `q` over the rationals, kept in
/// canonical form: coprime numerator and denominator, monic denominator,
/// zero stored as `0/1`. Structural equality is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPolynomial,
    den: QPolynomial,
}

impl QRational {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPolynomial, den: QPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self { num: QPolynomial::zero(), den: QPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self { num: QPolynomial::constant(c), den: QPolynomial::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn q() -> Self {
        Self::from_poly(QPolynomial::q())
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        Self { num: p, den: QPolynomial::one() }
    }

    pub fn numer(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The constant value, if this function does not depend on `q`.
    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        // powers of coprime polynomials stay coprime
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// The substitution `q -> 1/q`, brought back to canonical form.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shift = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        Self::reduce(self.num.reciprocal(shift), self.den.reciprocal(shift))
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QPolynomial> for QRational {
    fn from(p: QPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for QRational {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &QRational {
    type Output = QRational;

    fn add(self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let left = rhs.den.div_exact(&g);
        let right = self.den.div_exact(&g);
        let num = &(&self.num * &left) + &(&rhs.num * &right);
        QRational::reduce(num, &self.den * &left)
    }
}

impl Neg for &QRational {
    type Output = QRational;

    fn neg(self) -> QRational {
        QRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRational {
    type Output = QRational;

    fn neg(self) -> QRational {
        -&self
    }
}

impl Sub for &QRational {
    type Output = QRational;

    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Mul for &QRational {
    type Output = QRational;

    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        // cross-cancel first to keep the final gcd small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        QRational::reduce(num, den)
    }
}

/// Panics on division by zero; use [`QRational::checked_div`] to recover.
impl Div for &QRational {
    type Output = QRational;

    fn div(self, rhs: &QRational) -> QRational {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

forward_owned!(QRational, Add::add, Sub::sub, Mul::mul, Div::div);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_ints(c)
    }

    fn r(n: &[i64], d: &[i64]) -> QRational {
        QRational::new(p(n), p(d)).unwrap()
    }

    fn int(c: i64) -> Rational {
        Rational::from_integer(c.into())
    }

    #[test]
    fn field_examples() {
        assert_eq!(&r(&[0, 1], &[1, 1]) + &r(&[1], &[1, 1]), QRational::one());
        assert_eq!(&r(&[0, -2], &[1, 1]) / &QRational::from_int(2), r(&[0, -1], &[1, 1]));
        assert_eq!(&r(&[1], &[1, 1]) * &r(&[1, 2, 1], &[1]), r(&[1, 1], &[1]));
    }

    #[test]
    fn canonical_form() {
        // (2 + 2q) / (4 + 4q^2 ...) style inputs reduce to monic denominators
        let a = r(&[2, 2], &[3, 6, 3]);
        assert_eq!(a.denom(), &p(&[1, 1]));
        assert_eq!(a.numer(), &QPolynomial::constant(Rational::new(2.into(), 3.into())));
        assert_eq!(r(&[0], &[5, 7]), QRational::zero());
        assert_eq!(QRational::zero().denom(), &QPolynomial::one());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(QRational::new(p(&[1]), QPolynomial::zero()), Err(Error::DivisionByZero));
        assert_eq!(QRational::one().checked_div(&QRational::zero()), Err(Error::DivisionByZero));
        assert_eq!(QRational::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn invert_q_examples() {
        assert_eq!(r(&[0, 1], &[1, 1]).invert_q(), r(&[1], &[1, 1]));
        assert_eq!(QRational::one().invert_q(), QRational::one());
        assert_eq!(r(&[0, -2], &[1, 1]).invert_q(), r(&[-2], &[1, 1]));
        // q^2 / (1 + 3q) -> 1 / (q^2 + 3q)
        assert_eq!(r(&[0, 0, 1], &[1, 3]).invert_q(), r(&[1], &[0, 3, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(r(&[0, -2], &[1, 1]).eval(&int(1)), Ok(int(-1)));
        assert_eq!(QRational::one().eval(&int(7)), Ok(int(1)));
        assert!(matches!(r(&[0, 1], &[1, 1]).eval(&int(-1)), Err(Error::Pole(_))));
    }
}
