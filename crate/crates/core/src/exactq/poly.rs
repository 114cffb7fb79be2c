use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{intgcd, Rational};

/// Dense univariate polynomial in `q` over the rationals.
///
/// `coeffs[i]` is the coefficient of `q^i`. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides through by the leading coefficient. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, q0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q0 + c)
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("polynomial division by zero");
        let d_lc_inv = divisor.coeffs[d_deg].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d_deg] * &d_lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Self {
        let (quot, rem) = self.div_rem(divisor);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        quot
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let a = intgcd::primitive_from_rationals(&self.coeffs);
        let b = intgcd::primitive_from_rationals(&other.coeffs);
        Self::new(intgcd::to_rationals(&intgcd::gcd(&a, &b))).monic()
    }

    /// Textbook Euclidean gcd over `Q` with monic remainders. Kept as an
    /// independent check on [`QPolynomial::gcd`].
    pub fn gcd_euclid(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    /// `q^shift * p(1/q)` where `shift >= deg p`: reverses the coefficient
    /// order into a window of length `shift + 1`.
    pub(crate) fn reciprocal(&self, shift: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); shift + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[shift - i] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}`; the zero polynomial for `m = 0`.
pub fn q_bracket(m: usize) -> QPolynomial {
    QPolynomial::new(vec![Rational::one(); m])
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolynomial::new(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(QPolynomial, Add::add, Sub::sub, Mul::mul);

impl Neg for QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_ints(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 1, 1]) + &QPolynomial::zero(), p(&[1, 1, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert!((&p(&[2, 3]) - &p(&[2, 3])).is_zero());
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(p(&[0, 0]), QPolynomial::zero());
        assert_eq!(QPolynomial::zero().degree(), None);
    }

    #[test]
    fn brackets() {
        assert!(q_bracket(0).is_zero());
        assert_eq!(q_bracket(1), QPolynomial::one());
        assert_eq!(q_bracket(3), p(&[1, 1, 1]));
        // (1 - q^3) / (1 - q)
        let (quot, rem) = p(&[1, 0, 0, -1]).div_rem(&p(&[1, -1]));
        assert!(rem.is_zero());
        assert_eq!(quot, q_bracket(3));
        for m in 0..=50usize {
            assert_eq!(q_bracket(m).eval(&Rational::one()), Rational::from_integer(m.into()));
        }
    }

    #[test]
    fn gcd_is_monic() {
        // (1+q)^2 (2 - q) and 3 (1+q)(q + 5)
        let a = &p(&[1, 2, 1]) * &p(&[2, -1]);
        let b = &p(&[3, 3]) * &p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(a.gcd(&QPolynomial::zero()), a.monic());
        assert_eq!(p(&[4]).gcd(&p(&[0, 6])), QPolynomial::one());
    }

    #[test]
    fn reciprocal_reverses() {
        assert_eq!(p(&[1, 2, 3]).reciprocal(2), p(&[3, 2, 1]));
        assert_eq!(p(&[0, 1]).reciprocal(1), p(&[1]));
        assert_eq!(p(&[5]).reciprocal(2), p(&[0, 0, 5]));
    }
}
