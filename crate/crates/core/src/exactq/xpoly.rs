use std::ops::{Add, Mul, Neg, Sub};

use super::poly::forward_owned;
use super::{QRational, Rational};
use crate::combinat::binomial_q;

/// Dense polynomial in `x` whose coefficients are rational functions of `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XPolynomial {
    coeffs: Vec<QRational>,
}

impl XPolynomial {
    pub fn new(mut coeffs: Vec<QRational>) -> Self {
        while coeffs.last().is_some_and(QRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QRational::one())
    }

    pub fn constant(c: QRational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(QRational::one(), 1)
    }

    pub fn monomial(c: QRational, degree: usize) -> Self {
        let mut coeffs = vec![QRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// Polynomial with integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| QRational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[QRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QRational) -> QRational) -> Self {
        Self::new(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x0: &QRational) -> QRational {
        self.coeffs
            .iter()
            .rev()
            .fold(QRational::zero(), |acc, c| &(&acc * x0) + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `P(x + c)` by binomial expansion of each power.
    pub fn compose_shift(&self, c: &QRational) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![QRational::zero(); n];
        let mut c_pows = Vec::with_capacity(n);
        let mut acc = QRational::one();
        for _ in 0..n {
            c_pows.push(acc.clone());
            acc = &acc * c;
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a (x + c)^i = a sum_j C(i, j) c^{i-j} x^j
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let term = (a * &c_pows[i - j]).scale(&binomial_q(i, j));
                *slot = &*slot + &term;
            }
        }
        Self::new(out)
    }

    /// `P(a x + b)`.
    pub fn compose_linear(&self, a: &QRational, b: &QRational) -> Self {
        let inner = Self::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * &inner) + &Self::constant(c.clone()))
    }
}

impl Add for &XPolynomial {
    type Output = XPolynomial;

    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPolynomial::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Neg for &XPolynomial {
    type Output = XPolynomial;

    fn neg(self) -> XPolynomial {
        XPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for XPolynomial {
    type Output = XPolynomial;

    fn neg(self) -> XPolynomial {
        -&self
    }
}

impl Sub for &XPolynomial {
    type Output = XPolynomial;

    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &XPolynomial {
    type Output = XPolynomial;

    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return XPolynomial::zero();
        }
        let mut out = vec![QRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XPolynomial::new(out)
    }
}

forward_owned!(XPolynomial, Add::add, Sub::sub, Mul::mul);
