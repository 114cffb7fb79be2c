//! Plain-text and LaTeX renderings.
//!
//! Plain text writes polynomials in ascending powers with explicit `*` and
//! `^`, e.g. `1+2*q-3/2*q^2`. A rational function with a non-trivial
//! denominator is written `(num)/(den)`, so `-2q/(1+q)` renders as
//! `(-2*q)/(1+q)`. [`QRational::from_str`] reads this format back exactly.

use std::fmt::{self, Display, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{QPolynomial, QRational, Rational, XPolynomial};
use crate::error::{Error, Result};

fn plain_poly(p: &QPolynomial, var: char) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match k {
            0 => c.to_string(),
            _ => {
                let power = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                if c.is_one() {
                    power
                } else if *c == -Rational::one() {
                    format!("-{power}")
                } else {
                    format!("{c}*{power}")
                }
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

fn latex_poly(p: &QPolynomial) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match k {
            0 => latex_coeff(c),
            _ => {
                let power = if k == 1 { "q".to_string() } else { format!("q^{{{k}}}") };
                if c.is_one() {
                    power
                } else if *c == -Rational::one() {
                    format!("-{power}")
                } else {
                    format!("{}{power}", latex_coeff(c))
                }
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&plain_poly(self, 'q'))
    }
}

impl Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({})/({})", self.numer(), self.denom())
        }
    }
}

impl QRational {
    pub fn to_latex(&self) -> String {
        if self.denom().is_one() {
            latex_poly(self.numer())
        } else {
            format!("\\frac{{{}}}{{{}}}", latex_poly(self.numer()), latex_poly(self.denom()))
        }
    }
}

/// Renders as `c0 + [c1]*x + ...`; coefficients that depend on `q` are
/// bracketed.
impl Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = match c.as_constant() {
                Some(r) => r.to_string(),
                None => format!("[{c}]"),
            };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    f.write_char('x')?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_char('0')?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().ok()
    }

    fn rational_function(&mut self) -> Result<QRational> {
        let num = self.operand()?;
        let den = if self.eat('/') { self.operand()? } else { QPolynomial::one() };
        if self.pos != self.chars.len() {
            return Err(self.err("trailing input"));
        }
        QRational::new(num, den)
    }

    fn operand(&mut self) -> Result<QPolynomial> {
        if self.eat('(') {
            let p = self.polynomial()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            Ok(p)
        } else {
            self.polynomial()
        }
    }

    fn polynomial(&mut self) -> Result<QPolynomial> {
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            first = false;
            let (c, k) = self.term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            if negative {
                coeffs[k] -= c;
            } else {
                coeffs[k] += c;
            }
        }
        Ok(QPolynomial::new(coeffs))
    }

    fn term(&mut self) -> Result<(Rational, usize)> {
        let coeff = match self.integer() {
            Some(n) => {
                // a '/' followed by a digit continues the coefficient;
                // otherwise it separates numerator from denominator
                if self.peek() == Some('/') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                    let d = self.integer().ok_or_else(|| self.err("expected denominator"))?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    Some(Rational::new(n, d))
                } else {
                    Some(Rational::from_integer(n))
                }
            }
            None => None,
        };
        let had_star = self.eat('*');
        if self.eat('q') {
            let k = if self.eat('^') {
                let e = self.integer().ok_or_else(|| self.err("expected exponent"))?;
                usize::try_from(e).map_err(|_| self.err("exponent too large"))?
            } else {
                1
            };
            Ok((coeff.unwrap_or_else(Rational::one), k))
        } else if had_star {
            Err(self.err("expected 'q' after '*'"))
        } else {
            coeff.map(|c| (c, 0)).ok_or_else(|| self.err("expected a term"))
        }
    }
}

impl FromStr for QRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).rational_function()
    }
}
