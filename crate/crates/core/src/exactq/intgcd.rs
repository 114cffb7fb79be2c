//! Gcd of rational polynomials through their primitive integer parts.
//!
//! The heuristic gcd evaluates both polynomials at a large integer, takes
//! the integer gcd and reads the candidate back from its balanced digits.
//! A candidate is only accepted after it divides both inputs exactly, so the
//! result is always correct; after a few unlucky evaluation points we fall
//! back to a primitive remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

pub(crate) type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive(p: IntPoly) -> IntPoly {
    let p = trim(p);
    let Some(lc) = p.last() else {
        return p;
    };
    let mut c = content(&p);
    if lc.is_negative() {
        c = -c;
    }
    p.into_iter().map(|x| x / &c).collect()
}

/// Clears denominators and content.
pub(crate) fn primitive_from_rationals(coeffs: &[Rational]) -> IntPoly {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    primitive(coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect())
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Whether `divisor` divides `p` exactly over `Z`.
fn divides(divisor: &[BigInt], p: &[BigInt]) -> bool {
    let dd = divisor.len() - 1;
    let lc = &divisor[dd];
    let mut rem = p.to_vec();
    if rem.len() < divisor.len() {
        return rem.iter().all(Zero::is_zero);
    }
    for i in (0..=rem.len() - divisor.len()).rev() {
        let top = &rem[i + dd];
        if top.is_zero() {
            continue;
        }
        let (quot, r) = top.div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        for (j, c) in divisor.iter().enumerate() {
            rem[i + j] -= &quot * c;
        }
    }
    rem.iter().all(Zero::is_zero)
}

fn heuristic(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let mut xi: BigInt = 2 * max_norm(a).min(max_norm(b)) + 29;
    for _ in 0..6 {
        let g = eval(a, &xi).gcd(&eval(b, &xi));
        let half = &xi >> 1;
        let mut digits = Vec::new();
        let mut rest = g;
        while !rest.is_zero() {
            let mut d = rest.mod_floor(&xi);
            if d > half {
                d -= &xi;
            }
            rest = (rest - &d) / &xi;
            digits.push(d);
        }
        let cand = primitive(digits);
        if !cand.is_empty() && divides(&cand, a) && divides(&cand, b) {
            return Some(cand);
        }
        xi = xi * 73794 / 27011;
    }
    None
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut rem = a.to_vec();
    while rem.len() > db {
        let top = rem.pop().expect("nonempty");
        let shift = rem.len() - db;
        for c in rem.iter_mut() {
            *c *= lc;
        }
        for (j, c) in b[..db].iter().enumerate() {
            rem[shift + j] -= &top * c;
        }
        rem = trim(rem);
    }
    trim(rem)
}

fn primitive_prs(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (mut a, mut b) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    while !b.is_empty() {
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Primitive gcd of two primitive integer polynomials (positive leading
/// coefficient). Both inputs must be nonzero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    heuristic(a, b).unwrap_or_else(|| primitive(primitive_prs(a, b)))
}

pub(crate) fn to_rationals(p: &[BigInt]) -> Vec<Rational> {
    p.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn heuristic_and_prs_agree() {
        let g = ip(&[3, -7, 2]);
        let a = mul(&g, &ip(&[5, 0, 11, 1]));
        let b = mul(&g, &ip(&[-13, 4]));
        assert_eq!(heuristic(&a, &b), Some(ip(&[3, -7, 2])));
        assert_eq!(primitive(primitive_prs(&a, &b)), ip(&[3, -7, 2]));
    }

    #[test]
    fn coprime_inputs() {
        assert_eq!(gcd(&ip(&[1, 1]), &ip(&[-1, 1])), ip(&[1]));
        assert_eq!(gcd(&ip(&[0, 0, 1]), &ip(&[0, 1])), ip(&[0, 1]));
    }

    #[test]
    fn rational_clearing() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(primitive_from_rationals(&[r(1, 2), r(-1, 3)]), ip(&[-3, 2]));
    }
}
