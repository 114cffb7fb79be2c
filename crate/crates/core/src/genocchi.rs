//! q-Genocchi numbers and polynomials with weight zero.
//!
//! Two independent routes produce `G~_{n,q}`:
//!
//! * the umbral recurrence `q (G~ + 1)^n + G~_n = [2]_q [n = 1]`, `G~_0 = 0`,
//!   memoized in a [`GenocchiTable`];
//! * exact inversion of the generating function `[2]_q t / (q e^t + 1)`
//!   as a power series over `Q(q)` ([`genocchi_series_oracle`]).
//!
//! Moments of the fermionic measure are `∫ ξ^n dμ_{-q} = G~_{n+1,q} / (n+1)`
//! and [`integrate_polynomial`] extends them linearly; that is the oracle
//! every integral identity is checked against.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{binomial_q, factorial};
use crate::exactq::{two_q, QRational, Rational, XPolynomial};

/// Memoized `G~_{0,q}, G~_{1,q}, ...`.
///
/// Growth is single-writer behind a lock; reads of an already computed
/// prefix only take the read lock. Asking for index `n` computes every
/// lower index first.
#[derive(Debug)]
pub struct GenocchiTable {
    values: RwLock<Vec<QRational>>,
}

impl Default for GenocchiTable {
    fn default() -> Self {
        Self::new()
    }
}

impl GenocchiTable {
    pub fn new() -> Self {
        Self { values: RwLock::new(vec![QRational::zero()]) }
    }

    /// Number of values computed so far.
    pub fn len(&self) -> usize {
        self.values.read().expect("genocchi table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, n: usize) -> QRational {
        {
            let values = self.values.read().expect("genocchi table poisoned");
            if let Some(v) = values.get(n) {
                return v.clone();
            }
        }
        self.extend_to(n);
        self.values.read().expect("genocchi table poisoned")[n].clone()
    }

    /// Ensures indices `0..=n` are present.
    pub fn extend_to(&self, n: usize) {
        let mut values = self.values.write().expect("genocchi table poisoned");
        let q_over = &QRational::q() / &two_q();
        while values.len() <= n {
            let m = values.len();
            let mut acc = QRational::zero();
            for (k, g) in values.iter().enumerate() {
                if !g.is_zero() {
                    acc = &acc + &g.scale(&binomial_q(m, k));
                }
            }
            // (1+q) G_m = [2]_q [m = 1] - q sum_{k<m} C(m,k) G_k
            let mut next = -(&q_over * &acc);
            if m == 1 {
                next = &next + &QRational::one();
            }
            values.push(next);
        }
    }

    /// Copy of the computed prefix.
    pub fn snapshot(&self) -> Vec<QRational> {
        self.values.read().expect("genocchi table poisoned").clone()
    }
}

/// Process-wide table shared by the free functions of this module.
pub fn shared_table() -> &'static GenocchiTable {
    static TABLE: OnceLock<GenocchiTable> = OnceLock::new();
    TABLE.get_or_init(GenocchiTable::new)
}

/// Truncated exponential generating function: `coefficients[n]` is the
/// coefficient of `t^n / n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub order: usize,
    pub coefficients: Vec<QRational>,
}

/// `G~_{n,q}` from the recurrence.
pub fn genocchi_number(n: usize) -> QRational {
    shared_table().get(n)
}

/// Multiplicative inverse of a power series with invertible constant term,
/// truncated to `len` coefficients (ordinary, not exponential).
fn invert_series(coeffs: &[QRational], len: usize) -> Vec<QRational> {
    let head_inv = coeffs[0].recip().expect("series constant term must be nonzero");
    let mut inv: Vec<QRational> = Vec::with_capacity(len);
    if len == 0 {
        return inv;
    }
    inv.push(head_inv.clone());
    for n in 1..len {
        let mut acc = QRational::zero();
        for k in 1..=n.min(coeffs.len() - 1) {
            acc = &acc + &(&coeffs[k] * &inv[n - k]);
        }
        inv.push(-(&head_inv * &acc));
    }
    inv
}

fn inv_factorial(k: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(k))
}

/// Expands `[2]_q t / (q e^t + 1)` to order `order` by series inversion.
pub fn genocchi_series_oracle(order: usize) -> SeriesExpansion {
    let q = QRational::q();
    // q e^t + 1 = (1 + q) + sum_{k>=1} q t^k / k!
    let denom: Vec<QRational> = (0..=order)
        .map(|k| if k == 0 { two_q() } else { q.scale(&inv_factorial(k)) })
        .collect();
    let inv = invert_series(&denom, order);
    let two = two_q();
    let mut coefficients = vec![QRational::zero()];
    for n in 1..=order {
        let ordinary = &two * &inv[n - 1];
        coefficients.push(ordinary.scale(&Rational::from_integer(factorial(n))));
    }
    SeriesExpansion { order, coefficients }
}

/// `G~_{n,q}(x) = sum_k C(n,k) G~_{k,q} x^{n-k}`.
pub fn genocchi_polynomial(n: usize) -> XPolynomial {
    genocchi_polynomial_in(shared_table(), n)
}

pub fn genocchi_polynomial_in(table: &GenocchiTable, n: usize) -> XPolynomial {
    table.extend_to(n);
    let values = table.snapshot();
    let coeffs = (0..=n)
        .map(|i| values[n - i].scale(&binomial_q(n, i)))
        .collect();
    XPolynomial::new(coeffs)
}

/// `H_n(-1/q, 0)` for `n = 0..=n_max`: exponential coefficients of
/// `(1 - u) / (e^t - u)` at `u = -1/q`.
fn frobenius_euler_constants(n_max: usize) -> Vec<QRational> {
    let one_minus_u = &QRational::one() + &QRational::q().recip().expect("q is nonzero");
    let denom: Vec<QRational> = (0..=n_max)
        .map(|k| if k == 0 { one_minus_u.clone() } else { QRational::constant(inv_factorial(k)) })
        .collect();
    invert_series(&denom, n_max + 1)
        .iter()
        .enumerate()
        .map(|(j, h)| (&one_minus_u * h).scale(&Rational::from_integer(factorial(j))))
        .collect()
}

/// `H_0(-1/q, x), ..., H_{n_max}(-1/q, x)` by exact series division of
/// `(1 - u) e^{xt}` by `e^t - u`.
pub fn frobenius_euler_polynomials(n_max: usize) -> Vec<XPolynomial> {
    let eta = frobenius_euler_constants(n_max);
    (0..=n_max)
        .map(|n| {
            XPolynomial::new((0..=n).map(|i| eta[n - i].scale(&binomial_q(n, i))).collect())
        })
        .collect()
}

pub fn frobenius_euler_polynomial(n: usize) -> XPolynomial {
    frobenius_euler_polynomials(n).pop().expect("at least one polynomial")
}

/// `∫ ξ^n dμ_{-q}(ξ) = G~_{n+1,q} / (n+1)`.
pub fn moment(n: usize) -> QRational {
    moment_in(shared_table(), n)
}

pub fn moment_in(table: &GenocchiTable, n: usize) -> QRational {
    table.get(n + 1).scale(&Rational::new(BigInt::one(), BigInt::from(n + 1)))
}

/// Integrates a polynomial in the integration variable against `μ_{-q}`
/// by linearity over the moments.
pub fn integrate_polynomial(p: &XPolynomial) -> QRational {
    integrate_polynomial_in(shared_table(), p)
}

pub fn integrate_polynomial_in(table: &GenocchiTable, p: &XPolynomial) -> QRational {
    if let Some(d) = p.degree() {
        table.extend_to(d + 1);
    }
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(QRational::zero(), |acc, (k, c)| &acc + &(c * &moment_in(table, k)))
}

/// The `q = 1` specialization `G_n`.
pub fn classical_genocchi(n: usize) -> Rational {
    genocchi_number(n)
        .eval(&Rational::one())
        .expect("denominators are powers of 1+q")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::QPolynomial;

    fn r(n: &[i64], d: &[i64]) -> QRational {
        QRational::new(QPolynomial::from_ints(n), QPolynomial::from_ints(d)).unwrap()
    }

    fn int(c: i64) -> Rational {
        Rational::from_integer(c.into())
    }

    #[test]
    fn first_numbers() {
        assert_eq!(genocchi_number(0), QRational::zero());
        assert_eq!(genocchi_number(1), QRational::one());
        assert_eq!(genocchi_number(2), r(&[0, -2], &[1, 1]));
        // 3q(q-1)/(1+q)^2
        assert_eq!(genocchi_number(3), r(&[0, -3, 3], &[1, 2, 1]));
        // -4q(q^2-4q+1)/(1+q)^3
        assert_eq!(genocchi_number(4), r(&[0, -4, 16, -4], &[1, 3, 3, 1]));
    }

    #[test]
    fn denominators_are_powers_of_one_plus_q() {
        let one_plus_q = QPolynomial::from_ints(&[1, 1]);
        for n in 1..=12 {
            let g = genocchi_number(n);
            let (_, rem) = one_plus_q.pow((n - 1) as u32).div_rem(g.denom());
            assert!(rem.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn series_oracle_small_orders() {
        assert_eq!(genocchi_series_oracle(0).coefficients, vec![QRational::zero()]);
        assert_eq!(genocchi_series_oracle(1).coefficients, vec![QRational::zero(), QRational::one()]);
        let s2 = genocchi_series_oracle(2);
        assert_eq!(s2.order, 2);
        assert_eq!(s2.coefficients, vec![QRational::zero(), QRational::one(), r(&[0, -2], &[1, 1])]);
    }

    #[test]
    fn recurrence_matches_series() {
        let series = genocchi_series_oracle(14);
        for (n, c) in series.coefficients.iter().enumerate() {
            assert_eq!(&genocchi_number(n), c, "n = {n}");
        }
    }

    #[test]
    fn polynomial_examples() {
        assert!(genocchi_polynomial(0).is_zero());
        assert_eq!(genocchi_polynomial(1), XPolynomial::one());
        assert_eq!(
            genocchi_polynomial(2),
            XPolynomial::new(vec![r(&[0, -2], &[1, 1]), QRational::from_int(2)])
        );
        for n in 1..=10 {
            let p = genocchi_polynomial(n);
            assert_eq!(p.degree(), Some(n - 1));
            assert_eq!(p.leading(), Some(&QRational::from_int(n as i64)));
            assert_eq!(p.eval(&QRational::zero()), genocchi_number(n));
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_euler_polynomial(0), XPolynomial::one());
        let h1 = frobenius_euler_polynomial(1);
        assert_eq!(h1.coeff(0), r(&[0, -1], &[1, 1]));
        assert_eq!(h1, XPolynomial::new(vec![r(&[0, -1], &[1, 1]), QRational::one()]));
        let all = frobenius_euler_polynomials(8);
        for (n, h) in all.iter().enumerate() {
            assert_eq!(h.degree(), Some(n));
            assert_eq!(h.leading(), Some(&QRational::one()));
            let g = genocchi_polynomial(n + 1).scale_rational(&Rational::new(1.into(), ((n + 1) as i64).into()));
            assert_eq!(h, &g, "n = {n}");
        }
    }

    #[test]
    fn moments_and_oracle() {
        assert_eq!(moment(0), QRational::one());
        assert_eq!(moment(1), r(&[0, -1], &[1, 1]));
        assert_eq!(moment(1).eval(&int(1)), Ok(Rational::new((-1).into(), 2.into())));
        assert_eq!(integrate_polynomial(&XPolynomial::one()), QRational::one());
        assert_eq!(integrate_polynomial(&XPolynomial::from_ints(&[1, -1])), r(&[1, 2], &[1, 1]));
        assert_eq!(integrate_polynomial(&XPolynomial::from_ints(&[0, 0, 1])), r(&[0, -1, 1], &[1, 2, 1]));
    }

    #[test]
    fn classical_values() {
        let got: Vec<Rational> = (1..=6).map(classical_genocchi).collect();
        let series = genocchi_series_oracle(6);
        let at_one: Vec<Rational> = series.coefficients[1..].iter().map(|c| c.eval(&int(1)).unwrap()).collect();
        assert_eq!(got, at_one);
        assert_eq!(got, [1, -1, 0, 1, 0, -3].map(int).to_vec());
    }

    #[test]
    fn table_is_shareable() {
        let table = GenocchiTable::new();
        std::thread::scope(|s| {
            for n in [5usize, 9, 3, 7] {
                let table = &table;
                s.spawn(move || table.get(n));
            }
        });
        assert!(table.len() >= 10);
        assert_eq!(table.get(4), genocchi_number(4));
    }
}
