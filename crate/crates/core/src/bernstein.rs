//! Bernstein basis polynomials `B_{k,n}(x) = C(n,k) x^k (1-x)^{n-k}`, the
//! Bernstein operator and products of bases, all expanded in the monomial
//! basis so the moment oracle can integrate them.

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::exactq::{QRational, Rational, XPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BernsteinIndex {
    k: usize,
    n: usize,
}

impl BernsteinIndex {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Index(format!("k = {k} exceeds n = {n}")));
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// `c · x^a (1 - x)^b`, expanded.
fn scaled_monomial_product(c: BigInt, a: usize, b: usize) -> XPolynomial {
    let base = XPolynomial::from_ints(&[1, -1]).pow(b as u32);
    let shifted: Vec<QRational> = std::iter::repeat_n(QRational::zero(), a)
        .chain(base.coeffs().iter().cloned())
        .collect();
    XPolynomial::new(shifted).scale_rational(&Rational::from_integer(c))
}

pub fn bernstein_basis(idx: BernsteinIndex) -> XPolynomial {
    scaled_monomial_product(binomial(idx.n, idx.k), idx.k, idx.n - idx.k)
}

/// `B_{n-k,n}(1 - x)`, which equals `B_{k,n}(x)`.
pub fn bernstein_reflect(idx: BernsteinIndex) -> XPolynomial {
    let mirrored = BernsteinIndex { k: idx.n - idx.k, n: idx.n };
    bernstein_basis(mirrored).compose_linear(&QRational::from_int(-1), &QRational::one())
}

/// `B_n(f, x) = sum_k f(k/n) B_{k,n}(x)` from pre-sampled values
/// `samples[k] = f(k/n)`.
pub fn bernstein_operator(samples: &[Rational], n: usize) -> Result<XPolynomial> {
    if samples.len() != n + 1 {
        return Err(Error::Length { expected: n + 1, actual: samples.len() });
    }
    Ok(samples.iter().enumerate().fold(XPolynomial::zero(), |acc, (k, f)| {
        let basis = bernstein_basis(BernsteinIndex { k, n });
        &acc + &basis.scale_rational(f)
    }))
}

/// `prod_s B_{k,n_s}(x) = prod_s C(n_s,k) · x^{mk} (1-x)^{sum n_s - mk}`.
///
/// All indices must share the same `k`.
pub fn bernstein_product(indices: &[BernsteinIndex]) -> Result<XPolynomial> {
    let first = indices
        .first()
        .ok_or_else(|| Error::Index("empty Bernstein product".into()))?;
    let k = first.k;
    if let Some(bad) = indices.iter().find(|i| i.k != k) {
        return Err(Error::Index(format!("mixed k in product: {} and {}", k, bad.k)));
    }
    let m = indices.len();
    let total: usize = indices.iter().map(|i| i.n).sum();
    let c = indices.iter().fold(BigInt::one(), |acc, i| acc * binomial(i.n, k));
    Ok(scaled_monomial_product(c, m * k, total - m * k))
}

/// Convenience for a shared `k` over the given degrees.
pub fn bernstein_indices(k: usize, degrees: &[usize]) -> Result<Vec<BernsteinIndex>> {
    degrees.iter().map(|&n| BernsteinIndex::new(k, n)).collect()
}
