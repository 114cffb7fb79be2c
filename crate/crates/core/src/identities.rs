//! Mechanical verification of the q-Genocchi identities.
//!
//! Every verifier reduces both sides of an identity to canonical
//! [`QRational`] or [`XPolynomial`] form and compares them structurally; no
//! tolerance is involved. Integral identities are adjudicated against the
//! moment oracle [`integrate_polynomial`].
//!
//! Two printed statements do not survive this check verbatim: the `k != 0`
//! right sides of the single and product Bernstein identities, and the
//! `q^-1` subscript on the left side of the product identity. Those
//! verifiers compute the printed reading and the corrected reading side by
//! side and report `CORRECTED_PASS` with the correction spelled out.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bernstein::{bernstein_basis, bernstein_indices, bernstein_product, BernsteinIndex};
use crate::combinat::{binomial_q, sign};
use crate::error::{Error, Result};
use crate::exactq::{two_q, QRational, Rational, XPolynomial};
use crate::genocchi::{
    frobenius_euler_polynomials, genocchi_number, genocchi_polynomial, genocchi_series_oracle,
    integrate_polynomial, moment,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    Eq6,
    Eq7,
    Thm1,
    Thm2Eq10,
    Thm3Eq13,
    Thm4Eq11,
    Thm5Eq12,
    PropEq14,
    PropEq15,
    Thm6Eq16,
    Thm7,
    Thm8,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::Eq6,
        IdentityId::Eq7,
        IdentityId::Thm1,
        IdentityId::Thm2Eq10,
        IdentityId::Thm3Eq13,
        IdentityId::Thm4Eq11,
        IdentityId::Thm5Eq12,
        IdentityId::PropEq14,
        IdentityId::PropEq15,
        IdentityId::Thm6Eq16,
        IdentityId::Thm7,
        IdentityId::Thm8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Eq6 => "EQ6",
            IdentityId::Eq7 => "EQ7",
            IdentityId::Thm1 => "THM1",
            IdentityId::Thm2Eq10 => "THM2_EQ10",
            IdentityId::Thm3Eq13 => "THM3_EQ13",
            IdentityId::Thm4Eq11 => "THM4_EQ11",
            IdentityId::Thm5Eq12 => "THM5_EQ12",
            IdentityId::PropEq14 => "PROP_EQ14",
            IdentityId::PropEq15 => "PROP_EQ15",
            IdentityId::Thm6Eq16 => "THM6_EQ16",
            IdentityId::Thm7 => "THM7",
            IdentityId::Thm8 => "THM8",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Accepts the full id (`THM4_EQ11`) or its leading component (`THM4`,
/// `EQ11`), case-insensitively.
impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == wanted || id.as_str().split('_').any(|part| part == wanted))
            .ok_or_else(|| Error::Parse(format!("unknown identity id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    CorrectedPass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over one parameter set.
///
/// `FAIL` and `CORRECTED_PASS` always carry a witness; `CORRECTED_PASS`
/// also carries the correction that was applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: BTreeMap<String, i64>,
    pub verdict: Verdict,
    pub corrected_form: Option<String>,
    pub witness: Option<Witness>,
}

pub type Params = BTreeMap<String, i64>;

pub fn params(pairs: &[(&str, usize)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v as i64)).collect()
}

impl IdentityReport {
    pub fn pass(id: IdentityId, params: Params) -> Self {
        Self { id, params, verdict: Verdict::Pass, corrected_form: None, witness: None }
    }

    pub fn fail(id: IdentityId, params: Params, lhs: impl ToString, rhs: impl ToString) -> Self {
        Self {
            id,
            params,
            verdict: Verdict::Fail,
            corrected_form: None,
            witness: Some(Witness { lhs: lhs.to_string(), rhs: rhs.to_string() }),
        }
    }

    pub fn corrected(
        id: IdentityId,
        params: Params,
        note: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        Self {
            id,
            params,
            verdict: Verdict::CorrectedPass,
            corrected_form: Some(note.into()),
            witness: Some(Witness { lhs: lhs.to_string(), rhs: rhs.to_string() }),
        }
    }

    /// PASS when the sides agree, FAIL with both sides as witness otherwise.
    fn compare<T: PartialEq + fmt::Display>(id: IdentityId, params: Params, lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Self::pass(id, params)
        } else {
            Self::fail(id, params, lhs, rhs)
        }
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// A verifier run: the summary over the whole range, one report per
/// parameter set, and probes outside the stated range that are recorded but
/// do not count toward the summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub report: IdentityReport,
    pub instances: Vec<IdentityReport>,
    pub probes: Vec<IdentityReport>,
}

impl Verification {
    fn from_instances(id: IdentityId, params: Params, instances: Vec<IdentityReport>) -> Self {
        let report = summarize(id, params, &instances);
        Self { report, instances, probes: Vec::new() }
    }

    fn with_probes(mut self, probes: Vec<IdentityReport>) -> Self {
        self.probes = probes;
        self
    }

    pub fn verdict(&self) -> Verdict {
        self.report.verdict
    }
}

fn summarize(id: IdentityId, params: Params, instances: &[IdentityReport]) -> IdentityReport {
    if let Some(failed) = instances.iter().find(|r| r.is_fail()) {
        return IdentityReport { id, params, ..failed.clone() };
    }
    let corrected: Vec<&IdentityReport> =
        instances.iter().filter(|r| r.verdict == Verdict::CorrectedPass).collect();
    let Some(first) = corrected.first() else {
        return IdentityReport::pass(id, params);
    };
    let mut notes: Vec<&str> = Vec::new();
    for r in &corrected {
        for note in r.corrected_form.as_deref().into_iter().flat_map(|f| f.split("; ")) {
            if !notes.contains(&note) {
                notes.push(note);
            }
        }
    }
    IdentityReport { id, params, corrected_form: Some(notes.join("; ")), ..(*first).clone() }
}

fn inv_int(n: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(n))
}

fn pow_q(e: usize) -> QRational {
    QRational::q().pow(e as u32)
}

fn x_power(d: usize) -> XPolynomial {
    XPolynomial::monomial(QRational::one(), d)
}

/// `q^n I(f_n) + (-1)^{n-1} I(f) = [2]_q sum_{l<n} q^l (-1)^{n-1-l} f(l)` for
/// `f(x) = x^d`, `d = 0..=f_degree`. `n = 1` is reported as `EQ7`.
pub fn verify_shift_equation(n: usize, f_degree: usize) -> Verification {
    assert!(n >= 1, "shift must be positive");
    let id = if n == 1 { IdentityId::Eq7 } else { IdentityId::Eq6 };
    let qn = pow_q(n);
    let instances = (0..=f_degree)
        .map(|d| {
            let f = x_power(d);
            let shifted = f.compose_shift(&QRational::from_int(n as i64));
            let lhs = &(&qn * &integrate_polynomial(&shifted))
                + &integrate_polynomial(&f).scale(&Rational::from_integer(sign(n - 1).into()));
            let sum = (0..n).fold(QRational::zero(), |acc, l| {
                let f_l = Rational::from_integer(BigInt::from(l).pow(d as u32));
                let term = pow_q(l).scale(&(f_l * Rational::from_integer(sign(n - 1 - l).into())));
                &acc + &term
            });
            let rhs = &two_q() * &sum;
            IdentityReport::compare(id, params(&[("n", n), ("d", d)]), &lhs, &rhs)
        })
        .collect();
    Verification::from_instances(id, params(&[("n", n), ("f_degree", f_degree)]), instances)
}

/// `G~_{n+1,q}(x) / (n+1) = H_n(-1/q, x)` for `0 <= n <= n_max`.
pub fn verify_frobenius_link(n_max: usize) -> Verification {
    let id = IdentityId::Thm1;
    let frobenius = frobenius_euler_polynomials(n_max);
    let instances = frobenius
        .iter()
        .enumerate()
        .map(|(n, h)| {
            let g = genocchi_polynomial(n + 1).scale_rational(&inv_int(n + 1));
            IdentityReport::compare(id, params(&[("n", n)]), &g, h)
        })
        .collect();
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances)
}

/// `q H_n(-1/q, x+1) + H_n(-1/q, x) = [2]_q x^n`, together with its `q = 1`
/// shadow `G_n(x+1) + G_n(x) = 2n x^{n-1}`.
pub fn verify_complement(n_max: usize) -> Verification {
    let id = IdentityId::Thm2Eq10;
    let frobenius = frobenius_euler_polynomials(n_max);
    let one = QRational::one();
    let instances = frobenius
        .iter()
        .enumerate()
        .map(|(n, h)| {
            let p = params(&[("n", n)]);
            let lhs = &h.compose_shift(&one).scale(&QRational::q()) + h;
            let rhs = XPolynomial::monomial(two_q(), n);
            if lhs != rhs {
                return IdentityReport::fail(id, p, lhs, rhs);
            }
            let classical = genocchi_polynomial(n).map_coeffs(|c| {
                QRational::constant(c.eval(&Rational::one()).expect("no pole at q = 1"))
            });
            let lhs = &classical.compose_shift(&one) + &classical;
            let rhs = match n {
                0 => XPolynomial::zero(),
                _ => XPolynomial::monomial(QRational::from_int(2 * n as i64), n - 1),
            };
            IdentityReport::compare(id, p, &lhs, &rhs)
        })
        .collect();
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances)
}

fn kronecker_two_q(n: usize) -> QRational {
    if n == 1 {
        two_q()
    } else {
        QRational::zero()
    }
}

/// `q G~_{n,q}(1) + G~_{n,q} = [2]_q` for `n = 1` and `0` otherwise.
pub fn verify_boundary(n_max: usize) -> Verification {
    let id = IdentityId::Thm3Eq13;
    let q = QRational::q();
    let instances = (1..=n_max)
        .map(|n| {
            let at_one = genocchi_polynomial(n).eval(&QRational::one());
            let lhs = &(&q * &at_one) + &genocchi_number(n);
            IdentityReport::compare(id, params(&[("n", n)]), &lhs, &kronecker_two_q(n))
        })
        .collect();
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances)
}

/// The umbral form `G~_0 = 0`, `q (G~ + 1)^n + G~_n = [2]_q [n = 1]`, read
/// with `G~^k -> G~_k` (including `k = 0`). The sequence comes from the
/// series expansion, not from the recurrence this identity defines.
pub fn verify_umbral(n_max: usize) -> Verification {
    let id = IdentityId::PropEq14;
    let series = genocchi_series_oracle(n_max).coefficients;
    let q = QRational::q();
    let mut instances = vec![IdentityReport::compare(
        id,
        params(&[("n", 0), ("initial", 1)]),
        &series[0],
        &QRational::zero(),
    )];
    instances.extend((0..=n_max).map(|n| {
        let umbral = (0..=n).fold(QRational::zero(), |acc, k| &acc + &series[k].scale(&binomial_q(n, k)));
        let lhs = &(&q * &umbral) + &series[n];
        IdentityReport::compare(id, params(&[("n", n)]), &lhs, &kronecker_two_q(n))
    }));
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances)
}

/// `G~_{n,1/q}(1 - x) = (-1)^{n+1} G~_{n,q}(x)`.
pub fn verify_reflection(n_max: usize) -> Verification {
    let id = IdentityId::Thm4Eq11;
    let instances = (1..=n_max)
        .map(|n| {
            let g = genocchi_polynomial(n);
            let lhs = g
                .map_coeffs(QRational::invert_q)
                .compose_linear(&QRational::from_int(-1), &QRational::one());
            let rhs = g.scale(&QRational::from_int(sign(n + 1)));
            IdentityReport::compare(id, params(&[("n", n)]), &lhs, &rhs)
        })
        .collect();
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances)
}

/// `∫ (x + ξ)^n dμ_{-q}(ξ)`, integrating in `ξ` with `x` kept formal.
pub fn integrate_shifted_power(n: usize) -> XPolynomial {
    XPolynomial::new((0..=n).map(|j| moment(n - j).scale(&binomial_q(n, j))).collect())
}

/// `G~_{n+1,q}(x) / (n+1) = ∫ (x + ξ)^n dμ_{-q}(ξ)`.
pub fn verify_binomial_expansion(n_max: usize) -> Verification {
    let id = IdentityId::Thm5Eq12;
    let instances = (0..=n_max)
        .map(|n| {
            let lhs = genocchi_polynomial(n + 1).scale_rational(&inv_int(n + 1));
            IdentityReport::compare(id, params(&[("n", n)]), &lhs, &integrate_shifted_power(n))
        })
        .collect();
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances)
}

fn shift_two_instance(n: usize) -> IdentityReport {
    let lhs = genocchi_polynomial(n + 1).eval(&QRational::from_int(2));
    let q = QRational::q();
    let g = genocchi_number(n + 1);
    let rhs = &(&two_q() / &q).scale(&Rational::from_integer((n + 1).into())) + &(&g / &q.pow(2));
    IdentityReport::compare(IdentityId::PropEq15, params(&[("n", n)]), &lhs, &rhs)
}

/// `G~_{n+1,q}(2) = (n+1)[2]_q / q + G~_{n+1,q} / q^2` for `2 <= n <= n_max`,
/// with `n = 0` and `n = 1` recorded as probes.
pub fn verify_shift_two(n_max: usize) -> Verification {
    let id = IdentityId::PropEq15;
    let instances = (2..=n_max).map(shift_two_instance).collect();
    let probes = (0..=1).map(|n| probe(shift_two_instance(n))).collect();
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances).with_probes(probes)
}

fn probe(mut report: IdentityReport) -> IdentityReport {
    report.params.insert("probe".into(), 1);
    report
}

/// `[2]_q + q^2 G~_{N+1,1/q} / (N+1)`: the closed form for `∫ (1-ξ)^N`.
fn one_minus_xi_closed_form(n: usize) -> QRational {
    let g = genocchi_number(n + 1).invert_q().scale(&inv_int(n + 1));
    &two_q() + &(&pow_q(2) * &g)
}

fn one_minus_xi_power(n: usize) -> XPolynomial {
    XPolynomial::from_ints(&[1, -1]).pow(n as u32)
}

fn one_minus_xi_instance(n: usize) -> IdentityReport {
    let lhs = integrate_polynomial(&one_minus_xi_power(n));
    IdentityReport::compare(IdentityId::Thm6Eq16, params(&[("n", n)]), &lhs, &one_minus_xi_closed_form(n))
}

/// `∫ (1-ξ)^n dμ_{-q} = [2]_q + q^2 G~_{n+1,1/q} / (n+1)` for
/// `1 <= n <= n_max`, with `n = 0` recorded as a probe.
pub fn verify_one_minus_xi(n_max: usize) -> Verification {
    let id = IdentityId::Thm6Eq16;
    let instances = (1..=n_max).map(one_minus_xi_instance).collect();
    Verification::from_instances(id, params(&[("n_max", n_max)]), instances)
        .with_probes(vec![probe(one_minus_xi_instance(0))])
}

/// `∫ (1-ξ)^N dμ_{-q}` through the closed form, which only holds for
/// `N >= 1`; `N = 0` is the total mass 1.
fn one_minus_xi_integral(n: usize) -> QRational {
    if n == 0 {
        QRational::one()
    } else {
        one_minus_xi_closed_form(n)
    }
}

/// All quantities involved in adjudicating the single-Bernstein identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleAdjudication {
    pub n: usize,
    pub k: usize,
    /// `sum_l C(n-k,l) (-1)^l G~_{l+k+1,q} / (l+k+1)`.
    pub lhs: QRational,
    /// `C(n,k)^{-1} ∫ B_{k,n}` from the moment oracle.
    pub oracle: QRational,
    /// Right side as printed; the `k = 0` branch is read with `s = 0`.
    pub rhs_printed: QRational,
    /// Right side from expanding `ξ^k = (1 - (1-ξ))^k`:
    /// `sum_s C(k,s) (-1)^s ∫ (1-ξ)^{n-k+s}`.
    pub rhs_corrected: QRational,
}

pub fn adjudicate_bernstein_single(n: usize, k: usize) -> Result<SingleAdjudication> {
    let idx = BernsteinIndex::new(k, n)?;
    let lhs = (0..=n - k).fold(QRational::zero(), |acc, l| {
        let c = binomial_q(n - k, l) * Rational::from_integer(sign(l).into());
        &acc + &moment(l + k).scale(&c)
    });
    let oracle = integrate_polynomial(&bernstein_basis(idx)).scale(&binomial_q(n, k).recip());
    let rhs_printed = if k == 0 {
        one_minus_xi_closed_form(n)
    } else {
        (0..=k).fold(QRational::zero(), |acc, s| {
            let c = binomial_q(k, s) * Rational::from_integer(sign(k + s).into());
            &acc + &one_minus_xi_closed_form(n + s).scale(&c)
        })
    };
    let rhs_corrected = (0..=k).fold(QRational::zero(), |acc, s| {
        let c = binomial_q(k, s) * Rational::from_integer(sign(s).into());
        &acc + &one_minus_xi_integral(n - k + s).scale(&c)
    });
    Ok(SingleAdjudication { n, k, lhs, oracle, rhs_printed, rhs_corrected })
}

const SINGLE_K0_NOTE: &str = "k=0 branch read with s=0: [2]_q + q^2 G~_{n+1,q^-1}/(n+1)";
const SINGLE_K_NOTE: &str = "k!=0 branch re-indexed: sum_{s=0..k} C(k,s) (-1)^s ∫(1-ξ)^{n-k+s} dμ_{-q}, \
                             with ∫(1-ξ)^N = [2]_q + q^2 G~_{N+1,q^-1}/(N+1) for N>=1 and 1 for N=0";

/// Left side vs. oracle vs. right side of the single-Bernstein identity.
pub fn verify_bernstein_single(n: usize, k: usize) -> Result<IdentityReport> {
    let a = adjudicate_bernstein_single(n, k)?;
    let id = IdentityId::Thm7;
    let p = params(&[("n", n), ("k", k)]);
    if a.lhs != a.oracle {
        return Ok(IdentityReport::fail(id, p, &a.lhs, &a.oracle));
    }
    Ok(if k == 0 {
        if a.rhs_printed == a.oracle {
            IdentityReport::corrected(id, p, SINGLE_K0_NOTE, &a.lhs, &a.rhs_printed)
        } else {
            IdentityReport::fail(id, p, &a.lhs, &a.rhs_printed)
        }
    } else if a.rhs_printed == a.oracle {
        IdentityReport::pass(id, p)
    } else if a.rhs_corrected == a.oracle {
        IdentityReport::corrected(id, p, SINGLE_K_NOTE, &a.lhs, &a.rhs_printed)
    } else {
        IdentityReport::fail(id, p, &a.lhs, &a.rhs_printed)
    })
}

/// Single-Bernstein identity for `1 <= n <= n_max`, `0 <= k <= n`.
pub fn verify_bernstein_single_suite(n_max: usize) -> Verification {
    let instances = (1..=n_max)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .map(|(n, k)| verify_bernstein_single(n, k).expect("k <= n by construction"))
        .collect();
    Verification::from_instances(IdentityId::Thm7, params(&[("n_max", n_max)]), instances)
}

/// Which subscript on `G~` in the product identity's left side reproduces
/// the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubscriptReading {
    /// `G~_{l+mk+1,q^-1}`, as printed.
    InverseQ,
    /// `G~_{l+mk+1,q}`, as the integral of `ξ^{l+mk}` produces.
    Q,
}

impl fmt::Display for SubscriptReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubscriptReading::InverseQ => "q^-1 (as printed)",
            SubscriptReading::Q => "q",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductAdjudication {
    pub k: usize,
    pub degrees: Vec<usize>,
    /// `(prod_s C(n_s,k))^{-1} ∫ prod_s B_{k,n_s}` from the moment oracle.
    pub oracle: QRational,
    pub lhs_printed: QRational,
    pub lhs_q: QRational,
    /// Right side as printed (both branches).
    pub rhs_printed: QRational,
    /// Right side from `ξ^{mk} = (1 - (1-ξ))^{mk}`.
    pub rhs_corrected: QRational,
}

impl ProductAdjudication {
    pub fn matching_readings(&self) -> Vec<SubscriptReading> {
        let mut out = Vec::new();
        if self.lhs_printed == self.oracle {
            out.push(SubscriptReading::InverseQ);
        }
        if self.lhs_q == self.oracle {
            out.push(SubscriptReading::Q);
        }
        out
    }
}

pub fn adjudicate_bernstein_product(k: usize, degrees: &[usize]) -> Result<ProductAdjudication> {
    let indices = bernstein_indices(k, degrees)?;
    let product = bernstein_product(&indices)?;
    let m = degrees.len();
    let total: usize = degrees.iter().sum();
    let mk = m * k;
    let scale = degrees.iter().fold(Rational::one(), |acc, &n| acc * binomial_q(n, k));
    let oracle = integrate_polynomial(&product).scale(&scale.recip());

    let lhs_with = |invert: bool| {
        (0..=total - mk).fold(QRational::zero(), |acc, l| {
            let mut g = genocchi_number(l + mk + 1);
            if invert {
                g = g.invert_q();
            }
            let c = binomial_q(total - mk, l) * Rational::from_integer(sign(l).into()) * inv_int(l + mk + 1);
            &acc + &g.scale(&c)
        })
    };
    let lhs_printed = lhs_with(true);
    let lhs_q = lhs_with(false);

    let rhs_printed = if k == 0 {
        one_minus_xi_closed_form(total)
    } else {
        (0..=mk).fold(QRational::zero(), |acc, l| {
            let c = binomial_q(mk, l) * Rational::from_integer(sign(mk + l).into());
            &acc + &one_minus_xi_closed_form(total + l).scale(&c)
        })
    };
    let rhs_corrected = (0..=mk).fold(QRational::zero(), |acc, l| {
        let c = binomial_q(mk, l) * Rational::from_integer(sign(l).into());
        &acc + &one_minus_xi_integral(total - mk + l).scale(&c)
    });
    Ok(ProductAdjudication {
        k,
        degrees: degrees.to_vec(),
        oracle,
        lhs_printed,
        lhs_q,
        rhs_printed,
        rhs_corrected,
    })
}

fn product_params(k: usize, degrees: &[usize]) -> Params {
    let mut p = params(&[("m", degrees.len()), ("k", k)]);
    for (i, &n) in degrees.iter().enumerate() {
        p.insert(format!("n{}", i + 1), n as i64);
    }
    p
}

const PRODUCT_LHS_NOTE: &str = "left side: subscript q on G~_{l+mk+1} instead of the printed q^-1";
const PRODUCT_RHS_NOTE: &str = "k!=0 right side re-indexed: sum_{l=0..mk} C(mk,l) (-1)^l ∫(1-ξ)^{N-mk+l} dμ_{-q} \
                                with N = n_1+...+n_m; prod_s C(n_s,k) in place of the stray C(n,k) factor";

/// Printed left side against the oracle, trying both subscript readings,
/// plus the printed and corrected right sides.
pub fn verify_bernstein_product(k: usize, degrees: &[usize]) -> Result<IdentityReport> {
    let a = adjudicate_bernstein_product(k, degrees)?;
    let id = IdentityId::Thm8;
    let p = product_params(k, degrees);
    let readings = a.matching_readings();
    if readings.is_empty() {
        return Ok(IdentityReport::fail(id, p, &a.lhs_printed, &a.oracle));
    }
    let rhs_printed_ok = a.rhs_printed == a.oracle;
    if !rhs_printed_ok && a.rhs_corrected != a.oracle {
        return Ok(IdentityReport::fail(id, p, &a.oracle, &a.rhs_printed));
    }
    let lhs_printed_ok = readings.contains(&SubscriptReading::InverseQ);
    if lhs_printed_ok && rhs_printed_ok {
        return Ok(IdentityReport::pass(id, p));
    }
    let mut notes = Vec::new();
    if !lhs_printed_ok {
        notes.push(PRODUCT_LHS_NOTE);
    }
    if !rhs_printed_ok {
        notes.push(PRODUCT_RHS_NOTE);
    }
    let rhs = if rhs_printed_ok { &a.rhs_printed } else { &a.oracle };
    Ok(IdentityReport::corrected(id, p, notes.join("; "), &a.lhs_printed, rhs))
}

/// Every degree vector with `1 <= m <= m_max` entries in `1..=deg_max`, in
/// lexicographic order.
pub fn product_degree_vectors(m_max: usize, deg_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let mut current = vec![1; m];
        loop {
            out.push(current.clone());
            let Some(pos) = current.iter().rposition(|&d| d < deg_max) else {
                break;
            };
            current[pos] += 1;
            for d in &mut current[pos + 1..] {
                *d = 1;
            }
        }
    }
    out
}

/// Product identity over all degree vectors and valid `k`. The summary
/// names the subscript reading that matches the oracle, and fails if the
/// matching reading is not the same single reading everywhere.
pub fn verify_bernstein_product_suite(m_max: usize, deg_max: usize) -> Verification {
    let id = IdentityId::Thm8;
    let mut instances = Vec::new();
    let mut readings = Vec::new();
    for degrees in product_degree_vectors(m_max, deg_max) {
        let min = *degrees.iter().min().expect("nonempty");
        for k in 0..=min {
            let a = adjudicate_bernstein_product(k, &degrees).expect("k <= min degree");
            readings.push(a.matching_readings());
            instances.push(verify_bernstein_product(k, &degrees).expect("k <= min degree"));
        }
    }
    let p = params(&[("m_max", m_max), ("deg_max", deg_max)]);
    let mut v = Verification::from_instances(id, p, instances);
    let uniform = readings.first().filter(|r| r.len() == 1).and_then(|first| {
        readings.iter().all(|r| r == first).then_some(first[0])
    });
    match uniform {
        Some(reading) if v.report.verdict != Verdict::Fail => {
            let naming = format!(
                "subscript reading {reading} matches the oracle in all {} instances",
                readings.len()
            );
            let note = match v.report.corrected_form.take() {
                Some(rest) => format!("{naming}; {rest}"),
                None => naming,
            };
            v.report.corrected_form = Some(note);
        }
        Some(_) => {}
        None => {
            let (i, bad) = readings
                .iter()
                .enumerate()
                .find(|(_, r)| r.len() != 1 || *r != &readings[0])
                .expect("non-uniform readings have an outlier");
            let inst = &v.instances[i];
            v.report = IdentityReport {
                id,
                params: v.report.params.clone(),
                verdict: Verdict::Fail,
                corrected_form: Some(format!("subscript readings not uniform: {bad:?} vs {:?}", readings[0])),
                witness: inst.witness.clone().or(Some(Witness {
                    lhs: format!("{bad:?}"),
                    rhs: format!("{:?}", readings[0]),
                })),
            };
        }
    }
    v
}

/// Default parameter ranges used by [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteRanges {
    pub shift_n_max: usize,
    pub shift_f_degree: usize,
    pub frobenius: usize,
    pub complement: usize,
    pub boundary: usize,
    pub reflection: usize,
    pub binomial: usize,
    pub umbral: usize,
    pub shift_two: usize,
    pub one_minus_xi: usize,
    pub single: usize,
    pub product_m: usize,
    pub product_deg: usize,
}

impl Default for SuiteRanges {
    fn default() -> Self {
        Self {
            shift_n_max: 5,
            shift_f_degree: 6,
            frobenius: 20,
            complement: 20,
            boundary: 30,
            reflection: 25,
            binomial: 20,
            umbral: 30,
            shift_two: 20,
            one_minus_xi: 20,
            single: 8,
            product_m: 3,
            product_deg: 4,
        }
    }
}

impl SuiteRanges {
    /// Caps every index range at `n_max`.
    pub fn capped(n_max: usize) -> Self {
        let d = Self::default();
        Self {
            shift_n_max: d.shift_n_max.min(n_max),
            shift_f_degree: d.shift_f_degree,
            frobenius: n_max,
            complement: n_max,
            boundary: n_max,
            reflection: n_max,
            binomial: n_max,
            umbral: n_max,
            shift_two: n_max,
            one_minus_xi: n_max,
            single: n_max,
            product_m: d.product_m,
            product_deg: d.product_deg.min(n_max.max(1)),
        }
    }
}

/// Runs the selected verifiers (all when `only` is empty), ordered by id.
pub fn run_suite(only: &[IdentityId], ranges: &SuiteRanges) -> Vec<Verification> {
    let mut ids: Vec<IdentityId> =
        if only.is_empty() { IdentityId::ALL.to_vec() } else { only.to_vec() };
    ids.sort();
    ids.dedup();
    let mut out = Vec::new();
    for id in ids {
        match id {
            IdentityId::Eq7 => out.push(verify_shift_equation(1, ranges.shift_f_degree)),
            IdentityId::Eq6 => {
                out.extend((2..=ranges.shift_n_max).map(|n| verify_shift_equation(n, ranges.shift_f_degree)))
            }
            IdentityId::Thm1 => out.push(verify_frobenius_link(ranges.frobenius)),
            IdentityId::Thm2Eq10 => out.push(verify_complement(ranges.complement)),
            IdentityId::Thm3Eq13 => out.push(verify_boundary(ranges.boundary)),
            IdentityId::Thm4Eq11 => out.push(verify_reflection(ranges.reflection)),
            IdentityId::Thm5Eq12 => out.push(verify_binomial_expansion(ranges.binomial)),
            IdentityId::PropEq14 => out.push(verify_umbral(ranges.umbral)),
            IdentityId::PropEq15 => out.push(verify_shift_two(ranges.shift_two)),
            IdentityId::Thm6Eq16 => out.push(verify_one_minus_xi(ranges.one_minus_xi)),
            IdentityId::Thm7 => out.push(verify_bernstein_single_suite(ranges.single)),
            IdentityId::Thm8 => {
                out.push(verify_bernstein_product_suite(ranges.product_m, ranges.product_deg))
            }
        }
    }
    out
}
