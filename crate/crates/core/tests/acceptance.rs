//! Acceptance gate. Runs every criterion, prints one `criterion N: PASS|FAIL`
//! line each, and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qgenocchi::bernstein::{bernstein_basis, bernstein_reflect};
use qgenocchi::genocchi::genocchi_series_oracle;
use qgenocchi::identities::{
    adjudicate_bernstein_single, product_degree_vectors, verify_bernstein_product_suite,
    verify_bernstein_single_suite, verify_binomial_expansion, verify_boundary, verify_complement,
    verify_frobenius_link, verify_one_minus_xi, verify_reflection, verify_shift_equation, verify_shift_two,
    verify_umbral, Verification,
};
use qgenocchi::padic::{
    is_strictly_increasing, loggamma_direct, loggamma_series, moment_convergence, Agreement, PadicContext,
    PadicNumber,
};
use qgenocchi::{BernsteinIndex, GenocchiTable, Rational, Verdict, XPolynomial};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(limit: Duration, elapsed: Duration) -> (bool, String) {
    (elapsed < limit, format!("{:.2}s of {}s", elapsed.as_secs_f64(), limit.as_secs()))
}

fn dual_pipeline() -> Outcome {
    let start = Instant::now();
    let table = GenocchiTable::new();
    table.extend_to(30);
    let series = genocchi_series_oracle(30);
    let mismatch = (0..=30).find(|&n| table.get(n) != series.coefficients[n]);
    let (fast, time) = within(Duration::from_secs(10), start.elapsed());
    match mismatch {
        Some(n) => outcome(false, format!("recurrence and series differ at n = {n}")),
        None => outcome(fast, format!("n <= 30 agree exactly, {time}")),
    }
}

fn summary(v: &Verification) -> String {
    format!("{} {:?}", v.report.id, v.report.verdict)
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let main = [
        verify_frobenius_link(20),
        verify_complement(20),
        verify_boundary(20),
        verify_reflection(20),
        verify_binomial_expansion(20),
        verify_umbral(20),
    ];
    let mut problems: Vec<String> =
        main.iter().filter(|v| v.verdict() != Verdict::Pass).map(summary).collect();

    let shift_two = verify_shift_two(20);
    if shift_two.verdict() != Verdict::Pass {
        problems.push(summary(&shift_two));
    }
    let probe_n1 = shift_two.probes.iter().find(|p| p.params["n"] == 1).expect("n = 1 probe");
    if probe_n1.verdict != Verdict::Fail {
        problems.push(format!("PROP_EQ15 n = 1 probe is {:?}, expected a recorded FAIL", probe_n1.verdict));
    }

    let one_minus = verify_one_minus_xi(20);
    if one_minus.verdict() != Verdict::Pass {
        problems.push(summary(&one_minus));
    }
    let probe_n0 = one_minus.probes.iter().find(|p| p.params["n"] == 0).expect("n = 0 probe");
    if probe_n0.verdict != Verdict::Fail {
        problems.push(format!("THM6_EQ16 n = 0 probe is {:?}, expected a recorded FAIL", probe_n0.verdict));
    }

    let (fast, time) = within(Duration::from_secs(30), start.elapsed());
    if !fast {
        problems.push(format!("too slow: {time}"));
    }
    if problems.is_empty() {
        outcome(true, format!("eight identities pass, probes recorded, {time}"))
    } else {
        outcome(false, format!("{}, {time}", problems.join("; ")))
    }
}

fn shift_equation() -> Outcome {
    let bad: Vec<String> = (1..=5)
        .map(|n| verify_shift_equation(n, 6))
        .filter(|v| v.verdict() != Verdict::Pass)
        .map(|v| format!("n = {}: {:?}", v.report.params["n"], v.report.witness))
        .collect();
    outcome(bad.is_empty(), if bad.is_empty() { "n <= 5, degree <= 6".to_string() } else { bad.join("; ") })
}

fn single_bernstein() -> Outcome {
    let suite = verify_bernstein_single_suite(8);
    let mut problems = Vec::new();
    for n in 1..=8 {
        for k in 0..=n {
            let a = adjudicate_bernstein_single(n, k).expect("valid index");
            if a.lhs != a.oracle {
                problems.push(format!("left side differs from oracle at n = {n}, k = {k}"));
            }
            if k == 0 && a.rhs_printed != a.oracle {
                problems.push(format!("k = 0 branch differs from oracle at n = {n}"));
            }
        }
    }
    if suite.instances.iter().any(|r| r.verdict == Verdict::Fail) {
        problems.push("FAIL verdict against the oracle".into());
    }
    let documented = suite.report.corrected_form.as_deref().is_some_and(|f| f.contains("s=0"));
    if !documented {
        problems.push("report does not document the s=0 reading".into());
    }
    if problems.is_empty() {
        outcome(true, format!("{} instances, {:?}", suite.instances.len(), suite.verdict()))
    } else {
        outcome(false, problems.join("; "))
    }
}

fn product_bernstein() -> Outcome {
    let suite = verify_bernstein_product_suite(3, 4);
    let expected = product_degree_vectors(3, 4)
        .iter()
        .map(|d| d.iter().min().expect("nonempty") + 1)
        .sum::<usize>();
    let names = suite.report.corrected_form.clone().unwrap_or_default();
    let pass = suite.verdict() != Verdict::Fail
        && suite.instances.len() == expected
        && names.contains("subscript reading q matches the oracle in all");
    outcome(pass, format!("{} instances, {:?}: {}", suite.instances.len(), suite.verdict(), names))
}

fn classical() -> Outcome {
    let series = genocchi_series_oracle(6);
    let one = Rational::from_integer(1.into());
    let from_series: Vec<Rational> =
        (1..=6).map(|n| series.coefficients[n].eval(&one).expect("no pole at q = 1")).collect();
    let from_recurrence: Vec<Rational> = (1..=6).map(qgenocchi::genocchi::classical_genocchi).collect();
    let expected: Vec<Rational> = [1, -1, 0, 1, 0, -3].iter().map(|&v| Rational::from_integer(v.into())).collect();
    let pass = from_series == expected && from_recurrence == expected;
    let shown: Vec<String> = from_series.iter().map(ToString::to_string).collect();
    outcome(pass, format!("G_1..G_6 = {}", shown.join(", ")))
}

fn padic_convergence() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    for p in [3u64, 5] {
        let ctx = PadicContext::new(p, 12).expect("odd prime");
        let q = PadicNumber::from_integer(1 + p, ctx);
        for n in 0..=6 {
            let points = moment_convergence(n, &q, 5, ctx).expect("valid q");
            if !is_strictly_increasing(&points) {
                let vals: Vec<String> = points.iter().map(|pt| pt.error.to_string()).collect();
                problems.push(format!("p = {p}, n = {n}: [{}]", vals.join(", ")));
            }
        }
    }
    let (fast, time) = within(Duration::from_secs(60), start.elapsed());
    if !fast {
        problems.push(format!("too slow: {time}"));
    }
    if problems.is_empty() {
        outcome(true, format!("all sequences strictly increasing, {time}"))
    } else {
        outcome(false, format!("not strictly increasing: {}, {time}", problems.join("; ")))
    }
}

fn loggamma_cross_check() -> Outcome {
    let start = Instant::now();
    let ctx = PadicContext::new(3, 12).expect("odd prime");
    let q = PadicNumber::from_integer(4, ctx);
    let x = PadicNumber::from_rational(&Rational::new(1.into(), 3.into()), ctx);
    let series = loggamma_series(&x, &q, ctx).expect("v(x) < 0");
    let direct = loggamma_direct(&x, &q, 4, ctx).expect("v(x) < 0");
    let agreement = series.agreement(&direct);
    let reported = [series.abs_precision(), direct.abs_precision()].into_iter().flatten().min();
    let (fast, time) = within(Duration::from_secs(60), start.elapsed());
    let pass = agreement.reaches(6) && reported.is_none_or(|r| agreement.reaches(r)) && fast;
    let shown = match agreement {
        Agreement::Exact => "exact".to_string(),
        a => a.to_string(),
    };
    outcome(
        pass,
        format!(
            "agreement valuation {shown}, needed >= 6 and >= {}, {time}",
            reported.map_or("exact".into(), |r| r.to_string())
        ),
    )
}

fn bernstein_laws() -> Outcome {
    let mut problems = Vec::new();
    for n in 0..=10 {
        let sum = (0..=n).fold(XPolynomial::zero(), |acc, k| {
            &acc + &bernstein_basis(BernsteinIndex::new(k, n).expect("k <= n"))
        });
        if sum != XPolynomial::one() {
            problems.push(format!("partition of unity fails at n = {n}"));
        }
        for k in 0..=n {
            let idx = BernsteinIndex::new(k, n).expect("k <= n");
            if bernstein_basis(idx) != bernstein_reflect(idx) {
                problems.push(format!("symmetry fails at n = {n}, k = {k}"));
            }
        }
    }
    outcome(problems.is_empty(), if problems.is_empty() { "n <= 10".into() } else { problems.join("; ") })
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, dual_pipeline),
        (2, identity_suite),
        (3, shift_equation),
        (4, single_bernstein),
        (5, product_bernstein),
        (6, classical),
        (7, padic_convergence),
        (8, loggamma_cross_check),
        (9, bernstein_laws),
    ];
    let mut failed = 0;
    for (number, run) in criteria {
        let o = run();
        println!("criterion {number}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
