use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qgenocchi::IdentityId;
use qgenocchi_bench::{identity_suite, recurrence, series};

fn numbers(c: &mut Criterion) {
    let mut group = c.benchmark_group("genocchi_numbers");
    group.sample_size(10);
    for n in [10usize, 20, 30] {
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| b.iter(|| recurrence(black_box(n))));
        group.bench_with_input(BenchmarkId::new("series", n), &n, |b, &n| b.iter(|| series(black_box(n))));
    }
    group.finish();
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity_suite");
    group.sample_size(10);
    for id in [IdentityId::Thm4Eq11, IdentityId::PropEq14, IdentityId::Thm7] {
        group.bench_function(id.as_str(), |b| b.iter(|| identity_suite(id, black_box(10))));
    }
    group.finish();
}

criterion_group!(benches, numbers, identities);
criterion_main!(benches);
