use assder_bench::cases;
use assder_core::ainfty::{functor_s, functor_t};
use assder_core::complex::{cohomology, differential_matrix};
use assder_core::{fixtures, Limits};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn differential(c: &mut Criterion) {
    let mut group = c.benchmark_group("differential_matrix");
    let limits = Limits::default();
    for (name, pair, rep, degrees) in cases() {
        for n in degrees {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| differential_matrix(black_box(&pair), &rep, n, &limits).unwrap())
            });
        }
    }
    group.finish();
}

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("cohomology");
    group.sample_size(20);
    let limits = Limits::default();
    for (name, pair, rep, degrees) in cases() {
        for n in degrees {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| cohomology(black_box(&pair), &rep, n, true, &limits).unwrap())
            });
        }
    }
    group.finish();
}

fn presentations(c: &mut Criterion) {
    let x = fixtures::gauged_dual().0;
    c.bench_function("functor_s_of_t", |b| {
        b.iter(|| functor_s(&functor_t(black_box(&x)).unwrap()).unwrap())
    });
}

criterion_group!(benches, differential, betti, presentations);
criterion_main!(benches);
