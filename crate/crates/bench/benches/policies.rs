use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oknap_bench::{general, small, unit};
use oknap_core::{robustness_factor, universal_fast, universal_naive, universal_ud_fast, universal_ud_naive};
use std::hint::black_box;

fn universal(c: &mut Criterion) {
    let mut group = c.benchmark_group("universal");
    for n in [1_000, 10_000, 100_000] {
        let inst = general(n);
        group.bench_with_input(BenchmarkId::new("fast", n), &inst, |b, i| b.iter(|| universal_fast(black_box(i))));
        if n <= 10_000 {
            group.bench_with_input(BenchmarkId::new("naive", n), &inst, |b, i| {
                b.iter(|| universal_naive(black_box(i)))
            });
        }
    }
    group.finish();
}

fn universal_ud(c: &mut Criterion) {
    let mut group = c.benchmark_group("universal_ud");
    for n in [1_000, 10_000, 100_000] {
        let inst = unit(n);
        group.bench_with_input(BenchmarkId::new("fast", n), &inst, |b, i| {
            b.iter(|| universal_ud_fast(black_box(i)).unwrap())
        });
        if n <= 10_000 {
            group.bench_with_input(BenchmarkId::new("naive", n), &inst, |b, i| {
                b.iter(|| universal_ud_naive(black_box(i)).unwrap())
            });
        }
    }
    group.finish();
}

fn robustness(c: &mut Criterion) {
    let mut group = c.benchmark_group("robustness_factor");
    group.sample_size(20);
    for n in [10, 50, 200] {
        let inst = small(n);
        let policy = universal_fast(&inst);
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, i| {
            b.iter(|| robustness_factor(black_box(i), &policy).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, universal, universal_ud, robustness);
criterion_main!(benches);
