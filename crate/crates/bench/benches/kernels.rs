use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pernull_bench::fixture;
use pernull_core::permanent::shifted_adjacency;
use pernull_core::{
    gallai_edmonds, maximum_matching, per_nullity_structural, perm_polynomial_interpolation,
    perm_polynomial_sachs, permanent, Graph,
};

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximum_matching");
    for n in [50, 200, 800] {
        let g = fixture(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| maximum_matching(black_box(g)))
        });
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("gallai_edmonds");
    for n in [25, 100, 400] {
        let g = fixture(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| gallai_edmonds(black_box(g)))
        });
    }
    group.finish();
}

fn structural(c: &mut Criterion) {
    let mut group = c.benchmark_group("per_nullity_structural");
    for n in [25, 100, 400] {
        let g = fixture(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| per_nullity_structural(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn ryser(c: &mut Criterion) {
    let mut group = c.benchmark_group("ryser_permanent");
    for n in [10, 14, 18] {
        let m = shifted_adjacency(&fixture(n), 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| permanent(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("permanental_polynomial");
    group.sample_size(20);
    for n in [8, 12] {
        let g = fixture(n);
        group.bench_with_input(BenchmarkId::new("sachs", n), &g, |b, g| {
            b.iter(|| perm_polynomial_sachs(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("interpolation", n), &g, |b, g| {
            b.iter(|| perm_polynomial_interpolation(black_box(g)).unwrap())
        });
    }
    let dense: Graph = Graph::complete(12);
    group.bench_function("sachs/K12", |b| {
        b.iter(|| perm_polynomial_sachs(black_box(&dense)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    matching,
    decomposition,
    structural,
    ryser,
    polynomials
);
criterion_main!(benches);
