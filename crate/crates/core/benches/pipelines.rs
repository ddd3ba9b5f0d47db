use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pairenum::genfunc::{multigraph_series_with, simple_genfunc_det_with, simple_genfunc_elementwise_with};
use pairenum::oracle::{brute_multigraph_counts_with, brute_simple_counts_with};
use pairenum::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn class_summed(c: &mut Criterion) {
    let mut group = c.benchmark_group("simple_det");
    for n in [20, 28] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| simple_genfunc_det_with(black_box(n), exec).unwrap())
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("multigraph_series");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "n12_d40"), |b| {
            b.iter(|| multigraph_series_with(black_box(12), 40, exec).unwrap())
        });
    }
    group.finish();
}

fn per_element(c: &mut Criterion) {
    let mut group = c.benchmark_group("simple_elementwise");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 8), |b| {
            b.iter(|| simple_genfunc_elementwise_with(black_box(8), 8, exec).unwrap())
        });
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "simple_n6"), |b| {
            b.iter(|| brute_simple_counts_with(black_box(6), exec).unwrap())
        });
        group.bench_function(BenchmarkId::new(name, "multi_n5_d6"), |b| {
            b.iter(|| brute_multigraph_counts_with(black_box(5), 6, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, class_summed, per_element, brute_force);
criterion_main!(benches);
