use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sunlet_bench::sizes;
use sunlet_core::export::{to_json, to_svg, Layout};
use sunlet_core::oracle::{brute_force_decompositions, SearchOptions};
use sunlet_core::verify::report_covering;
use sunlet_core::{make_torus, Theorem};

const THEOREMS: [Theorem; 3] = [Theorem::T1, Theorem::T2, Theorem::T3];

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for theorem in THEOREMS {
        for &n in sizes(theorem) {
            group.bench_with_input(BenchmarkId::new(theorem.to_string(), n), &n, |b, &n| {
                b.iter(|| theorem.build(n).unwrap())
            });
        }
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("report");
    for theorem in THEOREMS {
        for &n in sizes(theorem) {
            let covering = theorem.build(n).unwrap();
            group.bench_with_input(
                BenchmarkId::new(theorem.to_string(), n),
                &covering,
                |b, covering| b.iter(|| report_covering(covering)),
            );
        }
    }
    group.finish();
}

fn export(c: &mut Criterion) {
    let covering = Theorem::T3.build(8).unwrap();
    c.bench_function("json T3 n=8", |b| b.iter(|| to_json(&covering, None)));
    c.bench_function("svg T3 n=8", |b| b.iter(|| to_svg(&covering, Layout::Flat)));
}

fn decompose(c: &mut Criterion) {
    let grid = make_torus(4, 4).unwrap();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("decompose C4xC4 into S1_4", |b| {
        b.iter(|| brute_force_decompositions(&grid, 4, SearchOptions::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, build, verify, export, decompose);
criterion_main!(benches);
