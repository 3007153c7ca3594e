use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fermat_descent::arith::integer_pth_root;
use fermat_descent::{recover, search, solve, BigInt, CurveModel, CurvePoint, FermatEquation, SearchBounds};

fn bench_search(c: &mut Criterion) {
    let eq = FermatEquation::from_i64(2, 9, 11, 5).unwrap();
    let model = CurveModel::from_equation(&eq);
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for (d_max, a_max) in [(1, 100_000), (2, 20_000), (4, 20_000)] {
        let bounds = SearchBounds::new(d_max, a_max);
        group.bench_with_input(BenchmarkId::from_parameter(format!("d{d_max}_a{a_max}")), &bounds, |b, bounds| {
            b.iter(|| search(black_box(&model), bounds).unwrap())
        });
    }
    group.finish();
}

fn bench_solve(c: &mut Criterion) {
    let eq = FermatEquation::from_i64(2, 9, 11, 5).unwrap();
    let bounds = SearchBounds::new(2, 20_000);
    c.bench_function("solve/2_9_11_5", |b| b.iter(|| solve(black_box(&eq), &bounds).unwrap()));
}

fn bench_recover(c: &mut Criterion) {
    let eq = FermatEquation::from_i64(2, 9, 11, 5).unwrap();
    let pt = CurvePoint::from_ints(99, 98010);
    c.bench_function("recover/99_98010", |b| b.iter(|| recover(black_box(&pt), &eq).unwrap()));
}

fn bench_pth_root(c: &mut Criterion) {
    let base = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
    let exact = base.pow(7);
    let inexact = &exact + 1u32;
    let mut group = c.benchmark_group("integer_pth_root");
    group.bench_function("exact", |b| b.iter(|| integer_pth_root(black_box(&exact), 7)));
    group.bench_function("inexact", |b| b.iter(|| integer_pth_root(black_box(&inexact), 7)));
    group.finish();
}

criterion_group!(benches, bench_search, bench_solve, bench_recover, bench_pth_root);
criterion_main!(benches);
