//! Benchmarks comparing the sequential and the rayon execution of the grid
//! sweeps (built with the `parallel` feature, which is on by default).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hecke_cn::checks::run_suite;
use hecke_cn::par::ExecMode;
use hecke_cn::rational::Rat;
use hecke_cn::spin::cross_validate_with;

fn modes() -> [(&'static str, ExecMode); 2] {
    [("seq", ExecMode::Sequential), ("par", ExecMode::Parallel)]
}

fn bench_cross_validate(c: &mut Criterion) {
    let ms: Vec<Rat> = ["1/4", "3/4", "5/4", "7/4", "9/4", "11/4"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut group = c.benchmark_group("springer_cross_validate_n9");
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                let report = cross_validate_with(9, &ms, mode).unwrap();
                assert!(report.pass());
            })
        });
    }
    group.finish();
}

fn bench_sgn_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sgn_equivalence_n7");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                let report = run_suite("sgn-equivalence", Some(7), mode).unwrap();
                assert!(report.pass());
            })
        });
    }
    group.finish();
}

fn bench_interval_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("interval_constancy_n7");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                let report = run_suite("interval-constancy", Some(7), mode).unwrap();
                assert!(report.pass());
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_cross_validate,
    bench_sgn_sweep,
    bench_interval_sweep
);
criterion_main!(benches);
