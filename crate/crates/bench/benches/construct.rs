use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use optd3::bounds::weight_distribution;
use optd3::verify::{detects_all_small_errors, detects_all_small_errors_exhaustive, DetectionMode};
use optd3::build;
use optd3_bench::{codes, LENGTHS};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for n in LENGTHS {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| build(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("detection");
    group.sample_size(10);
    for code in codes() {
        group.bench_with_input(BenchmarkId::new("syndromes", code.n()), &code, |b, code| {
            b.iter(|| detects_all_small_errors(code.gens(), DetectionMode::Pure))
        });
        group.bench_with_input(BenchmarkId::new("sweep", code.n()), &code, |b, code| {
            b.iter(|| detects_all_small_errors_exhaustive(code.gens(), DetectionMode::Pure))
        });
    }
    group.finish();
}

fn weights(c: &mut Criterion) {
    let mut group = c.benchmark_group("weights");
    group.sample_size(10);
    for code in codes().into_iter().filter(|c| c.s() <= 11) {
        group.bench_with_input(BenchmarkId::from_parameter(code.n()), &code, |b, code| {
            b.iter(|| weight_distribution(code).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, construction, detection, weights);
criterion_main!(benches);
