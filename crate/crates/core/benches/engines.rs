use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lambert_core::lambert::{
    eval_clausen, eval_eisenstein_cf, eval_eisenstein_qseries, eval_naive, eval_power_series,
    CoeffSource,
};
use num_complex::Complex64;

fn real_engines(c: &mut Criterion) {
    let one = CoeffSource::one();
    let mut g = c.benchmark_group("engines/real");
    for &x in &[0.5f64, 0.9, 0.99] {
        g.bench_with_input(BenchmarkId::new("naive", x), &x, |b, &x| {
            b.iter(|| eval_naive(&one, black_box(x), 1e-12).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("clausen", x), &x, |b, &x| {
            b.iter(|| eval_clausen(black_box(x), 1e-12).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("power", x), &x, |b, &x| {
            b.iter(|| eval_power_series(&one, black_box(x), 4000).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("eisenstein_q", x), &x, |b, &x| {
            b.iter(|| eval_eisenstein_qseries(black_box(x), 4000).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("eisenstein_cf", x), &x, |b, &x| {
            b.iter(|| eval_eisenstein_cf(black_box(x), 200).unwrap())
        });
    }
    g.finish();
}

fn complex_engines(c: &mut Criterion) {
    let one = CoeffSource::one();
    let z = Complex64::from_polar(0.9, 1.0);
    let mut g = c.benchmark_group("engines/complex");
    g.bench_function("naive", |b| b.iter(|| eval_naive(&one, black_box(z), 1e-12).unwrap()));
    g.bench_function("power", |b| {
        b.iter(|| eval_power_series(&one, black_box(z), 400).unwrap())
    });
    g.finish();
}

criterion_group!(benches, real_engines, complex_engines);
criterion_main!(benches);
