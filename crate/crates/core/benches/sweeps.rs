use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fusionkit::exec::Strategy;
use fusionkit::verify;

fn strategies() -> Vec<(&'static str, Strategy)> {
    let mut s = vec![("sequential", Strategy::Sequential)];
    if Strategy::parallel_available() {
        s.push(("parallel", Strategy::Parallel));
    }
    s
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    for (name, s) in strategies() {
        g.bench_with_input(BenchmarkId::new("lr", name), &s, |b, &s| {
            b.iter(|| verify::suite_lr(9, s))
        });
        g.bench_with_input(BenchmarkId::new("involution", name), &s, |b, &s| {
            b.iter(|| verify::suite_involution(4, 3, 9, s))
        });
        g.bench_with_input(BenchmarkId::new("duality", name), &s, |b, &s| {
            b.iter(|| verify::suite_duality(4, 4, 8, s))
        });
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
