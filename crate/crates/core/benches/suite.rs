use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use schurq_core::verify::{run_suite_with, Execution, SuiteConfig};

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    for bound in [2u32, 3] {
        let cfg = SuiteConfig::all(bound, bound);
        for (label, mode) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, bound), &cfg, |b, cfg| {
                b.iter(|| run_suite_with(cfg, mode));
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suite);
criterion_main!(benches);
