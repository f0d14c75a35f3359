use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use affweyl::sweep::{run_sweep, Exec, Suite, SweepConfig};

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    for (suite, t, l, m) in [(Suite::BruhatMaster, "A2", 6, 4), (Suite::Demazure, "B2", 6, 4), (Suite::Newton, "A2", 5, 4)] {
        let cfg = SweepConfig::new(suite, t, l, m);
        for exec in [Exec::Sequential, Exec::Parallel] {
            let id = BenchmarkId::new(format!("{suite}-{t}"), format!("{exec:?}"));
            g.bench_with_input(id, &cfg, |b, cfg| b.iter(|| run_sweep(cfg, exec).unwrap()));
        }
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
