use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ward_core::identities::{identity_suite_on, TriangleSet};
use ward_core::{build, Execution, Strategy, TriangleCache, TriangleKind};

const POLICIES: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn label(exec: Execution) -> &'static str {
    match exec {
        Execution::Sequential => "sequential",
        Execution::Parallel => "parallel",
    }
}

fn triangles(c: &mut Criterion) {
    let cases = [
        (TriangleKind::WardLah, Strategy::Recurrence, 200),
        (TriangleKind::WardLah, Strategy::Explicit, 120),
        (TriangleKind::BinomialWard2, Strategy::Scaling, 120),
        (TriangleKind::Ward1, Strategy::PartitionTransform, 14),
    ];
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for (kind, strategy, rows) in cases {
        for exec in POLICIES {
            let id = BenchmarkId::new(format!("{kind}/{strategy}/{rows}"), label(exec));
            group.bench_function(id, |b| {
                b.iter(|| build(black_box(kind), rows, strategy, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity_suite");
    group.sample_size(10);
    for exec in POLICIES {
        let cache = TriangleCache::new(exec);
        let set = TriangleSet::build(&cache, 24).unwrap();
        group.bench_function(BenchmarkId::new("n=20", label(exec)), |b| {
            b.iter(|| identity_suite_on(black_box(&set), 20, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, triangles, suite);
criterion_main!(benches);
