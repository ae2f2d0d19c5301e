use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nullcone_bench::{load, WORKLOADS};
use nullcone_core::candidates::{enumerate_candidates, EnumerationOptions};
use nullcone_core::{Engine, EngineOptions, SubProblem};

fn candidates(c: &mut Criterion) {
    let mut group = c.benchmark_group("candidates");
    for spec in WORKLOADS {
        let sub = SubProblem::from_problem(&load(spec));
        group.bench_with_input(BenchmarkId::from_parameter(spec), &sub, |b, sub| {
            b.iter(|| enumerate_candidates(sub, EnumerationOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn stratify(c: &mut Criterion) {
    let mut group = c.benchmark_group("stratify");
    group.sample_size(10);
    for spec in WORKLOADS {
        let problem = load(spec);
        for (mode, fast) in [("full", false), ("fast", true)] {
            let opts = EngineOptions { fast, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(mode, spec), &problem, |b, p| {
                // A fresh engine per iteration so the memo does not carry over.
                b.iter(|| Engine::new(opts).stratify(p).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, candidates, stratify);
criterion_main!(benches);
