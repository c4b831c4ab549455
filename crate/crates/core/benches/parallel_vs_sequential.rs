use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liesplit::decomposition::{decompose_module, simplicity_report};
use liesplit::fixtures;
use liesplit::par;
use liesplit::weight::{weight_decompose, ModuleAction};
use std::hint::black_box;

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    group.sample_size(10);
    for n in [3, 4] {
        let table = fixtures::sl_n(n).structure().clone();
        group.bench_with_input(BenchmarkId::new("parallel", n), &table, |b, t| {
            b.iter(|| black_box(t.jacobi_violation()))
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &table, |b, t| {
            b.iter(|| par::sequential(|| black_box(t.jacobi_violation())))
        });
    }
    group.finish();
}

fn module_axiom(c: &mut Criterion) {
    let mut group = c.benchmark_group("module_axiom");
    group.sample_size(10);
    let adj = fixtures::adjoint(&fixtures::sl_n(4));
    let split = adj.split().clone();
    let rho = adj.matrices().to_vec();
    let names = adj.names().to_vec();
    let build = || ModuleAction::from_matrices(split.clone(), names.clone(), rho.clone()).unwrap();
    group.bench_function("parallel", |b| b.iter(|| black_box(build())));
    group.bench_function("sequential", |b| b.iter(|| par::sequential(|| black_box(build()))));
    group.finish();
}

fn corpus_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("corpus_pipeline");
    group.sample_size(10);
    let corpus = fixtures::random_module_corpus(11, 16);
    let pipeline = |ms: &[ModuleAction]| {
        par::map(ms, |m| {
            let w = weight_decompose(m).unwrap();
            (decompose_module(&w).unwrap().pieces.len(), simplicity_report(&w).verdict)
        })
    };
    group.bench_function("parallel", |b| b.iter(|| black_box(pipeline(&corpus))));
    group.bench_function("sequential", |b| b.iter(|| par::sequential(|| black_box(pipeline(&corpus)))));
    group.finish();
}

criterion_group!(benches, jacobi, module_axiom, corpus_pipeline);
criterion_main!(benches);
