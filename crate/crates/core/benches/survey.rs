use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use idcode::survey::{analyse_all, tree_corpus};
use idcode::Execution;

fn survey(c: &mut Criterion) {
    let mut group = c.benchmark_group("tree_survey");
    group.sample_size(10);
    for n_max in [9, 11] {
        let corpus = tree_corpus(3, n_max).unwrap();
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, n_max), &corpus, |b, corpus| {
                b.iter(|| analyse_all(corpus, exec, None).unwrap().len())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, survey);
criterion_main!(benches);
