use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use graphon_lab::constructions::{alpha_partition, layer_sizes, AlphaSchedule};
use graphon_lab::sampling::{
    sample_assignment, sample_graph_diagonal_block, sample_graph_stepfunction,
    sample_graph_transversal,
};
use graphon_lab::step::StepFunction;
use graphon_lab::RngStream;

fn bench_samplers(c: &mut Criterion) {
    let mut group = c.benchmark_group("samplers");
    let w = StepFunction::from_f64(
        &[0.25, 0.75],
        &[vec![0.9, 0.2], vec![0.2, 0.4]],
    )
    .unwrap();
    let partition = alpha_partition(&AlphaSchedule::InverseN, 64).unwrap();
    let structure = layer_sizes(6);

    for n in [64usize, 256, 1024] {
        group.bench_with_input(BenchmarkId::new("stepfunction", n), &n, |b, &n| {
            let mut rng = RngStream::new(1).rng();
            b.iter(|| sample_graph_stepfunction(n, &w, &mut rng));
        });
        group.bench_with_input(BenchmarkId::new("diagonal_block", n), &n, |b, &n| {
            let mut rng = RngStream::new(2).rng();
            b.iter(|| sample_graph_diagonal_block(n, &mut rng));
        });
        group.bench_with_input(BenchmarkId::new("transversal_graph", n), &n, |b, &n| {
            let mut rng = RngStream::new(3).rng();
            b.iter(|| sample_graph_transversal(n, &partition, &structure, &mut rng).unwrap());
        });
    }
    for n in [1024usize, 4096] {
        group.bench_with_input(BenchmarkId::new("transversal_assignment", n), &n, |b, &n| {
            let mut rng = RngStream::new(4).rng();
            b.iter(|| sample_assignment(n, &partition, &structure, &mut rng).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_samplers);
criterion_main!(benches);
