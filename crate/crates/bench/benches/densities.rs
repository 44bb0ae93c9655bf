use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use graphon_lab::constructions::{bigraph_b, ktt_mixture_graphon};
use graphon_lab::densities::{
    bigraph_density_mixture_exact, hom_density, induced_density_graphon_exact,
};
use graphon_lab::entropy::{diagonal_block_exact_entropy, exact_graph_distribution};
use graphon_lab::step::StepFunction;
use graphon_lab::LabeledGraph;

fn bench_densities(c: &mut Criterion) {
    let mut group = c.benchmark_group("densities");

    let w = StepFunction::from_f64(
        &[0.25, 0.25, 0.5],
        &[
            vec![0.9, 0.2, 0.0],
            vec![0.2, 0.4, 1.0],
            vec![0.0, 1.0, 0.5],
        ],
    )
    .unwrap();
    for nh in [3usize, 4, 5] {
        group.bench_with_input(BenchmarkId::new("induced_graphon_exact", nh), &nh, |b, &nh| {
            let h = LabeledGraph::cycle(nh);
            b.iter(|| induced_density_graphon_exact(&h, &w).unwrap());
        });
    }

    group.bench_function("hom_c4_in_k16", |b| {
        let c4 = LabeledGraph::cycle(4);
        let k16 = LabeledGraph::complete(16);
        b.iter(|| hom_density(&c4, &k16).unwrap());
    });

    group.bench_function("mixture_pb_b2", |b| {
        let mix = ktt_mixture_graphon(2, 4, None).unwrap();
        let b2 = bigraph_b(2).unwrap();
        b.iter(|| bigraph_density_mixture_exact(&b2, &mix).unwrap());
    });

    group.bench_function("exact_distribution_n4_q3", |b| {
        b.iter(|| exact_graph_distribution(4, &w).unwrap());
    });

    group.bench_function("diagonal_entropy_n8", |b| {
        b.iter(|| diagonal_block_exact_entropy(8).unwrap());
    });

    group.finish();
}

criterion_group!(benches, bench_densities);
criterion_main!(benches);
