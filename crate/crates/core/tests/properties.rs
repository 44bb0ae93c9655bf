//! Randomized invariants: entropy concavity and continuity, pseudometric
//! laws, averaging, conditional entropy, and distribution normalization.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::collection::vec;
use proptest::prelude::*;

use graphon_lab::densities::induced_density_graphon_exact;
use graphon_lab::entropy::{exact_graph_distribution, tv_like_distance, JointDistribution};
use graphon_lab::graph::LabeledGraph;
use graphon_lab::info::{binary_entropy, binary_entropy_unchecked};
use graphon_lab::sampling::{sample_graph_stepfunction, RngStream};
use graphon_lab::step::StepFunction;

fn build_sf(raw_measures: &[f64], tri: &[u8], q: usize) -> StepFunction {
    let total: f64 = raw_measures.iter().sum();
    let measures: Vec<f64> = raw_measures.iter().map(|m| m / total).collect();
    let mut values = vec![vec![0.0f64; q]; q];
    let mut k = 0;
    for i in 0..q {
        for j in i..q {
            let v = tri[k] as f64 / 64.0;
            values[i][j] = v;
            values[j][i] = v;
            k += 1;
        }
    }
    StepFunction::from_f64(&measures, &values).expect("generated stepfunction valid")
}

/// Random stepfunction with up to `max_q` steps and values on the grid k/64.
fn stepfunction(max_q: usize) -> impl Strategy<Value = StepFunction> {
    (1..=max_q).prop_flat_map(|q| {
        (vec(0.05f64..1.0, q), vec(0u8..=64, q * (q + 1) / 2))
            .prop_map(move |(m, tri)| build_sf(&m, &tri, q))
    })
}

/// Random stepfunction with {0,1} values only.
fn zero_one_stepfunction(max_q: usize) -> impl Strategy<Value = StepFunction> {
    (1..=max_q).prop_flat_map(|q| {
        (vec(0.05f64..1.0, q), vec(0u8..=1, q * (q + 1) / 2))
            .prop_map(move |(m, tri)| {
                let tri: Vec<u8> = tri.iter().map(|&b| b * 64).collect();
                build_sf(&m, &tri, q)
            })
    })
}

/// A pair of stepfunctions on the same equal-measure partition.
fn equal_step_pair(max_q: usize) -> impl Strategy<Value = (StepFunction, StepFunction)> {
    (2..=max_q).prop_flat_map(|q| {
        let len = q * (q + 1) / 2;
        (vec(0u8..=64, len), vec(0u8..=64, len)).prop_map(move |(t1, t2)| {
            (build_sf(&vec![1.0; q], &t1, q), build_sf(&vec![1.0; q], &t2, q))
        })
    })
}

proptest! {
    #[test]
    fn binary_entropy_is_concave(x in 0.0f64..=1.0, y in 0.0f64..=1.0, lambda in 0.0f64..=1.0) {
        let mix = lambda * x + (1.0 - lambda) * y;
        let lhs = binary_entropy(mix.clamp(0.0, 1.0)).unwrap();
        let rhs = lambda * binary_entropy(x).unwrap() + (1.0 - lambda) * binary_entropy(y).unwrap();
        prop_assert!(lhs >= rhs - 1e-12, "h({mix}) = {lhs} < {rhs}");
    }

    #[test]
    fn entropy_zero_iff_random_free(w in stepfunction(3)) {
        prop_assert_eq!(w.is_random_free(), w.entropy() == 0.0);
    }

    #[test]
    fn zero_one_valued_always_zero_entropy(w in zero_one_stepfunction(3)) {
        prop_assert!(w.is_random_free());
        prop_assert_eq!(w.entropy(), 0.0);
    }

    #[test]
    fn l1_is_a_pseudometric(
        a in stepfunction(3),
        b in stepfunction(3),
        c in stepfunction(3),
    ) {
        prop_assert_eq!(a.l1_distance_exact(&b), b.l1_distance_exact(&a));
        prop_assert!(a.l1_distance_exact(&a) == BigRational::from_integer(0.into()));
        let (ab, bc, ac) = (
            a.l1_distance_exact(&b),
            b.l1_distance_exact(&c),
            a.l1_distance_exact(&c),
        );
        prop_assert!(ac <= ab + bc);
    }

    #[test]
    fn delta1_bounded_by_l1((a, b) in equal_step_pair(4)) {
        // equal-measure pairs so the refinement is exhaustive and exact
        let d = a.delta1_upper(&b).unwrap();
        prop_assert!(d.value <= a.l1_distance(&b) + 1e-9);
    }

    #[test]
    fn step_average_never_decreases_entropy(w in stepfunction(4), split in 0u8..16) {
        // random 2-group partition of the steps (or the singleton partition)
        let q = w.steps();
        let mut g0 = Vec::new();
        let mut g1 = Vec::new();
        for i in 0..q {
            if split >> (i % 8) & 1 == 0 {
                g0.push(i);
            } else {
                g1.push(i);
            }
        }
        let partition: Vec<Vec<usize>> = [g0, g1].into_iter().filter(|g| !g.is_empty()).collect();
        let avg = w.step_average(&partition).unwrap();
        prop_assert!(avg.entropy() >= w.entropy() - 1e-9);
    }

    #[test]
    fn conditional_entropy_at_most_marginal(
        nx in 2usize..=3,
        ny in 2usize..=3,
        weights in vec(0u32..10, 9),
    ) {
        let mut w = weights;
        w[0] += 1;
        let total: u32 = w[..nx * ny].iter().sum();
        let probs: Vec<Vec<BigRational>> = (0..nx)
            .map(|x| {
                (0..ny)
                    .map(|y| BigRational::new(w[x * ny + y].into(), total.into()))
                    .collect()
            })
            .collect();
        let joint = JointDistribution::new(probs).unwrap();
        prop_assert!(joint.conditional_entropy() <= joint.x_entropy() + 1e-12);
    }

    #[test]
    fn entropy_continuity_in_distribution_distance(
        n in 2usize..=3,
        w1 in stepfunction(3),
        w2 in stepfunction(3),
    ) {
        let d1 = exact_graph_distribution(n, &w1).unwrap();
        let d2 = exact_graph_distribution(n, &w2).unwrap();
        let omega = (1u64 << (n * (n - 1) / 2)) as f64;
        let tv = tv_like_distance(&d1, &d2).unwrap();
        let lhs = (d1.entropy_bits() - d2.entropy_bits()).abs();
        prop_assert!(lhs <= omega * binary_entropy_unchecked(tv / omega) + 1e-9);
    }

    #[test]
    fn distribution_distance_bounded_by_graphon_distance(
        n in 2usize..=3,
        (w1, w2) in equal_step_pair(3),
    ) {
        let d1 = exact_graph_distribution(n, &w1).unwrap();
        let d2 = exact_graph_distribution(n, &w2).unwrap();
        let tv = tv_like_distance(&d1, &d2).unwrap();
        prop_assert!(tv <= (n * n) as f64 * w1.l1_distance(&w2) + 1e-9);
    }

    #[test]
    fn distribution_matches_pointwise_density(n in 2usize..=3, w in stepfunction(3)) {
        // probs of the exact distribution equal p(H;W) graph by graph
        let d = exact_graph_distribution(n, &w).unwrap();
        let pairs = n * (n - 1) / 2;
        let mut total = BigRational::from_integer(0.into());
        for mask in 0..1u64 << pairs {
            let h = LabeledGraph::from_edge_mask(n, mask);
            let p = induced_density_graphon_exact(&h, &w).unwrap();
            prop_assert!((p.to_f64().unwrap() - d.prob_f64(mask)).abs() < 1e-15);
            total += p;
        }
        prop_assert!(total.is_one());
    }
}

#[test]
fn multi_step_sampler_edge_marginal() {
    // empirical edge density matches sum m_i m_j w_ij within binomial 3 sigma
    let w = StepFunction::from_f64(
        &[0.25, 0.75],
        &[vec![0.9, 0.2], vec![0.2, 0.4]],
    )
    .unwrap();
    let p = 0.25 * 0.25 * 0.9 + 2.0 * 0.25 * 0.75 * 0.2 + 0.75 * 0.75 * 0.4;
    let mut rng = RngStream::new(31).rng();
    let trials = 100_000u32;
    let mut edges = 0u32;
    for _ in 0..trials {
        let (g, _) = sample_graph_stepfunction(2, &w, &mut rng);
        edges += g.edge_count() as u32;
    }
    let freq = edges as f64 / trials as f64;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    assert!((freq - p).abs() < 3.0 * sigma, "freq {freq} vs {p}");
}
