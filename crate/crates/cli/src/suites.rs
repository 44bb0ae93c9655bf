//! The verification suites behind `graphon verify --suite ...`: each runs a
//! batch of checks against exact values or seeded Monte Carlo and reports
//! pass/fail per assertion.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use graphon_lab::constructions::{
    alpha_partition, bigraph_b, ktt_mixture_graphon, layer_sizes, AlphaSchedule,
};
use graphon_lab::densities::{
    bigraph_density_mixture_exact, contains_induced_subbigraph, is_ktt_free,
    largest_homogeneous_set,
};
use graphon_lab::entropy::{
    clique_partition_probability, diagonal_block_exact_entropy, exact_graph_distribution,
    transversal_entropy_lower_bound, tv_like_distance, unlabel_distribution, Accumulator,
};
use graphon_lab::error::Result;
use graphon_lab::graph::LabeledGraph;
use graphon_lab::info::binary_entropy_unchecked;
use graphon_lab::sampling::{sample_assignment, sample_graph_stepfunction, sample_graph_transversal};
use graphon_lab::step::StepFunction;
use graphon_lab::RngStream;

/// One named assertion with its measured value.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            pass,
            detail,
        }
    }
}

/// Result of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {}: {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        out.push_str(&format!(
            "suite {}: {}\n",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn chi_squared_p_value(counts: &[u64], total: u64) -> f64 {
    let k = counts.len() as f64;
    let expected = total as f64 / k;
    let stat: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    let dist = ChiSquared::new(k - 1.0).expect("valid dof");
    1.0 - dist.cdf(stat)
}

/// A seeded random stepfunction with small exact-rational measures and
/// values on the grid j/64 (or {0,1} when `zero_one`).
pub fn random_stepfunction(rng: &mut impl Rng, q: usize, zero_one: bool) -> StepFunction {
    let weights: Vec<u64> = (0..q).map(|_| rng.gen_range(1..=8u64)).collect();
    let total: u64 = weights.iter().sum();
    let measures: Vec<BigRational> = weights
        .iter()
        .map(|&w| BigRational::new(w.into(), total.into()))
        .collect();
    let mut values = vec![vec![BigRational::zero(); q]; q];
    for i in 0..q {
        for j in i..q {
            let v = if zero_one {
                BigRational::from_integer(rng.gen_range(0..=1u8).into())
            } else {
                BigRational::new(rng.gen_range(0..=64u8).into(), 64.into())
            };
            values[i][j] = v.clone();
            values[j][i] = v;
        }
    }
    StepFunction::from_rationals(measures, values).expect("generated stepfunction valid")
}

/// Uniformity of G(3, W_I) conditioned on pairwise-distinct intervals: the 8
/// labeled outcomes must be uniform (chi-squared, p >= 0.001).
pub fn uniformity(trials: u64, seed: u64) -> Result<SuiteReport> {
    let partition = alpha_partition(&AlphaSchedule::InverseN, 64)?;
    let structure = layer_sizes(6);
    let mut rng = RngStream::new(seed).rng();
    let mut counts = [0u64; 8];
    let mut accepted = 0u64;
    let mut attempts = 0u64;
    while accepted < trials {
        attempts += 1;
        assert!(
            attempts < trials * 20,
            "conditioning on distinct intervals rejected too often"
        );
        let (g, a) = sample_graph_transversal(3, &partition, &structure, &mut rng)?;
        if a.image_size() < 3 {
            continue;
        }
        counts[g.edge_mask()? as usize] += 1;
        accepted += 1;
    }
    let p = chi_squared_p_value(&counts, trials);
    Ok(SuiteReport {
        suite: "uniformity".into(),
        checks: vec![Check::new(
            "conditioned 3-point outcomes uniform over 8 graphs",
            p >= 0.001,
            format!("chi-squared p = {p:.6}, counts = {counts:?}, accepted = {trials}"),
        )],
    })
}

/// Conditional entropy given an assignment dominates C(|Im|, 2), with zero
/// violations over sampled assignments.
pub fn lemma_conditional(trials: u64, n: usize, seed: u64) -> Result<SuiteReport> {
    let partition = alpha_partition(&AlphaSchedule::InverseN, 64)?;
    let structure = layer_sizes(6);
    let mut rng = RngStream::new(seed).rng();
    let mut violations = 0u64;
    for _ in 0..trials {
        let a = sample_assignment(n, &partition, &structure, &mut rng)?;
        let im = a.image_size() as u64;
        if a.cross_class_pairs() < im * (im - 1) / 2 {
            violations += 1;
        }
    }
    Ok(SuiteReport {
        suite: "lemma-conditional".into(),
        checks: vec![Check::new(
            "cross-class pairs >= C(|Im|,2) for every assignment",
            violations == 0,
            format!("{violations} violations in {trials} assignments (n = {n})"),
        )],
    })
}

/// The entropy chain at n = 4096, alpha(n) = 1/n, k = 2: the group-2 image
/// is large in expectation, the image exceeds n/16 at least half the time,
/// and the conditional-entropy bound beats alpha(n) n^2 bits.
pub fn thm1_chain(trials: u64, seed: u64) -> Result<SuiteReport> {
    let n = 4096usize;
    let k = 2u32;
    let partition = alpha_partition(&AlphaSchedule::InverseN, 64)?;
    let structure = layer_sizes(6);
    let mut rng = RngStream::new(seed).rng();
    let mut group_image = Accumulator::default();
    let mut image_hits = 0u64;
    let image_threshold = n as u64 >> (k + 2); // n 2^{-k-2} = 256
    for _ in 0..trials {
        let a = sample_assignment(n, &partition, &structure, &mut rng)?;
        group_image.push(a.group_image_count(k) as f64);
        if a.image_size() as u64 >= image_threshold {
            image_hits += 1;
        }
    }
    let bound = transversal_entropy_lower_bound(n, &partition, &structure, trials, &mut rng)?;
    let expect_x = (n as u64 >> (k + 1)) as f64; // n 2^{-k-1} = 512
    let target_bits = n as f64; // alpha(n) n^2 = n
    let hit_rate = image_hits as f64 / trials as f64;
    Ok(SuiteReport {
        suite: "thm1-chain".into(),
        checks: vec![
            Check::new(
                "E[group-2 image] >= n/8 within 3 sigma",
                group_image.mean() >= expect_x - 3.0 * group_image.stderr(),
                format!(
                    "mean = {:.2} +- {:.2}, threshold = {expect_x}",
                    group_image.mean(),
                    group_image.stderr()
                ),
            ),
            Check::new(
                "Pr[|Im| >= n/16] >= 1/2",
                hit_rate >= 0.5,
                format!("rate = {hit_rate:.4}, threshold count = {image_threshold}"),
            ),
            Check::new(
                "conditional-entropy bound >= alpha(n) n^2 bits",
                bound.conditional_bits - 3.0 * bound.conditional_stderr >= target_bits,
                format!(
                    "bound = {:.1} +- {:.1} bits, target = {target_bits}",
                    bound.conditional_bits, bound.conditional_stderr
                ),
            ),
        ],
    })
}

/// Per-pair entropy converges: constant-p graphons hit h(p) exactly at every
/// n, and the 2-step gap to the graphon entropy is non-increasing in n.
pub fn eq1_limit(seed: u64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut worst: f64 = 0.0;
    for tenths in 1..=9u32 {
        let p = tenths as f64 / 10.0;
        let w = StepFunction::constant(p)?;
        for n in 2..=6usize {
            let d = exact_graph_distribution(n, &w)?;
            let pairs = (n * (n - 1) / 2) as f64;
            worst = worst.max((d.entropy_bits() / pairs - binary_entropy_unchecked(p)).abs());
        }
    }
    checks.push(Check::new(
        "constant-p: Ent/C(n,2) = h(p) for n <= 6",
        worst <= 1e-9,
        format!("max |Ent/C(n,2) - h(p)| = {worst:.3e}"),
    ));

    let mut rng = RngStream::new(seed).rng();
    let w = random_stepfunction(&mut rng, 2, false);
    let gaps: Vec<f64> = (3..=6usize)
        .map(|n| {
            let d = exact_graph_distribution(n, &w)?;
            let pairs = (n * (n - 1) / 2) as f64;
            Ok((d.entropy_bits() / pairs - w.entropy()).abs())
        })
        .collect::<Result<_>>()?;
    let monotone = gaps.windows(2).all(|g| g[1] <= g[0] + 1e-9);
    checks.push(Check::new(
        "2-step: |Ent/C(n,2) - Ent(W)| non-increasing for n = 3..6",
        monotone,
        format!("gaps = {gaps:?}"),
    ));
    Ok(SuiteReport {
        suite: "eq1-limit".into(),
        checks,
    })
}

/// Entropy continuity and the distribution-distance bound on random
/// stepfunction pairs (exact distributions).
pub fn lemma_approx(pairs: u64, seed: u64) -> Result<SuiteReport> {
    let mut rng = RngStream::new(seed).rng();
    let mut continuity_violations = 0u64;
    let mut distance_violations = 0u64;
    for _ in 0..pairs {
        let n = rng.gen_range(2..=3usize);
        let q = rng.gen_range(1..=3usize);
        let w1 = random_stepfunction(&mut rng, q, false);
        let w2 = random_stepfunction(&mut rng, q, false);
        let d1 = exact_graph_distribution(n, &w1)?;
        let d2 = exact_graph_distribution(n, &w2)?;
        let tv = tv_like_distance(&d1, &d2)?;
        let omega = (1u64 << (n * (n - 1) / 2)) as f64;
        let lhs = (d1.entropy_bits() - d2.entropy_bits()).abs();
        if lhs > omega * binary_entropy_unchecked(tv / omega) + 1e-9 {
            continuity_violations += 1;
        }
        if tv > (n * n) as f64 * w1.l1_distance(&w2) + 1e-9 {
            distance_violations += 1;
        }
    }
    Ok(SuiteReport {
        suite: "lemma-approx".into(),
        checks: vec![
            Check::new(
                "|Ent(mu1) - Ent(mu2)| <= |Omega| h(||mu1 - mu2||_1 / |Omega|)",
                continuity_violations == 0,
                format!("{continuity_violations} violations in {pairs} pairs"),
            ),
            Check::new(
                "||mu1 - mu2||_1 <= n^2 ||W1 - W2||_1",
                distance_violations == 0,
                format!("{distance_violations} violations in {pairs} pairs"),
            ),
        ],
    })
}

/// The diagonal-block counterexample: entropy is linear in n (never above
/// 2n), and the union-of-n-cliques-of-size-n witness behaves as claimed.
pub fn janson(n_max: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut values = Vec::new();
    let mut bounded = true;
    for n in 1..=n_max.min(9) {
        let e = diagonal_block_exact_entropy(n)?;
        bounded &= e <= 2.0 * n as f64;
        values.push(e);
    }
    checks.push(Check::new(
        "diagonal-block entropy <= 2n for n <= 9",
        bounded,
        format!("values = {values:?}"),
    ));
    let linear = (4..=n_max.min(9))
        .all(|n| {
            let ratio = values[n - 1] / n as f64;
            (0.9..=2.0).contains(&ratio)
        });
    checks.push(Check::new(
        "entropy/n in [0.9, 2] for n = 4..9 (linear growth)",
        linear,
        format!(
            "ratios = {:?}",
            (4..=n_max.min(9))
                .map(|n| values[n - 1] / n as f64)
                .collect::<Vec<_>>()
        ),
    ));
    let mut homogeneous_ok = true;
    let mut positive_ok = true;
    for n in 2..=4usize {
        let g = LabeledGraph::clique_union(n, n);
        homogeneous_ok &= largest_homogeneous_set(&g)? == n;
        positive_ok &= clique_partition_probability(&vec![n; n]).is_positive();
    }
    checks.push(Check::new(
        "largest homogeneous set of n disjoint n-cliques equals n (n = 2..4)",
        homogeneous_ok,
        String::new(),
    ));
    checks.push(Check::new(
        "n disjoint n-cliques have positive sampling probability (exact)",
        positive_ok,
        String::new(),
    ));
    Ok(SuiteReport {
        suite: "janson".into(),
        checks,
    })
}

/// The K_{2,2}-free mixture never realizes the bigraph B(2): p^b is exactly
/// zero, every block is K_{2,2}-free, and no sampled graph contains B(2).
pub fn remark2(samples: u64, n: usize, seed: u64) -> Result<SuiteReport> {
    let mixture = ktt_mixture_graphon(2, 5, None)?;
    let b2 = bigraph_b(2)?;
    let pb = bigraph_density_mixture_exact(&b2, &mixture)?;
    let blocks_free = mixture
        .graphs()
        .iter()
        .map(|g| is_ktt_free(g, 2))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let w = mixture.to_stepfunction();
    let mut rng = RngStream::new(seed).rng();
    let mut containing = 0u64;
    for _ in 0..samples {
        // blow-ups of K_{2,2}-free graphs may contain K_{2,2} as a subgraph
        // (duplicated endpoints of an edge), but never an induced B(2)
        let (g, _) = sample_graph_stepfunction(n, &w, &mut rng);
        if contains_induced_subbigraph(&g, &b2)? {
            containing += 1;
        }
    }
    Ok(SuiteReport {
        suite: "remark2".into(),
        checks: vec![
            Check::new(
                "p^b(B(2); mixture) = 0 exactly",
                pb.is_zero(),
                format!("p^b = {pb}"),
            ),
            Check::new(
                "every enumerated block graph is K_{2,2}-free",
                blocks_free,
                format!("{} blocks", mixture.graphs().len()),
            ),
            Check::new(
                "no sampled graph contains B(2) as induced sub-bigraph",
                containing == 0,
                format!("{containing} of {samples} samples contain B(2) (n = {n})"),
            ),
        ],
    })
}

/// Support of G(n,W) for random-free stepfunctions is at most q^n.
pub fn support_bound(graphons: u64, seed: u64) -> Result<SuiteReport> {
    let mut rng = RngStream::new(seed).rng();
    let mut violations = 0u64;
    for _ in 0..graphons {
        let q = rng.gen_range(1..=4usize);
        let n = rng.gen_range(2..=5usize);
        let w = random_stepfunction(&mut rng, q, true);
        let d = exact_graph_distribution(n, &w)?;
        if d.support_size() > q.pow(n as u32) {
            violations += 1;
        }
    }
    Ok(SuiteReport {
        suite: "support-bound".into(),
        checks: vec![Check::new(
            "|supp(G(n,W))| <= q^n for random-free stepfunctions",
            violations == 0,
            format!("{violations} violations in {graphons} graphons"),
        )],
    })
}

/// Unlabeled-entropy sandwich on random stepfunctions (not one of the named
/// CLI suites; exercised by the acceptance tests directly).
pub fn unlabeled_sandwich(graphons: u64, seed: u64) -> Result<SuiteReport> {
    let mut rng = RngStream::new(seed).rng();
    let mut violations = 0u64;
    for _ in 0..graphons {
        let n = rng.gen_range(2..=4usize);
        let q = rng.gen_range(1..=3usize);
        let w = random_stepfunction(&mut rng, q, false);
        let d = exact_graph_distribution(n, &w)?;
        let u = unlabel_distribution(&d)?;
        let labeled = d.entropy_bits();
        let unlabeled = u.entropy_bits();
        let log_fact: f64 = (2..=n).map(|k| (k as f64).log2()).sum();
        if !(unlabeled <= labeled + 1e-9 && unlabeled >= labeled - log_fact - 1e-9) {
            violations += 1;
        }
    }
    Ok(SuiteReport {
        suite: "unlabeled-sandwich".into(),
        checks: vec![Check::new(
            "Ent(labeled) - log2(n!) <= Ent(unlabeled) <= Ent(labeled)",
            violations == 0,
            format!("{violations} violations in {graphons} graphons"),
        )],
    })
}
