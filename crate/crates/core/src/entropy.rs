//! Distributions of G(n,W) for small n, Shannon and conditional entropy,
//! total-variation-style distance, plug-in estimation, the transversal
//! conditional-entropy lower bound, the diagonal-block exact entropy, and
//! unlabeled-graph entropy.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use std::collections::HashMap;

use crate::constructions::{IntervalPartition, TransversalStructure};
use crate::error::{Error, Result};
use crate::graph::{canonical_mask, LabeledGraph};
use crate::info::{neg_p_log_p, shannon_entropy_exact, shannon_entropy_f64, Bits};
use crate::sampling::sample_assignment;
use crate::step::StepFunction;

/// Feasibility bound for exact distribution enumeration: q^n * 2^{C(n,2)}.
pub const EXACT_DISTRIBUTION_BOUND: f64 = 1e8;

/// A distribution over the labeled graphs on [n], dense by edge mask
/// (requires C(n,2) <= 64 outcomes in practice, and far fewer to be useful).
#[derive(Clone, Debug, PartialEq)]
pub enum GraphDistribution {
    /// Exact rational probabilities, one per edge mask, summing to 1 exactly.
    Exact { n: usize, probs: Vec<BigRational> },
    /// Empirical frequencies, summing to 1 within 1e-9.
    Empirical { n: usize, probs: Vec<f64> },
}

impl GraphDistribution {
    pub fn n(&self) -> usize {
        match self {
            GraphDistribution::Exact { n, .. } | GraphDistribution::Empirical { n, .. } => *n,
        }
    }

    pub fn outcomes(&self) -> usize {
        match self {
            GraphDistribution::Exact { probs, .. } => probs.len(),
            GraphDistribution::Empirical { probs, .. } => probs.len(),
        }
    }

    pub fn prob_f64(&self, mask: u64) -> f64 {
        match self {
            GraphDistribution::Exact { probs, .. } => probs[mask as usize]
                .to_f64()
                .expect("probability fits f64"),
            GraphDistribution::Empirical { probs, .. } => probs[mask as usize],
        }
    }

    pub fn support_size(&self) -> usize {
        match self {
            GraphDistribution::Exact { probs, .. } => {
                probs.iter().filter(|p| !p.is_zero()).count()
            }
            GraphDistribution::Empirical { probs, .. } => {
                probs.iter().filter(|&&p| p > 0.0).count()
            }
        }
    }

    pub fn entropy_bits(&self) -> Bits {
        match self {
            GraphDistribution::Exact { probs, .. } => shannon_entropy_exact(probs),
            GraphDistribution::Empirical { probs, .. } => shannon_entropy_f64(probs),
        }
    }
}

/// Exact distribution of G(n,W) for a stepfunction W: sums the assignment
/// measure Prod m_{a_i} times Prod over pairs of the edge/non-edge factor,
/// over all q^n step assignments and all 2^{C(n,2)} graphs.
pub fn exact_graph_distribution(n: usize, w: &StepFunction) -> Result<GraphDistribution> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let q = w.steps();
    let pairs = n * (n - 1) / 2;
    let states = (q as f64).powi(n as i32) * 2f64.powi(pairs as i32);
    if states > EXACT_DISTRIBUTION_BOUND {
        return Err(Error::SizeBound(format!(
            "exact distribution needs q^n * 2^C(n,2) <= 1e8, got {states:.3e}"
        )));
    }
    let mut probs = vec![BigRational::zero(); 1usize << pairs];
    let mut assignment = vec![0usize; n];
    loop {
        let weight: BigRational = assignment.iter().map(|&a| w.measure(a).clone()).product();
        // pair probabilities for this assignment, in pair_index order
        let mut pair_probs = Vec::with_capacity(pairs);
        for i in 0..n {
            for j in (i + 1)..n {
                pair_probs.push(w.value(assignment[i], assignment[j]).clone());
            }
        }
        distribute(&mut probs, &pair_probs, 0, 0, weight);
        // odometer over assignments
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            assignment[pos] += 1;
            if assignment[pos] < q {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    let total: BigRational = probs.iter().sum();
    debug_assert!(total.is_one());
    Ok(GraphDistribution::Exact { n, probs })
}

fn distribute(probs: &mut [BigRational], pair_probs: &[BigRational], e: usize, mask: u64, p: BigRational) {
    if p.is_zero() {
        return;
    }
    if e == pair_probs.len() {
        probs[mask as usize] += p;
        return;
    }
    let pe = &pair_probs[e];
    distribute(probs, pair_probs, e + 1, mask, (BigRational::one() - pe) * &p);
    distribute(probs, pair_probs, e + 1, mask | 1 << e, pe * p);
}

/// Shannon entropy in bits of a graph distribution.
pub fn shannon_entropy(dist: &GraphDistribution) -> Bits {
    dist.entropy_bits()
}

/// A finite joint law of (X, Y), exact rationals: `probs[x][y]`.
#[derive(Clone, Debug)]
pub struct JointDistribution {
    probs: Vec<Vec<BigRational>>,
}

impl JointDistribution {
    pub fn new(probs: Vec<Vec<BigRational>>) -> Result<Self> {
        if probs.is_empty() || probs.iter().any(|row| row.len() != probs[0].len()) {
            return Err(Error::InvalidPartition("ragged joint distribution".into()));
        }
        if probs.iter().flatten().any(|p| p.is_negative()) {
            return Err(Error::InvalidPartition("negative joint mass".into()));
        }
        let total: BigRational = probs.iter().flatten().sum();
        if !total.is_one() {
            return Err(Error::InvalidPartition(format!(
                "joint mass sums to {total}, not 1"
            )));
        }
        Ok(JointDistribution { probs })
    }

    pub fn x_marginal(&self) -> Vec<BigRational> {
        self.probs.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn y_marginal(&self) -> Vec<BigRational> {
        let ny = self.probs[0].len();
        (0..ny).map(|y| self.probs.iter().map(|row| &row[y]).sum()).collect()
    }

    pub fn x_entropy(&self) -> Bits {
        shannon_entropy_exact(&self.x_marginal())
    }

    /// Ent(X | Y) = sum_y Pr[Y=y] Ent(X | Y=y), in bits.
    pub fn conditional_entropy(&self) -> Bits {
        let mut total = 0.0;
        for (y, py) in self.y_marginal().iter().enumerate() {
            if py.is_zero() {
                continue;
            }
            let cond: Vec<BigRational> =
                self.probs.iter().map(|row| row[y].clone() / py).collect();
            total += py.to_f64().expect("mass fits f64") * shannon_entropy_exact(&cond);
        }
        total
    }
}

/// Ent(X | Y) of a joint law, in bits. Always at most Ent(X).
pub fn conditional_entropy(joint: &JointDistribution) -> Bits {
    joint.conditional_entropy()
}

/// Plug-in entropy of the empirical distribution of the samples plus the
/// Miller-Madow bias correction (K-1)/(2 N ln 2), K = observed support size.
/// A diagnostic only: plug-in estimates systematically undershoot and this
/// value is never used in inequality assertions.
pub fn entropy_plugin_mm(samples: &[LabeledGraph]) -> Result<Bits> {
    if samples.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut counts: HashMap<&LabeledGraph, u64> = HashMap::new();
    for g in samples {
        *counts.entry(g).or_insert(0) += 1;
    }
    let n = samples.len() as f64;
    let plugin: f64 = counts.values().map(|&c| neg_p_log_p(c as f64 / n)).sum();
    let correction = (counts.len() as f64 - 1.0) / (2.0 * n * std::f64::consts::LN_2);
    Ok(plugin + correction)
}

/// Monte Carlo lower bounds on Ent(G(n, W_I)) for the transversal-uniform
/// graphon, both valid by conditioning on the latent assignment.
#[derive(Clone, Copy, Debug)]
pub struct TransversalBound {
    /// mean exact conditional entropy given the assignment (cross-interval
    /// class pairs, one bit each)
    pub conditional_bits: f64,
    pub conditional_stderr: f64,
    /// mean of C(|Im rho|, 2), which the conditional entropy dominates
    pub image_pairs_bits: f64,
    pub image_pairs_stderr: f64,
    pub trials: u64,
}

pub fn transversal_entropy_lower_bound(
    n: usize,
    partition: &IntervalPartition,
    structure: &TransversalStructure,
    trials: u64,
    rng: &mut impl Rng,
) -> Result<TransversalBound> {
    if trials == 0 {
        return Err(Error::SizeBound("trials must be >= 1".into()));
    }
    let mut cond = Accumulator::default();
    let mut img = Accumulator::default();
    for _ in 0..trials {
        let a = sample_assignment(n, partition, structure, rng)?;
        let cross = a.cross_class_pairs() as f64;
        let im = a.image_size() as f64;
        cond.push(cross);
        img.push(im * (im - 1.0) / 2.0);
    }
    Ok(TransversalBound {
        conditional_bits: cond.mean(),
        conditional_stderr: cond.stderr(),
        image_pairs_bits: img.mean(),
        image_pairs_stderr: img.stderr(),
        trials,
    })
}

/// Mergeable (sum, sum of squares, count) accumulator for Monte Carlo means.
#[derive(Clone, Copy, Debug, Default)]
pub struct Accumulator {
    pub sum: f64,
    pub sum_sq: f64,
    pub count: u64,
}

impl Accumulator {
    pub fn push(&mut self, x: f64) {
        self.sum += x;
        self.sum_sq += x * x;
        self.count += 1;
    }

    pub fn merge(&mut self, other: &Accumulator) {
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
        self.count += other.count;
    }

    pub fn mean(&self) -> f64 {
        self.sum / self.count as f64
    }

    pub fn stderr(&self) -> f64 {
        if self.count < 2 {
            return f64::NAN;
        }
        let n = self.count as f64;
        let var = (self.sum_sq - self.sum * self.sum / n) / (n - 1.0);
        (var.max(0.0) / n).sqrt()
    }
}

/// Exact probability that n points of the diagonal-block graphon realize a
/// given clique partition, by block sizes. Point i lands in interval k with
/// probability 2^{-k}; a partition {B_1..B_m} requires the blocks to pick
/// distinct intervals. Summing the injective assignments exactly over the
/// partition lattice of the block set:
///   sum over set partitions sigma of [m] of
///     prod over classes C of (-1)^{|C|-1} (|C|-1)! * y_C / (1 - y_C),
/// with y_C = 2^{-sum of |B| over B in C}. No truncation is involved.
pub fn clique_partition_probability(block_sizes: &[usize]) -> BigRational {
    let m = block_sizes.len();
    let mut total = BigRational::zero();
    for_each_set_partition(m, &mut |classes| {
        let mut term = BigRational::one();
        for class in classes {
            let s: usize = class.iter().map(|&b| block_sizes[b]).sum();
            let y = BigRational::new(BigInt::one(), BigInt::one() << s);
            let geom = y.clone() / (BigRational::one() - y);
            let mut factorial = BigInt::one();
            for f in 1..class.len() {
                factorial *= BigInt::from(f);
            }
            let sign = if class.len() % 2 == 0 { -1 } else { 1 };
            term *= BigRational::from(factorial * BigInt::from(sign)) * geom;
        }
        total += term;
    });
    total
}

/// Calls `f` with every set partition of {0..n}, as a list of classes.
fn for_each_set_partition(n: usize, f: &mut dyn FnMut(&[Vec<usize>])) {
    fn recurse(i: usize, n: usize, classes: &mut Vec<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>])) {
        if i == n {
            f(classes);
            return;
        }
        for c in 0..classes.len() {
            classes[c].push(i);
            recurse(i + 1, n, classes, f);
            classes[c].pop();
        }
        classes.push(vec![i]);
        recurse(i + 1, n, classes, f);
        classes.pop();
    }
    recurse(0, n, &mut Vec::new(), f);
}

/// Exact entropy of G(n, W) for the diagonal-block graphon, in bits. The
/// sampled graph is a disjoint clique union, so its law is the law of the
/// induced set partition of [n]; each partition's probability is an exact
/// rational (see `clique_partition_probability`) and the partition count is
/// Bell(n), hence the n <= 9 bound.
pub fn diagonal_block_exact_entropy(n: usize) -> Result<Bits> {
    if n == 0 || n > 9 {
        return Err(Error::SizeBound(format!(
            "partition enumeration feasible for 1 <= n <= 9, got {n}"
        )));
    }
    let mut probs = Vec::new();
    for_each_set_partition(n, &mut |classes| {
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        probs.push(clique_partition_probability(&sizes));
    });
    let total: BigRational = probs.iter().sum();
    debug_assert!(total.is_one());
    Ok(shannon_entropy_exact(&probs))
}

/// L1 distance between two graph distributions on the same n:
/// sum over H of |d1(H) - d2(H)|.
pub fn tv_like_distance(d1: &GraphDistribution, d2: &GraphDistribution) -> Result<f64> {
    if d1.n() != d2.n() {
        return Err(Error::SizeBound(format!(
            "distributions on different vertex counts: {} vs {}",
            d1.n(),
            d2.n()
        )));
    }
    if let (GraphDistribution::Exact { probs: p1, .. }, GraphDistribution::Exact { probs: p2, .. }) =
        (d1, d2)
    {
        let total: BigRational = p1
            .iter()
            .zip(p2)
            .map(|(a, b)| (a.clone() - b).abs())
            .sum();
        return Ok(total.to_f64().expect("distance fits f64"));
    }
    Ok((0..d1.outcomes() as u64)
        .map(|m| (d1.prob_f64(m) - d2.prob_f64(m)).abs())
        .sum())
}

/// A distribution over isomorphism classes, keyed by canonical edge mask.
#[derive(Clone, Debug)]
pub struct UnlabeledDistribution {
    pub n: usize,
    /// (canonical mask, probability), sorted by mask
    pub probs: Vec<(u64, BigRational)>,
}

impl UnlabeledDistribution {
    pub fn entropy_bits(&self) -> Bits {
        let ps: Vec<BigRational> = self.probs.iter().map(|(_, p)| p.clone()).collect();
        shannon_entropy_exact(&ps)
    }
}

/// Groups an exact labeled-graph distribution by isomorphism class
/// (brute-force canonical forms, n <= 6).
pub fn unlabel_distribution(d: &GraphDistribution) -> Result<UnlabeledDistribution> {
    let GraphDistribution::Exact { n, probs } = d else {
        return Err(Error::Unsupported(
            "unlabeling needs an exact distribution".into(),
        ));
    };
    if *n > 6 {
        return Err(Error::SizeBound(format!(
            "canonical grouping feasible for n <= 6, got {n}"
        )));
    }
    let mut grouped: HashMap<u64, BigRational> = HashMap::new();
    for (mask, p) in probs.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let canon = canonical_mask(*n, mask as u64);
        *grouped.entry(canon).or_insert_with(BigRational::zero) += p;
    }
    let mut out: Vec<(u64, BigRational)> = grouped.into_iter().collect();
    out.sort_by_key(|&(m, _)| m);
    Ok(UnlabeledDistribution { n: *n, probs: out })
}
