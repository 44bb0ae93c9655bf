//! Samplers for G(n,W): generic stepfunction and pointwise samplers, plus
//! exact structured samplers for the transversal-uniform and diagonal-block
//! graphons with their latent assignments exposed.
//!
//! The exact transversal sampler replaces real-valued points with an
//! (interval, collision-class) latent state: a point draws its interval
//! (group k with probability exactly 2^{-k}, then a uniform big-integer
//! offset), points in the same interval collide into vertex classes with
//! probability 1/|A_i| per occupied subinterval (exact rationals for the
//! representable layers i <= 5), and each cross-interval class pair flips
//! one independent fair coin shared by all members. Collisions in layers
//! beyond 5 have probability below 2^{-2059} and are treated as exactly
//! zero; the total-variation error this introduces is far below any
//! physical RNG resolution.

use num_bigint::{BigUint, RandBigInt};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use std::collections::HashMap;

use crate::constructions::{IntervalPartition, TransversalStructure};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::spec::GraphonSpec;
use crate::step::StepFunction;

/// A deterministic RNG handle: identical (seed, stream, call sequence)
/// produce identical outputs. Independent streams are independent for all
/// practical purposes and may be merged across threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream { seed, stream: 0 }
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        RngStream { seed, stream }
    }

    pub fn substream(&self, stream: u64) -> Self {
        RngStream {
            seed: self.seed,
            stream,
        }
    }

    pub fn rng(&self) -> ChaCha12Rng {
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// An interval of the transversal partition: group k and 0-based offset
/// within the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalId {
    pub group: u32,
    pub offset: BigUint,
}

impl IntervalId {
    /// Layer index (1-based) when this interval belongs to one of the five
    /// exactly-representable layers. Interval i corresponds to layer i, and
    /// since g_1 >= 2^6 the first five global intervals all sit in group 1.
    fn small_layer(&self) -> Option<usize> {
        if self.group == 1 {
            let off = self.offset.to_u64()?;
            if off < 5 {
                return Some(off as usize + 1);
            }
        }
        None
    }
}

/// Latent state of an exact transversal-uniform sample.
#[derive(Clone, Debug)]
pub struct SampledAssignment {
    /// occupied intervals, in order of first occupation
    pub intervals: Vec<IntervalId>,
    /// per point: index into `intervals`
    pub point_interval: Vec<usize>,
    /// per point: global class id
    pub point_class: Vec<usize>,
    /// per class: index into `intervals`
    pub class_interval: Vec<usize>,
}

impl SampledAssignment {
    /// |Im(rho)|: number of occupied intervals.
    pub fn image_size(&self) -> usize {
        self.intervals.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_interval.len()
    }

    /// Number of occupied intervals in group k.
    pub fn group_image_count(&self, k: u32) -> usize {
        self.intervals.iter().filter(|iv| iv.group == k).count()
    }

    /// Number of class pairs lying in distinct intervals. Each such pair is
    /// an independent fair coin, so this is the exact conditional entropy of
    /// the sampled graph given the assignment, in bits.
    pub fn cross_class_pairs(&self) -> u64 {
        let m = self.class_count() as u64;
        let mut per_interval = vec![0u64; self.intervals.len()];
        for &slot in &self.class_interval {
            per_interval[slot] += 1;
        }
        let same: u64 = per_interval.iter().map(|&c| c * (c - 1) / 2).sum();
        m * (m - 1) / 2 - same
    }

    /// Exact conditional entropy of the graph given this assignment (bits).
    pub fn conditional_entropy_bits(&self) -> f64 {
        self.cross_class_pairs() as f64
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "intervals": self.intervals.iter().map(|iv| {
                serde_json::json!({"group": iv.group, "offset": iv.offset.to_string()})
            }).collect::<Vec<_>>(),
            "point_interval": self.point_interval,
            "point_class": self.point_class,
            "class_interval": self.class_interval,
        })
    }
}

/// |A_i| for the representable layers 1..=5.
fn small_layer_sizes(structure: &TransversalStructure) -> Result<Vec<BigUint>> {
    if structure.depth() < 5 {
        return Err(Error::InvalidPartition(
            "transversal structure must materialize layers 1..=5".into(),
        ));
    }
    Ok((1..=5)
        .map(|i| structure.exact_size(i).expect("layers 1..=5 exact").clone())
        .collect())
}

/// Draws one interval: geometric group (fair coins, mass 2^{-k} exactly),
/// then a uniform offset within the group.
fn draw_interval<R: Rng>(partition: &IntervalPartition, rng: &mut R) -> Result<IntervalId> {
    let mut group = 1u32;
    while !rng.gen::<bool>() {
        group += 1;
        if group > partition.num_groups() {
            return Err(Error::PartitionTailExceeded {
                group,
                materialized: partition.num_groups(),
            });
        }
    }
    let count = &partition.group(group).expect("group materialized").count;
    let offset = if let Some(c) = count.to_u64() {
        BigUint::from(rng.gen_range(0..c))
    } else {
        rng.gen_biguint_below(count)
    };
    Ok(IntervalId { group, offset })
}

/// Samples only the latent assignment of n points (intervals and collision
/// classes), without generating edges.
pub fn sample_assignment(
    n: usize,
    partition: &IntervalPartition,
    structure: &TransversalStructure,
    rng: &mut impl Rng,
) -> Result<SampledAssignment> {
    let layer_sizes = small_layer_sizes(structure)?;
    let mut intervals: Vec<IntervalId> = Vec::new();
    let mut interval_slots: HashMap<IntervalId, usize> = HashMap::new();
    // per interval slot: classes as (vertex index within the layer, class id);
    // vertex indices are only materialized for the small layers
    let mut interval_classes: Vec<Vec<(Option<BigUint>, usize)>> = Vec::new();
    let mut point_interval = Vec::with_capacity(n);
    let mut point_class = Vec::with_capacity(n);
    let mut class_interval = Vec::new();

    for _ in 0..n {
        let iv = draw_interval(partition, rng)?;
        let slot = *interval_slots.entry(iv.clone()).or_insert_with(|| {
            intervals.push(iv.clone());
            interval_classes.push(Vec::new());
            intervals.len() - 1
        });
        point_interval.push(slot);

        let class_id = match iv.small_layer() {
            Some(layer) => {
                // uniform subinterval; equal indices collide into one class
                let size = &layer_sizes[layer - 1];
                let vertex = if let Some(s) = size.to_u64() {
                    BigUint::from(rng.gen_range(0..s))
                } else {
                    rng.gen_biguint_below(size)
                };
                match interval_classes[slot]
                    .iter()
                    .find(|(v, _)| v.as_ref() == Some(&vertex))
                {
                    Some(&(_, id)) => id,
                    None => {
                        let id = class_interval.len();
                        class_interval.push(slot);
                        interval_classes[slot].push((Some(vertex), id));
                        id
                    }
                }
            }
            None => {
                // layer >= 6: collision probability < 2^{-2059}, treated as 0
                let id = class_interval.len();
                class_interval.push(slot);
                interval_classes[slot].push((None, id));
                id
            }
        };
        point_class.push(class_id);
    }

    Ok(SampledAssignment {
        intervals,
        point_interval,
        point_class,
        class_interval,
    })
}

/// Exact sampler for G(n, W_I): latent assignment plus edges. Pairs in the
/// same interval are never adjacent; each cross-interval class pair flips
/// one fair coin shared by all its members.
pub fn sample_graph_transversal(
    n: usize,
    partition: &IntervalPartition,
    structure: &TransversalStructure,
    rng: &mut impl Rng,
) -> Result<(LabeledGraph, SampledAssignment)> {
    let assignment = sample_assignment(n, partition, structure, rng)?;
    let m = assignment.class_count();
    // coin per unordered class pair, in a fixed order
    let mut class_edge = vec![false; m * m];
    for a in 0..m {
        for b in (a + 1)..m {
            if assignment.class_interval[a] != assignment.class_interval[b] {
                let e = rng.gen::<bool>();
                class_edge[a * m + b] = e;
            }
        }
    }
    let mut graph = LabeledGraph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (assignment.point_class[i], assignment.point_class[j]);
            if a == b {
                continue;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if class_edge[lo * m + hi] {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok((graph, assignment))
}

/// Generic sampler for a stepfunction: each vertex draws a step with
/// probability equal to its measure, each pair an independent edge coin.
/// Returns the latent step assignment.
pub fn sample_graph_stepfunction(
    n: usize,
    w: &StepFunction,
    rng: &mut impl Rng,
) -> (LabeledGraph, Vec<usize>) {
    let measures: Vec<f64> = (0..w.steps()).map(|i| w.measure_f64(i)).collect();
    let steps: Vec<usize> = (0..n).map(|_| sample_cumulative(&measures, rng)).collect();
    let mut graph = LabeledGraph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let p = w.value_f64(steps[i], steps[j]);
            if rng.gen::<f64>() < p {
                graph.add_edge(i, j).expect("edge in range");
            }
        }
    }
    (graph, steps)
}

fn sample_cumulative(measures: &[f64], rng: &mut impl Rng) -> usize {
    let x: f64 = rng.gen();
    let mut cum = 0.0;
    for (i, m) in measures.iter().enumerate() {
        cum += m;
        if x < cum {
            return i;
        }
    }
    measures.len() - 1
}

/// Exact sampler for the diagonal-block graphon: each point draws interval
/// i with probability 2^{-i} (geometric, no truncation), edge iff same
/// interval. The output is always a disjoint union of cliques.
pub fn sample_graph_diagonal_block(
    n: usize,
    rng: &mut impl Rng,
) -> (LabeledGraph, Vec<u64>) {
    let intervals: Vec<u64> = (0..n)
        .map(|_| {
            let mut i = 1u64;
            while !rng.gen::<bool>() {
                i += 1;
            }
            i
        })
        .collect();
    let mut graph = LabeledGraph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if intervals[i] == intervals[j] {
                graph.add_edge(i, j).expect("edge in range");
            }
        }
    }
    (graph, intervals)
}

/// Result of the float-resolution generic sampler.
#[derive(Clone, Debug)]
pub struct GeneralSample {
    pub graph: LabeledGraph,
    /// True when the spec cannot be sampled exactly at double precision
    /// (transversal-uniform graphons: float points cannot index the
    /// astronomically fine subintervals). Use the exact structured samplers
    /// for distribution-exact output.
    pub approximate: bool,
}

/// Samples G(n,W) by drawing n double-precision uniforms and evaluating W
/// pointwise.
pub fn sample_graph_general(
    n: usize,
    spec: &GraphonSpec,
    rng: &mut impl Rng,
) -> Result<GeneralSample> {
    match spec {
        GraphonSpec::Step { .. } => {
            let w = spec.to_stepfunction()?;
            let (graph, _) = sample_graph_stepfunction(n, &w, rng);
            Ok(GeneralSample {
                graph,
                approximate: false,
            })
        }
        GraphonSpec::KttMixture { .. } => {
            let w = spec.to_stepfunction()?;
            let (graph, _) = sample_graph_stepfunction(n, &w, rng);
            Ok(GeneralSample {
                graph,
                approximate: false,
            })
        }
        GraphonSpec::DiagonalBlock { .. } => {
            // pointwise: interval of x in the dyadic partition
            let points: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
            let interval = |x: f64| -> u64 { (-(1.0 - x).log2()).floor() as u64 + 1 };
            let mut graph = LabeledGraph::new(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    if interval(points[i]) == interval(points[j]) {
                        graph.add_edge(i, j)?;
                    }
                }
            }
            Ok(GeneralSample {
                graph,
                approximate: false,
            })
        }
        GraphonSpec::Transversal { alpha, k_max } => {
            let partition =
                crate::constructions::alpha_partition(&alpha.schedule(), *k_max)?;
            let seed: u64 = rng.gen();
            let keys: Vec<(u64, u64)> = (0..n)
                .map(|_| {
                    let x: f64 = rng.gen();
                    float_interval_key(&partition, x)
                })
                .collect::<Result<_>>()?;
            let mut graph = LabeledGraph::new(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    let (a, b) = (keys[i], keys[j]);
                    if a.0 == b.0 {
                        continue; // same interval: never adjacent
                    }
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    if pseudo_coin(seed, lo, hi) {
                        graph.add_edge(i, j)?;
                    }
                }
            }
            Ok(GeneralSample {
                graph,
                approximate: true,
            })
        }
    }
}

/// (interval, subinterval) key of a float point, at float resolution.
fn float_interval_key(partition: &IntervalPartition, x: f64) -> Result<(u64, u64)> {
    let mut cum = 0.0f64;
    let mut intervals_before = 0u64;
    for k in 1..=partition.num_groups() {
        let mass = 0.5f64.powi(k as i32);
        let group = partition.group(k).expect("group materialized");
        let count_f = group.count.to_f64().unwrap_or(f64::MAX);
        if x < cum + mass || k == partition.num_groups() {
            let rel = ((x - cum) / mass).clamp(0.0, 1.0 - 1e-16);
            let offset = (rel * count_f).floor() as u64;
            let interval = intervals_before.saturating_add(offset);
            // subinterval at float resolution within the interval
            let within = (rel * count_f).fract();
            let sub = (within * 2f64.powi(52)) as u64;
            return Ok((interval, sub));
        }
        cum += mass;
        intervals_before = intervals_before.saturating_add(group.count.to_u64().unwrap_or(u64::MAX));
    }
    Err(Error::PartitionTailExceeded {
        group: partition.num_groups() + 1,
        materialized: partition.num_groups(),
    })
}

/// Deterministic pseudo-coin for the approximate transversal sampler.
fn pseudo_coin(seed: u64, a: (u64, u64), b: (u64, u64)) -> bool {
    let mut h = seed;
    for v in [a.0, a.1, b.0, b.1] {
        h = splitmix64(h ^ v);
    }
    h & 1 == 1
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
