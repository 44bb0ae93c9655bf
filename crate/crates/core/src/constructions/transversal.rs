//! Layer structure and interval partition behind the transversal-uniform
//! graphon.
//!
//! Layer sizes obey log2 |A_i| = sum_{j<i} |A_j| with |A_1| = 1, so they
//! explode immediately: |A_5| = 2^2059 is the last layer whose size is
//! materializable as a big integer, |A_6| is kept as its log2 (itself a
//! 2059-bit integer), and everything beyond is marked symbolic.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest log2 we are willing to materialize as an exact power of two
/// (in bits). |A_5| needs 2059, so this is generous.
const MAX_EXACT_LOG2: u64 = 1 << 20;

/// A layer size (or cumulative count) in the hybrid exact / log2 / symbolic
/// representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LayerSize {
    /// The value itself, exactly.
    Exact(BigUint),
    /// Only log2 of the value is representable.
    Log2(BigUint),
    /// Not representable at all (log2 would itself overflow memory).
    Beyond,
}

impl LayerSize {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            LayerSize::Exact(v) => Some(v),
            _ => None,
        }
    }
}

/// Layer sizes |A_i| and cumulative counts G_i = sum_{j<=i} |A_j| of the
/// transversal-uniform graph.
#[derive(Clone, Debug)]
pub struct TransversalStructure {
    sizes: Vec<LayerSize>,
    cumulative: Vec<LayerSize>,
}

impl TransversalStructure {
    pub fn depth(&self) -> usize {
        self.sizes.len()
    }

    /// |A_i|, 1-based.
    pub fn size(&self, i: usize) -> &LayerSize {
        &self.sizes[i - 1]
    }

    /// G_i = sum_{j<=i} |A_j|, 1-based.
    pub fn cumulative(&self, i: usize) -> &LayerSize {
        &self.cumulative[i - 1]
    }

    /// Exact |A_i| when materializable (layers 1..=5).
    pub fn exact_size(&self, i: usize) -> Option<&BigUint> {
        self.sizes.get(i - 1).and_then(|s| s.exact())
    }
}

/// Iterates the recurrence log2 |A_i| = G_{i-1} from |A_1| = 1.
pub fn layer_sizes(depth: usize) -> TransversalStructure {
    assert!(depth >= 1, "depth must be >= 1");
    let mut sizes = Vec::with_capacity(depth);
    let mut cumulative = Vec::with_capacity(depth);
    // G_{i-1}, exact while representable
    let mut cum: Option<BigUint> = Some(BigUint::zero());
    for _ in 0..depth {
        let size = match &cum {
            Some(g) => match g.to_u64() {
                Some(bits) if bits <= MAX_EXACT_LOG2 => {
                    LayerSize::Exact(BigUint::one() << bits)
                }
                _ => LayerSize::Log2(g.clone()),
            },
            None => LayerSize::Beyond,
        };
        cum = match (&cum, &size) {
            (Some(g), LayerSize::Exact(s)) => Some(g + s),
            _ => None,
        };
        cumulative.push(match &cum {
            Some(g) => LayerSize::Exact(g.clone()),
            None => LayerSize::Beyond,
        });
        sizes.push(size);
    }
    TransversalStructure { sizes, cumulative }
}

/// A rate function alpha with lim alpha(n) = 0, used to choose the interval
/// partition. Closed forms know the set {n : alpha(n) > threshold} exactly;
/// a custom evaluator is certified either by monotonicity or by an
/// exhaustive scan up to its eval cap (a documented heuristic).
pub enum AlphaSchedule {
    /// alpha(n) = 1/n.
    InverseN,
    /// alpha(n) = 2^{-n}.
    ExpDecay,
    Custom {
        evaluator: Box<dyn Fn(u64) -> f64 + Send + Sync>,
        eval_cap: u64,
        monotone: bool,
    },
}

impl AlphaSchedule {
    pub fn alpha(&self, n: u64) -> f64 {
        match self {
            AlphaSchedule::InverseN => 1.0 / n as f64,
            AlphaSchedule::ExpDecay => (-(n as f64)).exp2(),
            AlphaSchedule::Custom { evaluator, .. } => evaluator(n),
        }
    }

    /// Largest n with alpha(n) > 2^{-2k-9}, or zero if no such n.
    fn threshold_count(&self, k: u32) -> Result<BigUint> {
        match self {
            AlphaSchedule::InverseN => {
                // 1/n > 2^{-(2k+9)}  <=>  n <= 2^{2k+9} - 1
                Ok((BigUint::one() << (2 * k as u64 + 9)) - BigUint::one())
            }
            AlphaSchedule::ExpDecay => {
                // 2^{-n} > 2^{-(2k+9)}  <=>  n <= 2k + 8
                Ok(BigUint::from(2 * k as u64 + 8))
            }
            AlphaSchedule::Custom {
                evaluator,
                eval_cap,
                monotone,
            } => {
                let threshold = (-(2.0 * k as f64 + 9.0)).exp2();
                let mut last = 0u64;
                for n in 1..=*eval_cap {
                    if evaluator(n) > threshold {
                        last = n;
                    } else if *monotone {
                        return Ok(BigUint::from(last));
                    }
                }
                if evaluator(*eval_cap) > threshold {
                    return Err(Error::AlphaCertification(format!(
                        "alpha({eval_cap}) still above 2^-{} at the eval cap",
                        2 * k + 9
                    )));
                }
                Ok(BigUint::from(last))
            }
        }
    }

    /// g_k = max(2^{k+5}, max{n : alpha(n) > 2^{-2k-9}}).
    pub fn group_count(&self, k: u32) -> Result<BigUint> {
        let floor = BigUint::one() << (k as u64 + 5);
        Ok(self.threshold_count(k)?.max(floor))
    }
}

/// Serializable closed-form alpha schedules (the CLI-facing subset).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum AlphaForm {
    InverseN,
    ExpDecay,
}

impl AlphaForm {
    pub fn schedule(self) -> AlphaSchedule {
        match self {
            AlphaForm::InverseN => AlphaSchedule::InverseN,
            AlphaForm::ExpDecay => AlphaSchedule::ExpDecay,
        }
    }
}

/// One group of the interval partition: g_k intervals of common exact length
/// beta_k = 1/(g_k 2^k). Group k carries total measure exactly 2^{-k}.
#[derive(Clone, Debug)]
pub struct Group {
    pub count: BigUint,
    pub beta: BigRational,
}

/// The alpha-driven interval partition, materialized for groups 1..=k_max.
/// The remaining tail carries measure 2^{-k_max}; samplers refuse (rather
/// than mis-sample) if a draw lands there, which at the default k_max = 64
/// has probability 2^{-64}.
#[derive(Clone, Debug)]
pub struct IntervalPartition {
    groups: Vec<Group>,
    /// offsets[k-1] = number of intervals in groups 1..k (i.e. G_{k-1}).
    offsets: Vec<BigUint>,
}

pub const DEFAULT_K_MAX: u32 = 64;

/// Builds the partition of Theorem 1's proof for the given alpha schedule.
pub fn alpha_partition(alpha: &AlphaSchedule, k_max: u32) -> Result<IntervalPartition> {
    if k_max == 0 {
        return Err(Error::InvalidPartition("k_max must be >= 1".into()));
    }
    let mut groups = Vec::with_capacity(k_max as usize);
    let mut offsets = Vec::with_capacity(k_max as usize);
    let mut before = BigUint::zero();
    for k in 1..=k_max {
        let count = alpha.group_count(k)?;
        let denom = count.clone() << k as u64;
        let beta = BigRational::new(
            BigUint::one().into(),
            num_bigint::BigInt::from(denom),
        );
        offsets.push(before.clone());
        before += &count;
        groups.push(Group { count, beta });
    }
    Ok(IntervalPartition { groups, offsets })
}

impl IntervalPartition {
    pub fn num_groups(&self) -> u32 {
        self.groups.len() as u32
    }

    /// Group k (1-based), if materialized.
    pub fn group(&self, k: u32) -> Option<&Group> {
        self.groups.get(k as usize - 1)
    }

    /// Number of intervals before group k, i.e. the proof's G_{k-1}.
    pub fn intervals_before(&self, k: u32) -> &BigUint {
        &self.offsets[k as usize - 1]
    }

    /// Total measure of group k; equals 2^{-k} exactly by construction.
    pub fn group_mass(&self, k: u32) -> BigRational {
        let g = &self.groups[k as usize - 1];
        BigRational::from(num_bigint::BigInt::from(g.count.clone())) * &g.beta
    }

    /// Measure covered by the materialized groups: 1 - 2^{-k_max}.
    pub fn covered_mass(&self) -> BigRational {
        (1..=self.num_groups()).map(|k| self.group_mass(k)).sum()
    }

    /// Probability that two independent uniform points fall in the same
    /// interval, summed over materialized groups: sum_k 1/(g_k 4^k).
    pub fn same_interval_probability(&self) -> BigRational {
        let mut total = BigRational::zero();
        for g in &self.groups {
            total += g.beta.clone() * &g.beta
                * BigRational::from(num_bigint::BigInt::from(g.count.clone()));
        }
        total
    }
}
