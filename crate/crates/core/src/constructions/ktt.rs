//! The K_{t,t}-free mixture graphon: block-diagonal stepfunction whose i-th
//! block carries W_{H_i} for a canonical enumeration {H_i} of the
//! K_{t,t}-subgraph-free graphs, zero off the diagonal.

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::densities::is_ktt_free;
use crate::error::{Error, Result};
use crate::graph::{permute_mask, for_each_permutation, LabeledGraph};
use crate::step::StepFunction;

/// Enumerates the K_{t,t}-subgraph-free graphs on 1..=n_max vertices, up to
/// isomorphism, ordered by vertex count then by canonical adjacency encoding.
pub fn enumerate_ktt_free(t: usize, n_max: usize) -> Result<Vec<LabeledGraph>> {
    if t == 0 {
        return Err(Error::SizeBound("t must be >= 1".into()));
    }
    if n_max == 0 || n_max > 7 {
        return Err(Error::SizeBound(format!(
            "enumeration feasible for 1 <= n_max <= 7, got {n_max}"
        )));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let pairs = n * (n - 1) / 2;
        let mut canon: Vec<u64> = Vec::new();
        let mut seen = vec![false; 1usize << pairs];
        for mask in 0..1u64 << pairs {
            if seen[mask as usize] {
                continue;
            }
            // Mark the whole isomorphism orbit and record its minimum.
            let mut min_mask = mask;
            for_each_permutation(n, &mut |perm| {
                let m = permute_mask(n, mask, perm);
                seen[m as usize] = true;
                if m < min_mask {
                    min_mask = m;
                }
            });
            let g = LabeledGraph::from_edge_mask(n, min_mask);
            if is_ktt_free(&g, t)? {
                canon.push(min_mask);
            }
        }
        canon.sort_unstable();
        out.extend(canon.into_iter().map(|m| LabeledGraph::from_edge_mask(n, m)));
    }
    Ok(out)
}

/// The mixture graphon: enumeration blocks with their exact lengths, plus an
/// implicit all-zero remainder of measure 1 - sum(lengths).
#[derive(Clone, Debug)]
pub struct KttMixture {
    pub t: usize,
    pub n_max: usize,
    lengths: Vec<BigRational>,
    graphs: Vec<LabeledGraph>,
}

/// Builds the mixture. When `lengths` is None the default schedule
/// lengths[i] = 2^{-(i+1)} is used (summable, remainder positive). Explicit
/// lengths must be positive and sum to at most 1.
pub fn ktt_mixture_graphon(
    t: usize,
    n_max: usize,
    lengths: Option<&[f64]>,
) -> Result<KttMixture> {
    if t < 2 {
        return Err(Error::SizeBound(
            "mixture needs t >= 2 (K_{1,1}-free graphs have no edges)".into(),
        ));
    }
    let graphs = enumerate_ktt_free(t, n_max)?;
    let lens: Vec<BigRational> = match lengths {
        Some(ls) => {
            if ls.len() != graphs.len() {
                return Err(Error::InvalidPartition(format!(
                    "{} lengths given for {} enumerated graphs",
                    ls.len(),
                    graphs.len()
                )));
            }
            let rs: Vec<BigRational> = ls
                .iter()
                .map(|&l| {
                    BigRational::from_f64(l)
                        .filter(|r| r.is_positive())
                        .ok_or_else(|| {
                            Error::InvalidPartition(format!("invalid block length {l}"))
                        })
                })
                .collect::<Result<_>>()?;
            let total: BigRational = rs.iter().sum();
            if total > BigRational::one() {
                return Err(Error::InvalidPartition(
                    "block lengths sum to more than 1".into(),
                ));
            }
            rs
        }
        None => (1..=graphs.len() as u64)
            .map(|i| BigRational::new(1.into(), num_bigint::BigInt::one() << i))
            .collect(),
    };
    Ok(KttMixture {
        t,
        n_max,
        lengths: lens,
        graphs,
    })
}

impl KttMixture {
    pub fn blocks(&self) -> impl Iterator<Item = (&BigRational, &LabeledGraph)> {
        self.lengths.iter().zip(&self.graphs)
    }

    pub fn graphs(&self) -> &[LabeledGraph] {
        &self.graphs
    }

    pub fn lengths(&self) -> &[BigRational] {
        &self.lengths
    }

    /// Measure of the all-zero remainder block.
    pub fn remainder(&self) -> BigRational {
        BigRational::one() - self.lengths.iter().sum::<BigRational>()
    }

    /// The mixture as an exact stepfunction: block i splits into |V(H_i)|
    /// equal sub-steps carrying the adjacency of H_i, zero across blocks,
    /// plus the remainder step when its measure is positive.
    pub fn to_stepfunction(&self) -> StepFunction {
        let mut measures = Vec::new();
        let mut block_of_step = Vec::new();
        let mut vertex_of_step = Vec::new();
        for (b, (len, g)) in self.blocks().enumerate() {
            let nv = g.n();
            let sub = len / BigRational::from_i64(nv as i64).unwrap();
            for v in 0..nv {
                measures.push(sub.clone());
                block_of_step.push(b);
                vertex_of_step.push(v);
            }
        }
        let rem = self.remainder();
        if rem.is_positive() {
            measures.push(rem);
            block_of_step.push(usize::MAX);
            vertex_of_step.push(usize::MAX);
        }
        let q = measures.len();
        let mut values = vec![vec![BigRational::zero(); q]; q];
        for i in 0..q {
            for j in 0..q {
                if block_of_step[i] != usize::MAX
                    && block_of_step[i] == block_of_step[j]
                    && self.graphs[block_of_step[i]].has_edge(vertex_of_step[i], vertex_of_step[j])
                {
                    values[i][j] = BigRational::one();
                }
            }
        }
        StepFunction::from_rationals(measures, values).expect("valid by construction")
    }

    /// A lower bound on log2 of |supp(G(n,W))| from the paper's counting:
    /// the support contains every K_{t,t}-free graph on n vertices, of which
    /// there are at least 2^{n^{2-2/t}}.
    pub fn support_log2_lower_bound(&self, n: u64) -> f64 {
        (n as f64).powf(2.0 - 2.0 / self.t as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_mask;

    #[test]
    fn enumeration_counts_small() {
        // All graphs on <= 3 vertices are K_{2,2}-free: 1 + 2 + 4 = 7.
        let gs = enumerate_ktt_free(2, 3).unwrap();
        assert_eq!(gs.len(), 7);
        // 11 graphs on 4 vertices, of which C4, diamond and K4 contain K_{2,2}.
        let gs4 = enumerate_ktt_free(2, 4).unwrap();
        assert_eq!(gs4.len(), 7 + 8);
    }

    #[test]
    fn enumeration_is_canonical_and_free() {
        let gs = enumerate_ktt_free(2, 4).unwrap();
        let mut keys: Vec<(usize, u64)> = Vec::new();
        for g in &gs {
            assert!(is_ktt_free(g, 2).unwrap());
            let mask = g.edge_mask().unwrap();
            assert_eq!(canonical_mask(g.n(), mask), mask);
            keys.push((g.n(), mask));
        }
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn mixture_stepfunction_is_random_free() {
        let mix = ktt_mixture_graphon(2, 3, None).unwrap();
        let w = mix.to_stepfunction();
        assert!(w.is_random_free());
        // 7 blocks: 1 + 2*2 + 4*3 = 17 sub-steps plus the remainder.
        assert_eq!(w.steps(), 18);
    }

    #[test]
    fn default_lengths_are_dyadic() {
        let mix = ktt_mixture_graphon(2, 3, None).unwrap();
        assert_eq!(
            mix.lengths()[0],
            BigRational::new(1.into(), 2.into())
        );
        assert!(mix.remainder().is_positive());
    }

    #[test]
    fn explicit_lengths_validated() {
        assert!(ktt_mixture_graphon(2, 3, Some(&[0.5, 0.5])).is_err()); // wrong count
        let lens = vec![0.9; 7];
        assert!(ktt_mixture_graphon(2, 3, Some(&lens)).is_err()); // sums over 1
    }
}
