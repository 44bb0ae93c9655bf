//! Stepfunction graphons: the exactly-computable graphon class.
//!
//! Measures and values are kept as exact rationals internally so that the
//! distribution and density computations downstream can be exact end-to-end.
//! f64 inputs (which are dyadic rationals) convert losslessly; the measure
//! vector is validated to sum to 1 exactly, with a 1e-12 tolerance when
//! normalizing f64 input.

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::info::{binary_entropy_unchecked, Bits};

pub const MEASURE_TOLERANCE: f64 = 1e-12;
pub const COMMENSURABILITY_RESOLUTION: f64 = 1e-9;

/// Largest equal-measure refinement searched exhaustively in `delta1_upper`.
pub const DELTA1_EXHAUSTIVE_MAX_STEPS: usize = 8;

/// A finite-step graphon: positive step measures summing to one and a
/// symmetric value matrix with entries in [0,1].
#[derive(Clone, Debug, PartialEq)]
pub struct StepFunction {
    measures: Vec<BigRational>,
    values: Vec<Vec<BigRational>>,
}

impl StepFunction {
    pub fn from_rationals(
        measures: Vec<BigRational>,
        values: Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        let q = measures.len();
        if q == 0 {
            return Err(Error::InvalidStepFunction("no steps".into()));
        }
        if measures.iter().any(|m| !m.is_positive()) {
            return Err(Error::InvalidStepFunction(
                "step measures must be positive".into(),
            ));
        }
        let total: BigRational = measures.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidStepFunction(format!(
                "measures sum to {total}, not 1"
            )));
        }
        if values.len() != q || values.iter().any(|row| row.len() != q) {
            return Err(Error::InvalidStepFunction(
                "value matrix shape does not match step count".into(),
            ));
        }
        for i in 0..q {
            for j in 0..q {
                let v = &values[i][j];
                if v.is_negative() || v > &BigRational::one() {
                    return Err(Error::InvalidStepFunction(format!(
                        "value ({i},{j}) outside [0,1]"
                    )));
                }
                if values[i][j] != values[j][i] {
                    return Err(Error::InvalidStepFunction(format!(
                        "value matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(StepFunction { measures, values })
    }

    /// Builds from f64 data. Measures must sum to 1 within 1e-12; the last
    /// measure is adjusted so the exact rational sum is exactly 1.
    pub fn from_f64(measures: &[f64], values: &[Vec<f64>]) -> Result<Self> {
        let sum: f64 = measures.iter().sum();
        if (sum - 1.0).abs() > MEASURE_TOLERANCE {
            return Err(Error::InvalidStepFunction(format!(
                "measures sum to {sum}, not 1 (tolerance 1e-12)"
            )));
        }
        let mut rm: Vec<BigRational> = measures
            .iter()
            .map(|&m| BigRational::from_f64(m).ok_or_else(|| {
                Error::InvalidStepFunction(format!("measure {m} not finite"))
            }))
            .collect::<Result<_>>()?;
        let head: BigRational = rm[..rm.len() - 1].iter().sum();
        let last = BigRational::one() - head;
        if !last.is_positive() {
            return Err(Error::InvalidStepFunction(
                "step measures must be positive".into(),
            ));
        }
        *rm.last_mut().unwrap() = last;
        let rv = values
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        BigRational::from_f64(v).ok_or_else(|| {
                            Error::InvalidStepFunction(format!("value {v} not finite"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StepFunction::from_rationals(rm, rv)
    }

    /// Equal-measure steps 1/q with the given value matrix.
    pub fn equal_steps(values: Vec<Vec<BigRational>>) -> Result<Self> {
        let q = values.len();
        let m = BigRational::new(1.into(), (q as i64).into());
        StepFunction::from_rationals(vec![m; q], values)
    }

    /// The constant-p graphon (a single step).
    pub fn constant(p: f64) -> Result<Self> {
        StepFunction::from_f64(&[1.0], &[vec![p]])
    }

    pub fn steps(&self) -> usize {
        self.measures.len()
    }

    pub fn measure(&self, i: usize) -> &BigRational {
        &self.measures[i]
    }

    pub fn measures(&self) -> &[BigRational] {
        &self.measures
    }

    pub fn value(&self, i: usize, j: usize) -> &BigRational {
        &self.values[i][j]
    }

    pub fn measure_f64(&self, i: usize) -> f64 {
        self.measures[i].to_f64().expect("measure fits f64")
    }

    pub fn value_f64(&self, i: usize, j: usize) -> f64 {
        self.values[i][j].to_f64().expect("value fits f64")
    }

    /// Graphon entropy: sum_{i,j} m_i m_j h(w_ij).
    pub fn entropy(&self) -> Bits {
        let q = self.steps();
        let mut total = 0.0;
        for i in 0..q {
            for j in 0..q {
                let area = (self.measures[i].clone() * &self.measures[j])
                    .to_f64()
                    .expect("area fits f64");
                total += area * binary_entropy_unchecked(self.value_f64(i, j));
            }
        }
        total
    }

    /// True iff every value is exactly 0 or 1 (equivalently, entropy is 0).
    pub fn is_random_free(&self) -> bool {
        self.values
            .iter()
            .flatten()
            .all(|v| v.is_zero() || v.is_one())
    }

    /// W_G: n equal steps of measure 1/n, value 1 on adjacent step pairs.
    pub fn from_graph(g: &LabeledGraph) -> Result<Self> {
        let n = g.n();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let values = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if g.has_edge(i, j) {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        StepFunction::equal_steps(values)
    }

    /// Measure-weighted averaging over a coarser partition of the steps.
    /// `partition` must list disjoint groups of step indices covering all
    /// steps. Idempotent on the partition into singletons.
    pub fn step_average(&self, partition: &[Vec<usize>]) -> Result<StepFunction> {
        let q = self.steps();
        let mut seen = vec![false; q];
        for group in partition {
            if group.is_empty() {
                return Err(Error::InvalidPartition("empty group".into()));
            }
            for &i in group {
                if i >= q {
                    return Err(Error::InvalidPartition(format!(
                        "step index {i} out of range"
                    )));
                }
                if seen[i] {
                    return Err(Error::InvalidPartition(format!(
                        "step index {i} appears twice"
                    )));
                }
                seen[i] = true;
            }
        }
        if !seen.iter().all(|&b| b) {
            return Err(Error::InvalidPartition(
                "partition does not cover all steps".into(),
            ));
        }
        let masses: Vec<BigRational> = partition
            .iter()
            .map(|g| g.iter().map(|&i| self.measures[i].clone()).sum())
            .collect();
        let k = partition.len();
        let mut values = vec![vec![BigRational::zero(); k]; k];
        for a in 0..k {
            for b in 0..k {
                let mut acc = BigRational::zero();
                for &i in &partition[a] {
                    for &j in &partition[b] {
                        acc += self.measures[i].clone() * &self.measures[j] * &self.values[i][j];
                    }
                }
                values[a][b] = acc / (masses[a].clone() * &masses[b]);
            }
        }
        StepFunction::from_rationals(masses, values)
    }

    /// Common refinement of two step partitions: returns cells
    /// (length, step index in self, step index in other).
    pub fn common_refinement(&self, other: &StepFunction) -> Vec<(BigRational, usize, usize)> {
        let mut cells = Vec::new();
        let (mut i, mut j) = (0usize, 0usize);
        let mut rem_i = self.measures[0].clone();
        let mut rem_j = other.measures[0].clone();
        loop {
            let len = rem_i.clone().min(rem_j.clone());
            cells.push((len.clone(), i, j));
            rem_i -= &len;
            rem_j -= &len;
            if rem_i.is_zero() {
                i += 1;
                if i == self.steps() {
                    break;
                }
                rem_i = self.measures[i].clone();
            }
            if rem_j.is_zero() {
                j += 1;
                if j == other.steps() {
                    break;
                }
                rem_j = other.measures[j].clone();
            }
        }
        cells
    }

    /// Exact L1 distance ||W1 - W2||_1 on the common refinement.
    pub fn l1_distance_exact(&self, other: &StepFunction) -> BigRational {
        let mut total = BigRational::zero();
        for (len_x, i1, j1) in self.common_refinement(other) {
            for (len_y, i2, j2) in self.common_refinement(other) {
                let diff = (self.values[i1][i2].clone() - &other.values[j1][j2]).abs();
                if !diff.is_zero() {
                    total += len_x.clone() * len_y * diff;
                }
            }
        }
        total
    }

    pub fn l1_distance(&self, other: &StepFunction) -> f64 {
        self.l1_distance_exact(other).to_f64().expect("l1 fits f64")
    }

    /// Refines both stepfunctions to `q` equal-measure steps, where q is the
    /// smallest grid (up to 4096) on which every breakpoint of both partitions
    /// lies, at resolution 1e-9.
    fn equal_measure_refinement(
        &self,
        other: &StepFunction,
    ) -> Result<(Vec<Vec<BigRational>>, Vec<Vec<BigRational>>)> {
        let mut breaks = Vec::new();
        for sf in [self, other] {
            let mut cum = 0.0;
            for i in 0..sf.steps() - 1 {
                cum += sf.measure_f64(i);
                breaks.push(cum);
            }
        }
        let q = (1..=4096usize)
            .find(|&q| {
                breaks.iter().all(|&b| {
                    let scaled = b * q as f64;
                    (scaled - scaled.round()).abs() < q as f64 * COMMENSURABILITY_RESOLUTION
                })
            })
            .ok_or(Error::Incommensurable {
                resolution: COMMENSURABILITY_RESOLUTION,
            })?;
        let refine = |sf: &StepFunction| -> Vec<usize> {
            // step index owning each of the q equal cells
            let mut owner = Vec::with_capacity(q);
            let mut cum = 0.0;
            let mut step = 0usize;
            let mut upper = sf.measure_f64(0);
            for _ in 0..q {
                let mid = cum + 0.5 / q as f64;
                while mid > upper && step + 1 < sf.steps() {
                    step += 1;
                    upper += sf.measure_f64(step);
                }
                owner.push(step);
                cum += 1.0 / q as f64;
            }
            owner
        };
        let own1 = refine(self);
        let own2 = refine(other);
        let mat = |sf: &StepFunction, own: &[usize]| {
            (0..q)
                .map(|a| (0..q).map(|b| sf.values[own[a]][own[b]].clone()).collect())
                .collect::<Vec<Vec<BigRational>>>()
        };
        Ok((mat(self, &own1), mat(other, &own2)))
    }

    /// Upper bound on the delta_1 distance: minimum of ||W1 - W2 ∘ σ||_1 over
    /// step permutations σ of a common equal-measure refinement. Maps that
    /// split steps are not searched, so this is an upper bound on the true
    /// infimum. Exhaustive for refinements of at most 8 steps; beyond that a
    /// 2-swap local search is used and the result is flagged inexact.
    pub fn delta1_upper(&self, other: &StepFunction) -> Result<Delta1Bound> {
        let (v1, v2) = self.equal_measure_refinement(other)?;
        let q = v1.len();
        let a: Vec<Vec<f64>> = v1
            .iter()
            .map(|r| r.iter().map(|v| v.to_f64().unwrap()).collect())
            .collect();
        let b: Vec<Vec<f64>> = v2
            .iter()
            .map(|r| r.iter().map(|v| v.to_f64().unwrap()).collect())
            .collect();
        let cost = |perm: &[usize]| -> f64 {
            let mut total = 0.0;
            for i in 0..q {
                for j in 0..q {
                    total += (a[i][j] - b[perm[i]][perm[j]]).abs();
                }
            }
            total / (q * q) as f64
        };
        if q <= DELTA1_EXHAUSTIVE_MAX_STEPS {
            let mut best = f64::INFINITY;
            crate::graph::for_each_permutation(q, &mut |perm| {
                let c = cost(perm);
                if c < best {
                    best = c;
                }
            });
            Ok(Delta1Bound {
                value: best,
                exhaustive: true,
                steps: q,
            })
        } else {
            // Best-improvement 2-swap descent from the identity permutation.
            let mut perm: Vec<usize> = (0..q).collect();
            let mut cur = cost(&perm);
            loop {
                let mut best_swap = None;
                let mut best_cost = cur;
                for i in 0..q {
                    for j in (i + 1)..q {
                        perm.swap(i, j);
                        let c = cost(&perm);
                        perm.swap(i, j);
                        if c < best_cost {
                            best_cost = c;
                            best_swap = Some((i, j));
                        }
                    }
                }
                match best_swap {
                    Some((i, j)) => {
                        perm.swap(i, j);
                        cur = best_cost;
                    }
                    None => break,
                }
            }
            Ok(Delta1Bound {
                value: cur,
                exhaustive: false,
                steps: q,
            })
        }
    }
}

/// Result of `delta1_upper`: always an upper bound on delta_1; `exhaustive`
/// is false when the permutation search was heuristic.
#[derive(Clone, Copy, Debug)]
pub struct Delta1Bound {
    pub value: f64,
    pub exhaustive: bool,
    pub steps: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn two_step(values: [[f64; 2]; 2]) -> StepFunction {
        StepFunction::from_f64(
            &[0.5, 0.5],
            &[values[0].to_vec(), values[1].to_vec()],
        )
        .unwrap()
    }

    #[test]
    fn constant_half_entropy_is_one() {
        let w = StepFunction::constant(0.5).unwrap();
        assert_abs_diff_eq!(w.entropy(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn zero_one_valued_entropy_is_zero() {
        let w = two_step([[0.0, 1.0], [1.0, 0.0]]);
        assert_eq!(w.entropy(), 0.0);
        assert!(w.is_random_free());
    }

    #[test]
    fn mixed_entropy_closed_form() {
        // (3 h(1/4) + h(1/2)) / 4
        let w = two_step([[0.25, 0.75], [0.75, 0.5]]);
        assert_abs_diff_eq!(w.entropy(), 0.858_458_593_344_349_6, epsilon = 1e-6);
    }

    #[test]
    fn random_free_predicate() {
        assert!(!StepFunction::constant(0.5).unwrap().is_random_free());
        assert!(two_step([[0.0, 1.0], [1.0, 0.0]]).is_random_free());
    }

    #[test]
    fn graph_to_stepfunction_k2() {
        let g = LabeledGraph::complete(2);
        let w = StepFunction::from_graph(&g).unwrap();
        assert_eq!(w.steps(), 2);
        assert_eq!(w.measure_f64(0), 0.5);
        assert_eq!(w.value_f64(0, 1), 1.0);
        assert_eq!(w.value_f64(0, 0), 0.0);
        assert!(w.is_random_free());
    }

    #[test]
    fn graph_to_stepfunction_triangle_and_empty() {
        let w = StepFunction::from_graph(&LabeledGraph::complete(3)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(w.value_f64(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
        let e = StepFunction::from_graph(&LabeledGraph::new(3)).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| e.value_f64(i, j) == 0.0)));
        assert!(StepFunction::from_graph(&LabeledGraph::new(0)).is_err());
    }

    #[test]
    fn step_average_idempotent_on_own_partition() {
        let w = two_step([[0.25, 0.75], [0.75, 0.5]]);
        let avg = w.step_average(&[vec![0], vec![1]]).unwrap();
        assert_eq!(w, avg);
    }

    #[test]
    fn step_average_merges_to_mean() {
        let w = two_step([[1.0, 0.0], [0.0, 1.0]]);
        let avg = w.step_average(&[vec![0, 1]]).unwrap();
        assert_eq!(avg.steps(), 1);
        assert_eq!(avg.value_f64(0, 0), 0.5);
    }

    #[test]
    fn step_average_rejects_bad_partition() {
        let w = two_step([[1.0, 0.0], [0.0, 1.0]]);
        assert!(w.step_average(&[vec![0]]).is_err());
        assert!(w.step_average(&[vec![0, 0], vec![1]]).is_err());
    }

    #[test]
    fn l1_of_constants() {
        let a = StepFunction::constant(0.2).unwrap();
        let b = StepFunction::constant(0.7).unwrap();
        assert_abs_diff_eq!(a.l1_distance(&b), 0.5, epsilon = 1e-12);
        assert_eq!(a.l1_distance(&a), 0.0);
    }

    #[test]
    fn l1_of_complementary_checkerboards() {
        let a = two_step([[1.0, 0.0], [0.0, 1.0]]);
        let b = two_step([[0.0, 1.0], [1.0, 0.0]]);
        assert_abs_diff_eq!(a.l1_distance(&b), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn l1_across_different_partitions() {
        // Constant 1/2 written with two unequal steps vs one step.
        let a = StepFunction::from_f64(&[0.25, 0.75], &[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let b = StepFunction::constant(0.5).unwrap();
        assert_eq!(a.l1_distance(&b), 0.0);
    }

    #[test]
    fn delta1_swap_permutation_reaches_zero() {
        let a = two_step([[1.0, 0.0], [0.0, 0.0]]);
        let b = two_step([[0.0, 0.0], [0.0, 1.0]]);
        let d = a.delta1_upper(&b).unwrap();
        assert!(d.exhaustive);
        assert_eq!(d.value, 0.0);
    }

    #[test]
    fn delta1_of_constants() {
        let a = StepFunction::constant(0.3).unwrap();
        let b = StepFunction::constant(0.8).unwrap();
        let d = a.delta1_upper(&b).unwrap();
        assert_abs_diff_eq!(d.value, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn delta1_identical() {
        let w = two_step([[0.25, 0.75], [0.75, 0.5]]);
        assert_eq!(w.delta1_upper(&w).unwrap().value, 0.0);
    }
}
