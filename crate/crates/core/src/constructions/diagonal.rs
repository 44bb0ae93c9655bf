//! The diagonal-block counterexample: intervals |I_i| = 2^{-i}, W constant 1
//! on the diagonal blocks I_i x I_i and 0 elsewhere. Random-free, not a
//! stepfunction, and G(n,W) has linear entropy.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::step::StepFunction;

/// The diagonal-block graphon. `depth_cap` only bounds stepfunction
/// truncations requested downstream; the exact sampler handles the infinite
/// tail (the interval distribution is geometric and needs no cap).
#[derive(Clone, Copy, Debug)]
pub struct DiagonalBlock {
    pub depth_cap: u32,
}

pub fn diagonal_block_graphon(depth_cap: u32) -> Result<DiagonalBlock> {
    if depth_cap == 0 {
        return Err(Error::InvalidPartition("depth_cap must be >= 1".into()));
    }
    Ok(DiagonalBlock { depth_cap })
}

impl DiagonalBlock {
    /// Exact length of interval I_i (1-based): 2^{-i}.
    pub fn interval_length(i: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::one() << i as u64)
    }

    /// Truncation to a stepfunction: the first `depth_cap` diagonal blocks
    /// plus one all-zero remainder step of measure 2^{-depth_cap}.
    pub fn to_stepfunction(&self) -> StepFunction {
        let d = self.depth_cap as usize;
        let mut measures: Vec<BigRational> =
            (1..=self.depth_cap).map(Self::interval_length).collect();
        measures.push(Self::interval_length(self.depth_cap));
        let q = d + 1;
        let mut values = vec![vec![BigRational::zero(); q]; q];
        for (i, row) in values.iter_mut().enumerate().take(d) {
            row[i] = BigRational::one();
        }
        StepFunction::from_rationals(measures, values).expect("valid by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_three_lengths() {
        let lens: Vec<BigRational> = (1..=3).map(DiagonalBlock::interval_length).collect();
        assert_eq!(lens[0], BigRational::new(1.into(), 2.into()));
        assert_eq!(lens[1], BigRational::new(1.into(), 4.into()));
        assert_eq!(lens[2], BigRational::new(1.into(), 8.into()));
    }

    #[test]
    fn truncation_is_random_free_with_zero_entropy() {
        let w = diagonal_block_graphon(4).unwrap().to_stepfunction();
        assert!(w.is_random_free());
        assert_eq!(w.entropy(), 0.0);
        assert_eq!(w.steps(), 5);
        // same-block pairs are 1, cross-block pairs are 0
        assert_eq!(w.value_f64(0, 0), 1.0);
        assert_eq!(w.value_f64(0, 1), 0.0);
        assert_eq!(w.value_f64(4, 4), 0.0); // remainder block
    }

    #[test]
    fn rejects_zero_depth() {
        assert!(diagonal_block_graphon(0).is_err());
    }
}
