//! Binary entropy and Shannon entropy in bits (log base 2 throughout).

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Entropy measured in bits (nonnegative real).
pub type Bits = f64;

/// A probability in [0,1].
pub type Probability = f64;

/// Binary entropy h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
pub fn binary_entropy(x: Probability) -> Result<Bits> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidProbability(x));
    }
    Ok(binary_entropy_unchecked(x))
}

/// Like [`binary_entropy`] but assumes x in [0,1].
pub fn binary_entropy_unchecked(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// -p log2 p with the 0 log 0 := 0 convention.
pub fn neg_p_log_p(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Shannon entropy in bits of a distribution given as f64 masses.
pub fn shannon_entropy_f64(probs: &[f64]) -> Bits {
    probs.iter().map(|&p| neg_p_log_p(p)).sum()
}

/// Shannon entropy in bits of a distribution given as exact rationals.
/// Probabilities stay exact; the conversion to f64 happens per term, at the
/// very end.
pub fn shannon_entropy_exact(probs: &[BigRational]) -> Bits {
    probs
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| neg_p_log_p(p.to_f64().expect("rational probability fits f64")))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn endpoints_are_zero() {
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
    }

    #[test]
    fn half_is_one() {
        assert_abs_diff_eq!(binary_entropy(0.5).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn quarter_value() {
        // h(1/4) = 2 - (3/4) log2 3, evaluated at high precision.
        assert_abs_diff_eq!(
            binary_entropy(0.25).unwrap(),
            0.811_278_124_459_132_8,
            epsilon = 1e-9
        );
    }

    #[test]
    fn symmetric() {
        for &x in &[0.1, 0.3, 0.41, 0.77] {
            assert_abs_diff_eq!(
                binary_entropy(x).unwrap(),
                binary_entropy(1.0 - x).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn domain_error() {
        assert!(binary_entropy(-0.1).is_err());
        assert!(binary_entropy(1.1).is_err());
    }

    #[test]
    fn uniform_eight_outcomes() {
        let probs = vec![0.125; 8];
        assert_abs_diff_eq!(shannon_entropy_f64(&probs), 3.0, epsilon = 1e-12);
    }
}
