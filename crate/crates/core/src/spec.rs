//! The JSON graphon description consumed by every other module and by the
//! CLI: {"kind": "step" | "diagonal-block" | "transversal" | "ktt-mixture", ...}.

use serde::{Deserialize, Serialize};

use crate::constructions::{
    diagonal_block_graphon, ktt_mixture_graphon, AlphaForm, DEFAULT_K_MAX,
};
use crate::error::{Error, Result};
use crate::step::StepFunction;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GraphonSpec {
    /// Finite stepfunction: measures (positive, summing to 1) and a symmetric
    /// value matrix in [0,1].
    Step {
        measures: Vec<f64>,
        values: Vec<Vec<f64>>,
    },
    /// Diagonal blocks |I_i| = 2^{-i}, clique on each block, zero elsewhere.
    /// `depth` caps stepfunction truncations; the exact sampler ignores it.
    DiagonalBlock { depth: u32 },
    /// Transversal-uniform graphon driven by a rate function alpha.
    Transversal {
        alpha: AlphaForm,
        #[serde(default = "default_k_max")]
        k_max: u32,
    },
    /// K_{t,t}-free mixture over the canonical enumeration up to `nmax`
    /// vertices; explicit block lengths are optional.
    KttMixture {
        t: usize,
        nmax: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lengths: Option<Vec<f64>>,
    },
}

fn default_k_max() -> u32 {
    DEFAULT_K_MAX
}

impl GraphonSpec {
    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn from_stepfunction(w: &StepFunction) -> Self {
        GraphonSpec::Step {
            measures: (0..w.steps()).map(|i| w.measure_f64(i)).collect(),
            values: (0..w.steps())
                .map(|i| (0..w.steps()).map(|j| w.value_f64(i, j)).collect())
                .collect(),
        }
    }

    /// Materializes as a stepfunction where the graphon is one (exactly for
    /// step and ktt-mixture; truncated at `depth` for diagonal-block). The
    /// transversal graphon is not a stepfunction and is refused.
    pub fn to_stepfunction(&self) -> Result<StepFunction> {
        match self {
            GraphonSpec::Step { measures, values } => StepFunction::from_f64(measures, values),
            GraphonSpec::DiagonalBlock { depth } => {
                Ok(diagonal_block_graphon(*depth)?.to_stepfunction())
            }
            GraphonSpec::KttMixture { t, nmax, lengths } => {
                Ok(ktt_mixture_graphon(*t, *nmax, lengths.as_deref())?.to_stepfunction())
            }
            GraphonSpec::Transversal { .. } => Err(Error::Unsupported(
                "the transversal-uniform graphon is not a stepfunction; use the exact sampler"
                    .into(),
            )),
        }
    }

    /// Ent(W) in bits. Zero for the three structured kinds, which are all
    /// {0,1}-valued.
    pub fn graphon_entropy(&self) -> Result<f64> {
        match self {
            GraphonSpec::Step { .. } => Ok(self.to_stepfunction()?.entropy()),
            _ => Ok(0.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let specs = vec![
            GraphonSpec::Step {
                measures: vec![0.5, 0.5],
                values: vec![vec![0.25, 0.75], vec![0.75, 0.5]],
            },
            GraphonSpec::DiagonalBlock { depth: 6 },
            GraphonSpec::Transversal {
                alpha: AlphaForm::InverseN,
                k_max: 32,
            },
            GraphonSpec::KttMixture {
                t: 2,
                nmax: 3,
                lengths: None,
            },
        ];
        for s in specs {
            assert_eq!(GraphonSpec::from_json(&s.to_json()).unwrap(), s);
        }
    }

    #[test]
    fn parses_documented_shapes() {
        let s = GraphonSpec::from_json(
            r#"{"kind":"step","measures":[1.0],"values":[[0.5]]}"#,
        )
        .unwrap();
        assert!(matches!(s, GraphonSpec::Step { .. }));
        let s = GraphonSpec::from_json(r#"{"kind":"diagonal-block","depth":4}"#).unwrap();
        assert!(matches!(s, GraphonSpec::DiagonalBlock { depth: 4 }));
        let s = GraphonSpec::from_json(
            r#"{"kind":"transversal","alpha":{"form":"inverse-n"}}"#,
        )
        .unwrap();
        assert!(matches!(
            s,
            GraphonSpec::Transversal {
                alpha: AlphaForm::InverseN,
                k_max: DEFAULT_K_MAX
            }
        ));
        let s = GraphonSpec::from_json(r#"{"kind":"ktt-mixture","t":2,"nmax":4}"#).unwrap();
        assert!(matches!(s, GraphonSpec::KttMixture { t: 2, nmax: 4, .. }));
    }

    #[test]
    fn rejects_unknown_kind_and_fields() {
        assert!(GraphonSpec::from_json(r#"{"kind":"mystery"}"#).is_err());
        assert!(
            GraphonSpec::from_json(r#"{"kind":"diagonal-block","depth":4,"extra":1}"#).is_err()
        );
    }

    #[test]
    fn entropy_dispatch() {
        let s = GraphonSpec::Step {
            measures: vec![1.0],
            values: vec![vec![0.5]],
        };
        assert!((s.graphon_entropy().unwrap() - 1.0).abs() < 1e-12);
        let d = GraphonSpec::DiagonalBlock { depth: 4 };
        assert_eq!(d.graphon_entropy().unwrap(), 0.0);
        let t = GraphonSpec::Transversal {
            alpha: AlphaForm::InverseN,
            k_max: 16,
        };
        assert_eq!(t.graphon_entropy().unwrap(), 0.0);
        assert!(t.to_stepfunction().is_err());
    }

    #[test]
    fn stepfunction_round_trip() {
        let w = StepFunction::from_f64(&[0.25, 0.75], &[vec![0.0, 1.0], vec![1.0, 0.5]]).unwrap();
        let again = GraphonSpec::from_stepfunction(&w).to_stepfunction().unwrap();
        assert_eq!(w, again);
    }
}
