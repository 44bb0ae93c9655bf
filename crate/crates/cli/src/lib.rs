//! Library backing the `graphon` binary: verification suites plus the
//! command runners for build/sample/density/entropy/curve, kept callable so
//! integration tests exercise the same code paths as the CLI.

pub mod suites;

use std::fmt::Write as _;
use std::time::Instant;

use graphon_lab::constructions::{alpha_partition, layer_sizes};
use graphon_lab::densities::{
    bigraph_density_mixture_exact, bigraph_density_step_exact, bigraph_density_step_mc,
    hom_density, induced_density, induced_density_graphon_exact, induced_density_graphon_mc,
    DensityResult,
};
use graphon_lab::entropy::{
    diagonal_block_exact_entropy, entropy_plugin_mm, exact_graph_distribution,
    transversal_entropy_lower_bound,
};
use graphon_lab::error::{Error, Result};
use graphon_lab::sampling::{
    sample_graph_diagonal_block, sample_graph_stepfunction, sample_graph_transversal,
};
use graphon_lab::{Bigraph, GraphonSpec, LabeledGraph, RngStream};

/// Inclusive range "A:B" (or a single "N").
pub fn parse_n_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(':').collect();
    let parse = |t: &str| t.parse::<usize>().map_err(|e| format!("bad n range '{s}': {e}"));
    match parts.as_slice() {
        [one] => {
            let n = parse(one)?;
            Ok((n, n))
        }
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(format!("bad n range '{s}': expected A:B")),
    }
}

/// One sampled graph line: the single-line edge-list text, optionally
/// followed by a tab and the latent state as JSON.
pub fn sample_lines(
    spec: &GraphonSpec,
    n: usize,
    count: u64,
    seed: u64,
    with_latent: bool,
) -> Result<String> {
    let mut rng = RngStream::new(seed).rng();
    let mut out = String::new();
    match spec {
        GraphonSpec::Step { .. } | GraphonSpec::KttMixture { .. } => {
            let w = spec.to_stepfunction()?;
            for _ in 0..count {
                let (g, steps) = sample_graph_stepfunction(n, &w, &mut rng);
                out.push_str(&g.to_line());
                if with_latent {
                    let _ = write!(out, "\t{}", serde_json::json!({ "steps": steps }));
                }
                out.push('\n');
            }
        }
        GraphonSpec::DiagonalBlock { .. } => {
            for _ in 0..count {
                let (g, intervals) = sample_graph_diagonal_block(n, &mut rng);
                out.push_str(&g.to_line());
                if with_latent {
                    let _ = write!(out, "\t{}", serde_json::json!({ "intervals": intervals }));
                }
                out.push('\n');
            }
        }
        GraphonSpec::Transversal { alpha, k_max } => {
            let partition = alpha_partition(&alpha.schedule(), *k_max)?;
            let structure = layer_sizes(6);
            for _ in 0..count {
                let (g, a) = sample_graph_transversal(n, &partition, &structure, &mut rng)?;
                out.push_str(&g.to_line());
                if with_latent {
                    let _ = write!(out, "\t{}", a.to_json());
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}

/// Density computation target: a finite graph or a graphon spec.
pub enum DensityTarget {
    Graph(LabeledGraph),
    Graphon(GraphonSpec),
}

/// Parses a density target file: JSON object -> GraphonSpec, otherwise the
/// plain graph text format.
pub fn parse_target(content: &str) -> Result<DensityTarget> {
    if content.trim_start().starts_with('{') {
        Ok(DensityTarget::Graphon(GraphonSpec::from_json(content)?))
    } else {
        Ok(DensityTarget::Graph(LabeledGraph::from_text(content)?))
    }
}

pub fn density_json(
    mode: &str,
    pattern_text: &str,
    target: &DensityTarget,
    trials: Option<u64>,
    seed: Option<u64>,
) -> Result<String> {
    let rng_for = |seed: Option<u64>| -> Result<_> {
        let s = seed.ok_or_else(|| {
            Error::Unsupported("Monte Carlo runs need an explicit --seed".into())
        })?;
        Ok(RngStream::new(s).rng())
    };
    let result: DensityResult = match (mode, target) {
        ("hom", DensityTarget::Graph(g)) => {
            hom_density(&LabeledGraph::from_text(pattern_text)?, g)?
        }
        ("induced", DensityTarget::Graph(g)) => {
            induced_density(&LabeledGraph::from_text(pattern_text)?, g)?
        }
        ("induced-graphon", DensityTarget::Graphon(spec)) => {
            let h = LabeledGraph::from_text(pattern_text)?;
            let w = spec.to_stepfunction()?;
            match trials {
                None => DensityResult::Exact(induced_density_graphon_exact(&h, &w)?),
                Some(t) => induced_density_graphon_mc(&h, &w, t, &mut rng_for(seed)?),
            }
        }
        ("bigraph", target) => {
            let b = Bigraph::from_text(pattern_text)?;
            match target {
                DensityTarget::Graph(g) => DensityResult::Exact(
                    graphon_lab::densities::bigraph_density_graph_exact(&b, g)?,
                ),
                DensityTarget::Graphon(spec) => match (trials, spec) {
                    (Some(t), _) => {
                        bigraph_density_step_mc(&b, &spec.to_stepfunction()?, t, &mut rng_for(seed)?)
                    }
                    (None, GraphonSpec::KttMixture { t, nmax, lengths }) => {
                        // block decomposition avoids the q^m1 blow-up of the
                        // flattened stepfunction
                        let mix = graphon_lab::constructions::ktt_mixture_graphon(
                            *t,
                            *nmax,
                            lengths.as_deref(),
                        )?;
                        DensityResult::Exact(bigraph_density_mixture_exact(&b, &mix)?)
                    }
                    (None, _) => {
                        DensityResult::Exact(bigraph_density_step_exact(&b, &spec.to_stepfunction()?)?)
                    }
                },
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "mode '{mode}' does not apply to this target type"
            )))
        }
    };
    let mut obj = serde_json::json!({ "mode": mode, "value": result.value_f64() });
    if let Some(e) = result.stderr() {
        obj["stderr"] = serde_json::json!(e);
    }
    if let Some(r) = result.exact() {
        obj["exact"] = serde_json::json!(r.to_string());
    }
    Ok(serde_json::to_string_pretty(&obj).expect("json"))
}

/// One row of the entropy CSV.
pub struct EntropyRow {
    pub n: usize,
    pub method: String,
    pub value_bits: f64,
    pub stderr: Option<f64>,
    pub runtime_ms: u128,
}

pub fn entropy_rows(
    spec: &GraphonSpec,
    n_range: (usize, usize),
    method: &str,
    trials: Option<u64>,
    seed: Option<u64>,
) -> Result<Vec<EntropyRow>> {
    let mut rows = Vec::new();
    for n in n_range.0..=n_range.1 {
        let start = Instant::now();
        let (value, stderr) = match method {
            "exact" => {
                let w = spec.to_stepfunction()?;
                (exact_graph_distribution(n, &w)?.entropy_bits(), None)
            }
            "plugin" => {
                let t = trials.ok_or_else(|| {
                    Error::Unsupported("plugin estimation needs --trials".into())
                })?;
                let s = seed.ok_or_else(|| {
                    Error::Unsupported("plugin estimation needs an explicit --seed".into())
                })?;
                let samples = sample_many(spec, n, t, s)?;
                (entropy_plugin_mm(&samples)?, None)
            }
            "transversal-lb" => {
                let GraphonSpec::Transversal { alpha, k_max } = spec else {
                    return Err(Error::Unsupported(
                        "transversal-lb needs a transversal graphon".into(),
                    ));
                };
                let t = trials.ok_or_else(|| {
                    Error::Unsupported("transversal-lb needs --trials".into())
                })?;
                let s = seed.ok_or_else(|| {
                    Error::Unsupported("transversal-lb needs an explicit --seed".into())
                })?;
                let partition = alpha_partition(&alpha.schedule(), *k_max)?;
                let structure = layer_sizes(6);
                let mut rng = RngStream::new(s).rng();
                let b = transversal_entropy_lower_bound(n, &partition, &structure, t, &mut rng)?;
                (b.conditional_bits, Some(b.conditional_stderr))
            }
            "diagonal-exact" => {
                if !matches!(spec, GraphonSpec::DiagonalBlock { .. }) {
                    return Err(Error::Unsupported(
                        "diagonal-exact needs a diagonal-block graphon".into(),
                    ));
                }
                (diagonal_block_exact_entropy(n)?, None)
            }
            other => {
                return Err(Error::Unsupported(format!("unknown entropy method '{other}'")))
            }
        };
        rows.push(EntropyRow {
            n,
            method: method.to_string(),
            value_bits: value,
            stderr,
            runtime_ms: start.elapsed().as_millis(),
        });
    }
    Ok(rows)
}

fn sample_many(spec: &GraphonSpec, n: usize, count: u64, seed: u64) -> Result<Vec<LabeledGraph>> {
    let mut rng = RngStream::new(seed).rng();
    let mut out = Vec::with_capacity(count as usize);
    match spec {
        GraphonSpec::Step { .. } | GraphonSpec::KttMixture { .. } => {
            let w = spec.to_stepfunction()?;
            for _ in 0..count {
                out.push(sample_graph_stepfunction(n, &w, &mut rng).0);
            }
        }
        GraphonSpec::DiagonalBlock { .. } => {
            for _ in 0..count {
                out.push(sample_graph_diagonal_block(n, &mut rng).0);
            }
        }
        GraphonSpec::Transversal { alpha, k_max } => {
            let partition = alpha_partition(&alpha.schedule(), *k_max)?;
            let structure = layer_sizes(6);
            for _ in 0..count {
                out.push(sample_graph_transversal(n, &partition, &structure, &mut rng)?.0);
            }
        }
    }
    Ok(out)
}

/// CSV with the documented columns. `runtime_ms` varies run to run; byte
/// determinism holds for all value columns given (config, seed).
pub fn entropy_csv(rows: &[EntropyRow]) -> String {
    let mut out = String::from("n,method,value_bits,stderr,runtime_ms\n");
    for r in rows {
        let stderr = r.stderr.map(|e| format!("{e}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.n, r.method, r.value_bits, stderr, r.runtime_ms
        );
    }
    out
}

/// JSON variant of the entropy output.
pub fn entropy_json(rows: &[EntropyRow]) -> String {
    let arr: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "n": r.n,
                "method": r.method,
                "value_bits": r.value_bits,
                "stderr": r.stderr,
                "runtime_ms": r.runtime_ms as u64,
            })
        })
        .collect();
    serde_json::to_string_pretty(&arr).expect("json")
}

/// Builds a GraphonSpec from CLI parameters for `graphon build`.
pub fn build_spec(
    kind: &str,
    measures: Option<&str>,
    values: Option<&str>,
    depth: Option<u32>,
    alpha: Option<&str>,
    k_max: u32,
    t: Option<usize>,
    nmax: Option<usize>,
    lengths: Option<&str>,
) -> Result<GraphonSpec> {
    let parse_floats = |s: &str| -> Result<Vec<f64>> {
        s.split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string())))
            .collect()
    };
    let spec = match kind {
        "step" => {
            let m = parse_floats(measures.ok_or_else(|| missing("--measures"))?)?;
            let rows: Vec<Vec<f64>> = values
                .ok_or_else(|| missing("--values"))?
                .split(';')
                .map(parse_floats)
                .collect::<Result<_>>()?;
            GraphonSpec::Step {
                measures: m,
                values: rows,
            }
        }
        "diagonal-block" => GraphonSpec::DiagonalBlock {
            depth: depth.ok_or_else(|| missing("--depth"))?,
        },
        "transversal" => {
            let alpha = match alpha.ok_or_else(|| missing("--alpha"))? {
                "inverse-n" => graphon_lab::constructions::AlphaForm::InverseN,
                "exp-decay" => graphon_lab::constructions::AlphaForm::ExpDecay,
                other => return Err(Error::Parse(format!("unknown alpha form '{other}'"))),
            };
            GraphonSpec::Transversal { alpha, k_max }
        }
        "ktt-mixture" => GraphonSpec::KttMixture {
            t: t.ok_or_else(|| missing("--t"))?,
            nmax: nmax.ok_or_else(|| missing("--nmax"))?,
            lengths: lengths.map(parse_floats).transpose()?,
        },
        other => return Err(Error::Parse(format!("unknown construction '{other}'"))),
    };
    // validate eagerly so `build` fails rather than emitting a broken spec
    match &spec {
        GraphonSpec::Transversal { alpha, k_max } => {
            alpha_partition(&alpha.schedule(), *k_max)?;
        }
        _ => {
            spec.to_stepfunction()?;
        }
    }
    Ok(spec)
}

fn missing(flag: &str) -> Error {
    Error::Parse(format!("{flag} is required for this construction"))
}

/// Seed requirement shared by the randomized subcommands.
pub fn require_seed(seed: Option<u64>) -> Result<u64> {
    seed.ok_or_else(|| Error::Unsupported("randomized runs need an explicit --seed".into()))
}

/// True when an RNG value would actually be consumed (used to enforce the
/// seed requirement only on genuinely randomized runs).
pub fn method_is_random(method: &str) -> bool {
    matches!(method, "plugin" | "transversal-lb")
}
