//! Exact and Monte Carlo densities: t(H;G), p(H;G), p(H;W), p^b(H;W),
//! induced sub-bigraph detection, homogeneous sets and K_{t,t}-freeness.
//!
//! Exact values are rationals end-to-end; Monte Carlo estimates report a
//! standard error. Brute-force searches carry explicit size guards tuned for
//! sub-second desk runs.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::bigraph::Bigraph;
use crate::constructions::KttMixture;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::step::StepFunction;

/// Exact-mode state-space bound (assignment enumerations).
pub const EXACT_STATE_BOUND: f64 = 1e7;
/// Brute-force search bound (sub-bigraph detection).
pub const SEARCH_STATE_BOUND: f64 = 1e8;

/// A density value: exact rational or Monte Carlo estimate with stderr.
#[derive(Clone, Debug)]
pub enum DensityResult {
    Exact(BigRational),
    MonteCarlo {
        estimate: f64,
        stderr: f64,
        samples: u64,
    },
}

impl DensityResult {
    pub fn value_f64(&self) -> f64 {
        match self {
            DensityResult::Exact(r) => r.to_f64().expect("density fits f64"),
            DensityResult::MonteCarlo { estimate, .. } => *estimate,
        }
    }

    pub fn stderr(&self) -> Option<f64> {
        match self {
            DensityResult::Exact(_) => None,
            DensityResult::MonteCarlo { stderr, .. } => Some(*stderr),
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            DensityResult::Exact(r) => Some(r),
            DensityResult::MonteCarlo { .. } => None,
        }
    }
}

/// Homomorphism density t(H;G): the probability that a uniformly random map
/// V(H) -> V(G) maps every edge of H to an edge of G. One-sided: non-edges
/// of H are unconstrained, and maps need not be injective.
pub fn hom_density(pattern: &LabeledGraph, target: &LabeledGraph) -> Result<DensityResult> {
    let ng = target.n();
    if ng == 0 {
        return Err(Error::EmptyGraph);
    }
    let nh = pattern.n();
    if (ng as f64).powi(nh as i32) > SEARCH_STATE_BOUND {
        return Err(Error::SizeBound(format!(
            "{ng}^{nh} maps exceed the brute-force bound"
        )));
    }
    let mut assignment = vec![0usize; nh];
    let count = count_hom_maps(pattern, target, &mut assignment, 0);
    let denom = BigUint::from(ng).pow(nh as u32);
    Ok(DensityResult::Exact(BigRational::new(
        BigInt::from(count),
        BigInt::from(denom),
    )))
}

fn count_hom_maps(
    pattern: &LabeledGraph,
    target: &LabeledGraph,
    assignment: &mut [usize],
    next: usize,
) -> BigUint {
    if next == pattern.n() {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    'candidates: for y in 0..target.n() {
        for u in 0..next {
            if pattern.has_edge(u, next) && !target.has_edge(assignment[u], y) {
                continue 'candidates;
            }
        }
        assignment[next] = y;
        total += count_hom_maps(pattern, target, assignment, next + 1);
    }
    total
}

/// Induced density p(H;G): the probability that a uniformly random injective
/// placement of V(H) into V(G) induces exactly H.
pub fn induced_density(pattern: &LabeledGraph, target: &LabeledGraph) -> Result<DensityResult> {
    let (nh, ng) = (pattern.n(), target.n());
    if nh > ng {
        return Err(Error::SizeBound(format!(
            "pattern on {nh} vertices larger than target on {ng}"
        )));
    }
    if (ng as f64).powi(nh as i32) > SEARCH_STATE_BOUND {
        return Err(Error::SizeBound(format!(
            "{ng}^{nh} maps exceed the brute-force bound"
        )));
    }
    let mut assignment = vec![usize::MAX; nh];
    let mut used = vec![false; ng];
    let count = count_embeddings(pattern, target, &mut assignment, &mut used, 0);
    // falling factorial ng * (ng-1) * ... over nh factors
    let mut denom = BigUint::one();
    for i in 0..nh {
        denom *= BigUint::from(ng - i);
    }
    Ok(DensityResult::Exact(BigRational::new(
        BigInt::from(count),
        BigInt::from(denom),
    )))
}

fn count_embeddings(
    pattern: &LabeledGraph,
    target: &LabeledGraph,
    assignment: &mut [usize],
    used: &mut [bool],
    next: usize,
) -> BigUint {
    if next == pattern.n() {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    'candidates: for y in 0..target.n() {
        if used[y] {
            continue;
        }
        for u in 0..next {
            if pattern.has_edge(u, next) != target.has_edge(assignment[u], y) {
                continue 'candidates;
            }
        }
        assignment[next] = y;
        used[y] = true;
        total += count_embeddings(pattern, target, assignment, used, next + 1);
        used[y] = false;
    }
    total
}

/// Exact p(H;W) for a stepfunction: sum over step assignments of
/// product(measures) * product_{uv in E} w * product_{uv not in E} (1-w).
pub fn induced_density_graphon_exact(
    pattern: &LabeledGraph,
    w: &StepFunction,
) -> Result<BigRational> {
    let nh = pattern.n();
    let q = w.steps();
    if (q as f64).powi(nh as i32) > EXACT_STATE_BOUND {
        return Err(Error::SizeBound(format!(
            "{q}^{nh} step assignments exceed the exact bound"
        )));
    }
    let mut assignment = vec![0usize; nh];
    let mut total = BigRational::zero();
    sum_assignments(pattern, w, &mut assignment, 0, &BigRational::one(), &mut total);
    Ok(total)
}

fn sum_assignments(
    pattern: &LabeledGraph,
    w: &StepFunction,
    assignment: &mut [usize],
    next: usize,
    weight: &BigRational,
    total: &mut BigRational,
) {
    if weight.is_zero() {
        return;
    }
    if next == pattern.n() {
        *total += weight;
        return;
    }
    for s in 0..w.steps() {
        assignment[next] = s;
        let mut wt = weight * w.measure(s);
        for u in 0..next {
            let val = w.value(assignment[u], s);
            if pattern.has_edge(u, next) {
                wt *= val;
            } else {
                wt *= BigRational::one() - val;
            }
            if wt.is_zero() {
                break;
            }
        }
        sum_assignments(pattern, w, assignment, next + 1, &wt, total);
    }
}

/// Monte Carlo p(H;W): vertices draw steps by measure; the estimator is the
/// product of edge/non-edge probabilities (unbiased, lower variance than
/// resampling the graph).
pub fn induced_density_graphon_mc<R: Rng>(
    pattern: &LabeledGraph,
    w: &StepFunction,
    trials: u64,
    rng: &mut R,
) -> DensityResult {
    let nh = pattern.n();
    let measures: Vec<f64> = (0..w.steps()).map(|i| w.measure_f64(i)).collect();
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    let mut steps = vec![0usize; nh];
    for _ in 0..trials {
        for s in steps.iter_mut() {
            *s = sample_index(&measures, rng);
        }
        let mut term = 1.0;
        for u in 0..nh {
            for v in (u + 1)..nh {
                let val = w.value_f64(steps[u], steps[v]);
                term *= if pattern.has_edge(u, v) { val } else { 1.0 - val };
            }
        }
        sum += term;
        sum_sq += term * term;
    }
    mc_result(sum, sum_sq, trials)
}

fn sample_index<R: Rng>(measures: &[f64], rng: &mut R) -> usize {
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

fn mc_result(sum: f64, sum_sq: f64, trials: u64) -> DensityResult {
    let n = trials as f64;
    let mean = sum / n;
    let var = (sum_sq / n - mean * mean).max(0.0);
    DensityResult::MonteCarlo {
        estimate: mean,
        stderr: (var / n).sqrt(),
        samples: trials,
    }
}

/// Exact p^b(H;W) for a stepfunction, with independent left and right
/// points. Right vertices are independent given the left assignment, so the
/// enumeration is q^{m1} * m2 * q instead of q^{m1+m2}.
pub fn bigraph_density_step_exact(pattern: &Bigraph, w: &StepFunction) -> Result<BigRational> {
    let (m1, m2) = (pattern.left(), pattern.right());
    let q = w.steps();
    if (q as f64).powi(m1 as i32) * (q * m1 * m2) as f64 > SEARCH_STATE_BOUND {
        return Err(Error::SizeBound(format!(
            "{q}^{m1} left assignments exceed the exact bound"
        )));
    }
    let mut left = vec![0usize; m1];
    let mut total = BigRational::zero();
    sum_left_assignments(pattern, w, &mut left, 0, &BigRational::one(), &mut total);
    Ok(total)
}

fn sum_left_assignments(
    pattern: &Bigraph,
    w: &StepFunction,
    left: &mut [usize],
    next: usize,
    weight: &BigRational,
    total: &mut BigRational,
) {
    if weight.is_zero() {
        return;
    }
    if next == pattern.left() {
        // each right vertex independently sums over its step
        let mut term = weight.clone();
        for v in 0..pattern.right() {
            let mut inner = BigRational::zero();
            for s in 0..w.steps() {
                let mut f = w.measure(s).clone();
                for (u, lstep) in left.iter().enumerate() {
                    let val = w.value(*lstep, s);
                    if pattern.has_edge(u, v) {
                        f *= val;
                    } else {
                        f *= BigRational::one() - val;
                    }
                    if f.is_zero() {
                        break;
                    }
                }
                inner += f;
            }
            term *= inner;
            if term.is_zero() {
                return;
            }
        }
        *total += term;
        return;
    }
    for s in 0..w.steps() {
        left[next] = s;
        sum_left_assignments(
            pattern,
            w,
            left,
            next + 1,
            &(weight * w.measure(s)),
            total,
        );
    }
}

/// p^b(H;G) for a finite graph G, computed as p^b(H;W_G).
pub fn bigraph_density_graph_exact(pattern: &Bigraph, g: &LabeledGraph) -> Result<BigRational> {
    bigraph_density_step_exact(pattern, &StepFunction::from_graph(g)?)
}

/// Exact p^b for the K_{t,t}-free mixture, exploiting the block-diagonal
/// structure: a connected pattern without isolated vertices can only land
/// entirely inside a single block, so
/// p^b = sum_i (l_i / n_i)^{m1+m2} * #(map pairs realizing the pattern in H_i).
pub fn bigraph_density_mixture_exact(
    pattern: &Bigraph,
    mixture: &KttMixture,
) -> Result<BigRational> {
    let g = pattern.associated_graph();
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return Err(Error::Unsupported(
            "mixture p^b needs a pattern without isolated vertices".into(),
        ));
    }
    if !pattern.is_connected() {
        return Err(Error::Unsupported(
            "mixture p^b needs a connected pattern".into(),
        ));
    }
    let r = (pattern.left() + pattern.right()) as u32;
    let mut total = BigRational::zero();
    for (len, h) in mixture.blocks() {
        let count = count_pattern_map_pairs(pattern, h);
        if count.is_zero() {
            continue;
        }
        let n = BigRational::from(BigInt::from(h.n()));
        total += (len / n).pow(r as i32) * BigRational::from(BigInt::from(count));
    }
    Ok(total)
}

/// Counts pairs of (not necessarily injective) maps f: U1 -> V(H),
/// g: U2 -> V(H) with (u,v) in E(B) iff f(u)g(v) in E(H) for all pairs.
/// Coincidences f(u) = g(v) count as non-edges (no self-loops).
fn count_pattern_map_pairs(pattern: &Bigraph, h: &LabeledGraph) -> BigUint {
    let m1 = pattern.left();
    let mut left = vec![0usize; m1];
    let mut total = BigUint::zero();
    loop {
        // right vertices are independent given the left map
        let mut term = BigUint::one();
        for v in 0..pattern.right() {
            let mut choices = 0u64;
            'ys: for y in 0..h.n() {
                for (u, &x) in left.iter().enumerate() {
                    if pattern.has_edge(u, v) != h.has_edge(x, y) {
                        continue 'ys;
                    }
                }
                choices += 1;
            }
            if choices == 0 {
                term = BigUint::zero();
                break;
            }
            term *= BigUint::from(choices);
        }
        total += term;
        // odometer over left assignments
        let mut pos = 0;
        loop {
            if pos == m1 {
                return total;
            }
            left[pos] += 1;
            if left[pos] < h.n() {
                break;
            }
            left[pos] = 0;
            pos += 1;
        }
    }
}

/// Monte Carlo p^b on a stepfunction.
pub fn bigraph_density_step_mc<R: Rng>(
    pattern: &Bigraph,
    w: &StepFunction,
    trials: u64,
    rng: &mut R,
) -> DensityResult {
    let (m1, m2) = (pattern.left(), pattern.right());
    let measures: Vec<f64> = (0..w.steps()).map(|i| w.measure_f64(i)).collect();
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    let mut left = vec![0usize; m1];
    let mut right = vec![0usize; m2];
    for _ in 0..trials {
        for s in left.iter_mut() {
            *s = sample_index(&measures, rng);
        }
        for s in right.iter_mut() {
            *s = sample_index(&measures, rng);
        }
        let mut term = 1.0;
        'outer: for (u, &ls) in left.iter().enumerate() {
            for (v, &rs) in right.iter().enumerate() {
                let val = w.value_f64(ls, rs);
                term *= if pattern.has_edge(u, v) { val } else { 1.0 - val };
                if term == 0.0 {
                    break 'outer;
                }
            }
        }
        sum += term;
        sum_sq += term * term;
    }
    mc_result(sum, sum_sq, trials)
}

/// True iff G contains B as an induced sub-bigraph: two subsets S, T of V(G)
/// (not necessarily disjoint), injective per side, realizing exactly B's
/// edge pattern on S x T under the associated-bigraph convention
/// E' = {(x,y) : xy in E} (so (v,v) pairs are never edges).
pub fn contains_induced_subbigraph(g: &LabeledGraph, pattern: &Bigraph) -> Result<bool> {
    let n = g.n();
    let (m1, m2) = (pattern.left(), pattern.right());
    if m1 > n || m2 > n {
        return Ok(false);
    }
    if (n as f64).powi((m1 + m2) as i32) > SEARCH_STATE_BOUND {
        return Err(Error::SizeBound(format!(
            "{n}^{} tuples exceed the search bound",
            m1 + m2
        )));
    }
    let mut left = vec![usize::MAX; m1];
    let mut used_left = vec![false; n];
    find_left(g, pattern, &mut left, &mut used_left, 0)
}

fn find_left(
    g: &LabeledGraph,
    pattern: &Bigraph,
    left: &mut [usize],
    used_left: &mut [bool],
    next: usize,
) -> Result<bool> {
    if next == pattern.left() {
        let mut right = vec![usize::MAX; pattern.right()];
        let mut used_right = vec![false; g.n()];
        return Ok(find_right(g, pattern, left, &mut right, &mut used_right, 0));
    }
    for x in 0..g.n() {
        if used_left[x] {
            continue;
        }
        left[next] = x;
        used_left[x] = true;
        let found = find_left(g, pattern, left, used_left, next + 1)?;
        used_left[x] = false;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn find_right(
    g: &LabeledGraph,
    pattern: &Bigraph,
    left: &[usize],
    right: &mut [usize],
    used_right: &mut [bool],
    next: usize,
) -> bool {
    if next == pattern.right() {
        return true;
    }
    'candidates: for y in 0..g.n() {
        if used_right[y] {
            continue;
        }
        for (u, &x) in left.iter().enumerate() {
            if pattern.has_edge(u, next) != g.has_edge(x, y) {
                continue 'candidates;
            }
        }
        right[next] = y;
        used_right[y] = true;
        if find_right(g, pattern, left, right, used_right, next + 1) {
            return true;
        }
        used_right[y] = false;
    }
    false
}

/// Size of the largest homogeneous set: max(omega(G), omega(complement G)).
pub fn largest_homogeneous_set(g: &LabeledGraph) -> Result<usize> {
    let n = g.n();
    if n > 40 {
        return Err(Error::SizeBound(format!(
            "exact max clique bound is n <= 40, got {n}"
        )));
    }
    Ok(max_clique(g)?.max(max_clique(&g.complement())?))
}

fn max_clique(g: &LabeledGraph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n).map(|u| g.neighbors_u64(u)).collect::<Result<_>>()?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0usize;
    clique_branch(&adj, all, 0, &mut best);
    Ok(best)
}

fn clique_branch(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        clique_branch(adj, candidates & adj[v] & rest_mask_from(v), size + 1, best);
        // after trying v, exclude it from further branches
        if size + rest.count_ones() as usize <= *best {
            return;
        }
    }
    *best = (*best).max(size);
}

fn rest_mask_from(v: usize) -> u64 {
    // vertices strictly above v, to avoid revisiting cliques in both orders
    if v >= 63 {
        0
    } else {
        !((1u64 << (v + 1)) - 1)
    }
}

/// True iff G has no K_{t,t} subgraph: no two disjoint t-sets S, T with all
/// t^2 cross edges present. Subgraph semantics, not induced.
pub fn is_ktt_free(g: &LabeledGraph, t: usize) -> Result<bool> {
    let n = g.n();
    if t == 0 {
        return Err(Error::SizeBound("t must be >= 1".into()));
    }
    if n > 30 {
        return Err(Error::SizeBound(format!(
            "K_tt brute force bound is n <= 30, got {n}"
        )));
    }
    if t == 1 {
        return Ok(g.edge_count() == 0);
    }
    if 2 * t > n {
        return Ok(true);
    }
    let adj: Vec<u64> = (0..n).map(|u| g.neighbors_u64(u)).collect::<Result<_>>()?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // enumerate t-subsets S; G contains K_{t,t} iff some S has >= t common
    // neighbors outside S
    Ok(!has_ktt_subset(&adj, n, t, 0, 0, all))
}

fn has_ktt_subset(adj: &[u64], n: usize, t: usize, depth: usize, start: usize, state: u64) -> bool {
    // state = common neighborhood of the chosen vertices, minus the chosen set
    if depth == t {
        return state.count_ones() as usize >= t;
    }
    // common neighborhoods only shrink; prune when even t more picks can't help
    if (state.count_ones() as usize) < t {
        return false;
    }
    for v in start..n {
        // excluding v keeps T disjoint from S
        let next = state & adj[v] & !(1u64 << v);
        if has_ktt_subset(adj, n, t, depth + 1, v + 1, next) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::bigraph_b;

    fn exact(r: &DensityResult) -> BigRational {
        r.exact().unwrap().clone()
    }

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn hom_density_examples() {
        let k1 = LabeledGraph::complete(1);
        let k2 = LabeledGraph::complete(2);
        let k3 = LabeledGraph::complete(3);
        assert_eq!(exact(&hom_density(&k1, &k3).unwrap()), ratio(1, 1));
        // 6 ordered adjacent pairs / 9 maps
        assert_eq!(exact(&hom_density(&k2, &k3).unwrap()), ratio(2, 3));
        assert_eq!(
            exact(&hom_density(&k2, &LabeledGraph::new(4)).unwrap()),
            ratio(0, 1)
        );
        assert!(hom_density(&k2, &LabeledGraph::new(0)).is_err());
    }

    #[test]
    fn hom_density_allows_noninjective_maps() {
        // t(P_3; K_2): maps 0,1,2 -> {0,1} with edges 01, 12 preserved:
        // alternating maps only, 2 of 8.
        let p3 = LabeledGraph::path(3);
        let k2 = LabeledGraph::complete(2);
        assert_eq!(exact(&hom_density(&p3, &k2).unwrap()), ratio(1, 4));
    }

    #[test]
    fn induced_density_examples() {
        let k2 = LabeledGraph::complete(2);
        let k3 = LabeledGraph::complete(3);
        let p3 = LabeledGraph::path(3);
        assert_eq!(exact(&induced_density(&k2, &k3).unwrap()), ratio(1, 1));
        assert_eq!(exact(&induced_density(&k2, &p3).unwrap()), ratio(2, 3));
        assert_eq!(
            exact(&induced_density(&LabeledGraph::complete(1), &p3).unwrap()),
            ratio(1, 1)
        );
        assert!(induced_density(&k3, &k2).is_err());
    }

    #[test]
    fn graphon_density_constant() {
        let k2 = LabeledGraph::complete(2);
        let w = StepFunction::constant(0.25).unwrap();
        assert_eq!(
            induced_density_graphon_exact(&k2, &w).unwrap(),
            ratio(1, 4)
        );
    }

    #[test]
    fn graphon_density_checkerboard() {
        // W = [[1,0],[0,1]] equal steps: p(K_2;W) = sum of m_i^2 = 1/2.
        let w = StepFunction::from_f64(
            &[0.5, 0.5],
            &[vec![1.0, 0.0], vec![0.0, 1.0]],
        )
        .unwrap();
        let k2 = LabeledGraph::complete(2);
        assert_eq!(induced_density_graphon_exact(&k2, &w).unwrap(), ratio(1, 2));
    }

    #[test]
    fn graphon_density_normalizes_over_l3() {
        let w = StepFunction::from_f64(
            &[0.25, 0.75],
            &[vec![0.3, 0.8], vec![0.8, 0.1]],
        )
        .unwrap();
        let mut total = BigRational::zero();
        for mask in 0..8u64 {
            let h = LabeledGraph::from_edge_mask(3, mask);
            total += induced_density_graphon_exact(&h, &w).unwrap();
        }
        assert_eq!(total, BigRational::one());
    }

    #[test]
    fn bigraph_density_examples() {
        let w = StepFunction::constant(0.25).unwrap();
        let edge = Bigraph::from_edges(1, 1, &[(0, 0)]).unwrap();
        let non_edge = Bigraph::new(1, 1).unwrap();
        assert_eq!(bigraph_density_step_exact(&edge, &w).unwrap(), ratio(1, 4));
        assert_eq!(
            bigraph_density_step_exact(&non_edge, &w).unwrap(),
            ratio(3, 4)
        );
    }

    #[test]
    fn mc_converges_to_exact() {
        use rand::SeedableRng;
        let w = StepFunction::from_f64(
            &[0.5, 0.5],
            &[vec![0.2, 0.9], vec![0.9, 0.4]],
        )
        .unwrap();
        let p3 = LabeledGraph::path(3);
        let exact_val = induced_density_graphon_exact(&p3, &w)
            .unwrap()
            .to_f64()
            .unwrap();
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        let mc = induced_density_graphon_mc(&p3, &w, 100_000, &mut rng);
        let (est, err) = (mc.value_f64(), mc.stderr().unwrap());
        assert!((est - exact_val).abs() <= 3.0 * err.max(1e-6));

        let b = bigraph_b(1).unwrap();
        let exact_b = bigraph_density_step_exact(&b, &w).unwrap().to_f64().unwrap();
        let mcb = bigraph_density_step_mc(&b, &w, 100_000, &mut rng);
        assert!((mcb.value_f64() - exact_b).abs() <= 3.0 * mcb.stderr().unwrap().max(1e-6));
    }

    #[test]
    fn subbigraph_single_edge() {
        let edge = Bigraph::from_edges(1, 1, &[(0, 0)]).unwrap();
        assert!(contains_induced_subbigraph(&LabeledGraph::complete(2), &edge).unwrap());
        assert!(!contains_induced_subbigraph(&LabeledGraph::new(2), &edge).unwrap());
    }

    #[test]
    fn subbigraph_pattern_larger_than_graph() {
        let b = Bigraph::new(3, 1).unwrap();
        assert!(!contains_induced_subbigraph(&LabeledGraph::complete(2), &b).unwrap());
    }

    #[test]
    fn subbigraph_b1_in_p4_matches_oracle() {
        // Independent exhaustive oracle over all ordered tuples.
        let b = bigraph_b(1).unwrap();
        let g = LabeledGraph::path(4);
        let mut oracle = false;
        let n = g.n();
        for x0 in 0..n {
            for x1 in 0..n {
                if x1 == x0 {
                    continue;
                }
                for y0 in 0..n {
                    for y1 in 0..n {
                        if y1 == y0 {
                            continue;
                        }
                        let xs = [x0, x1];
                        let ys = [y0, y1];
                        let mut ok = true;
                        for u in 0..2 {
                            for v in 0..2 {
                                if b.has_edge(u, v) != g.has_edge(xs[u], ys[v]) {
                                    ok = false;
                                }
                            }
                        }
                        oracle |= ok;
                    }
                }
            }
        }
        assert_eq!(contains_induced_subbigraph(&g, &b).unwrap(), oracle);
    }

    #[test]
    fn homogeneous_set_examples() {
        assert_eq!(
            largest_homogeneous_set(&LabeledGraph::complete(5)).unwrap(),
            5
        );
        assert_eq!(
            largest_homogeneous_set(&LabeledGraph::clique_union(3, 3)).unwrap(),
            3
        );
        assert_eq!(largest_homogeneous_set(&LabeledGraph::cycle(5)).unwrap(), 2);
    }

    #[test]
    fn homogeneous_set_brute_force_oracle() {
        // check max over all subsets for a few small graphs
        for g in [
            LabeledGraph::path(5),
            LabeledGraph::cycle(6),
            LabeledGraph::clique_union(2, 2),
        ] {
            let n = g.n();
            let mut best = 0usize;
            for mask in 1u64..1 << n {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let all_adj = verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                let none_adj = verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
                if all_adj || none_adj {
                    best = best.max(verts.len());
                }
            }
            assert_eq!(largest_homogeneous_set(&g).unwrap(), best);
        }
    }

    #[test]
    fn ktt_free_examples() {
        assert!(!is_ktt_free(&LabeledGraph::cycle(4), 2).unwrap()); // C4 = K_{2,2}
        assert!(is_ktt_free(&LabeledGraph::complete(3), 2).unwrap());
        assert!(is_ktt_free(&LabeledGraph::new(5), 1).unwrap());
        assert!(!is_ktt_free(&LabeledGraph::complete(2), 1).unwrap());
        assert!(!is_ktt_free(&LabeledGraph::complete(6), 3).unwrap());
        assert!(is_ktt_free(&LabeledGraph::complete(5), 3).unwrap()); // needs 6 vertices
    }
}
