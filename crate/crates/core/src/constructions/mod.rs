//! The graph, bigraph and graphon constructions: F_m, the transversal-uniform
//! layer structure with its alpha-driven interval partition, the
//! diagonal-block graphon, the K_{t,t}-free mixture, and the bigraph B.

mod diagonal;
mod ktt;
mod transversal;

pub use diagonal::{diagonal_block_graphon, DiagonalBlock};
pub use ktt::{enumerate_ktt_free, ktt_mixture_graphon, KttMixture};
pub use transversal::{
    alpha_partition, layer_sizes, AlphaForm, AlphaSchedule, Group, IntervalPartition, LayerSize,
    TransversalStructure, DEFAULT_K_MAX,
};

use crate::bigraph::Bigraph;
use crate::error::{Error, Result};

/// F_m: the bigraph ([m], [2^m]) in which every subset of [m] occurs exactly
/// once as a right-vertex neighborhood. Right vertex j (0-based) gets the
/// subset encoded by the bits of j, least significant bit = left vertex 1.
/// The ordering is a convention fixed for reproducibility; the bigraph is
/// unique only up to isomorphism.
pub fn fm_bigraph(m: u32) -> Result<Bigraph> {
    if m == 0 || m > 20 {
        return Err(Error::SizeBound(format!(
            "fm_bigraph needs 1 <= m <= 20, got {m}"
        )));
    }
    let columns: Vec<u64> = (0..1u64 << m).collect();
    Bigraph::from_columns(m as usize, columns)
}

/// The bigraph B used to enlarge the K_{t,t}-free property: left side
/// V1 ∪ U1, right side V2 ∪ U2, each part of size t; V1 x V2 complete,
/// plus perfect matchings V1-U2 and U1-V2. Edge count t^2 + 2t; the
/// associated graph is connected, contains K_{t,t}, and has pairwise
/// distinct vertex neighborhoods.
pub fn bigraph_b(t: usize) -> Result<Bigraph> {
    if t == 0 {
        return Err(Error::InvalidBigraph("bigraph_b needs t >= 1".into()));
    }
    // left: V1 = 0..t, U1 = t..2t; right: V2 = 0..t, U2 = t..2t
    let mut edges = Vec::with_capacity(t * t + 2 * t);
    for a in 0..t {
        for b in 0..t {
            edges.push((a, b));
        }
    }
    for i in 0..t {
        edges.push((i, t + i)); // V1 - U2 matching
        edges.push((t + i, i)); // U1 - V2 matching
    }
    Bigraph::from_edges(2 * t, 2 * t, &edges)
}
