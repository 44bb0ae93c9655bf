//! Finite simple labeled graphs with bitset adjacency.

use crate::error::{Error, Result};

/// A simple labeled graph on vertex set `[n]` (0-based internally, 1-based in
/// the text format). Adjacency is stored as a row-major bit matrix so that
/// neighborhood operations are word-parallel; vertex counts of a few thousand
/// are fine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl LabeledGraph {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        LabeledGraph {
            n,
            words_per_row,
            bits: vec![0u64; n * words_per_row],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list (0-based endpoints).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = LabeledGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) outside vertex range 0..{}",
                self.n
            )));
        }
        if !self.has_edge(u, v) {
            self.set_bit(u, v);
            self.set_bit(v, u);
            self.edge_count += 1;
        }
        Ok(())
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] |= 1u64 << (v % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row]
    }

    /// Neighborhood of `u` as a u64 bitmask; requires n <= 64.
    pub fn neighbors_u64(&self, u: usize) -> Result<u64> {
        if self.n > 64 {
            return Err(Error::SizeBound(format!(
                "u64 neighborhood masks need n <= 64, got {}",
                self.n
            )));
        }
        Ok(self.row(u)[0])
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True if rows `u` and `v` agree outside `{u, v}`.
    pub fn same_neighborhood_outside(&self, u: usize, v: usize) -> bool {
        (0..self.n)
            .filter(|&w| w != u && w != v)
            .all(|w| self.has_edge(u, w) == self.has_edge(v, w))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> LabeledGraph {
        let mut g = LabeledGraph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("complement edge in range");
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> LabeledGraph {
        LabeledGraph::new(n).complement()
    }

    /// Cycle C_n (n >= 3).
    pub fn cycle(n: usize) -> LabeledGraph {
        let mut g = LabeledGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).expect("cycle edge");
        }
        g
    }

    /// Path P_n on n vertices.
    pub fn path(n: usize) -> LabeledGraph {
        let mut g = LabeledGraph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i).expect("path edge");
        }
        g
    }

    /// Disjoint union of `count` cliques, each on `size` vertices.
    pub fn clique_union(count: usize, size: usize) -> LabeledGraph {
        let mut g = LabeledGraph::new(count * size);
        for c in 0..count {
            for a in 0..size {
                for b in (a + 1)..size {
                    g.add_edge(c * size + a, c * size + b).expect("clique edge");
                }
            }
        }
        g
    }

    /// Packs the upper-triangle adjacency into a u64 bitmask. Pair (u,v) with
    /// u < v occupies bit `pair_index(n, u, v)`. Requires C(n,2) <= 64.
    pub fn edge_mask(&self) -> Result<u64> {
        let pairs = self.n * (self.n - 1) / 2;
        if pairs > 64 {
            return Err(Error::SizeBound(format!(
                "edge mask needs C(n,2) <= 64, got {pairs}"
            )));
        }
        let mut mask = 0u64;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    mask |= 1u64 << pair_index(self.n, u, v);
                }
            }
        }
        Ok(mask)
    }

    pub fn from_edge_mask(n: usize, mask: u64) -> LabeledGraph {
        let mut g = LabeledGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if mask >> pair_index(n, u, v) & 1 == 1 {
                    g.add_edge(u, v).expect("mask edge in range");
                }
            }
        }
        g
    }

    /// Lexicographically minimal edge mask over all vertex relabelings.
    /// Brute force over n! permutations; intended for small n.
    pub fn canonical_mask(&self) -> Result<u64> {
        let mask = self.edge_mask()?;
        Ok(canonical_mask(self.n, mask))
    }

    /// Parses the text format: header "n m" followed by m lines "u v" (1-based).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = next_num(&mut tokens, "vertex count")?;
        let m: usize = next_num(&mut tokens, "edge count")?;
        let mut g = LabeledGraph::new(n);
        for _ in 0..m {
            let u: usize = next_num(&mut tokens, "edge endpoint")?;
            let v: usize = next_num(&mut tokens, "edge endpoint")?;
            if u == 0 || v == 0 {
                return Err(Error::Parse("vertices are 1-based".into()));
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    /// Multi-line text format: "n m" header then one "u v" line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// Single-line variant of the text format (same tokens, one line).
    pub fn to_line(&self) -> String {
        let mut s = format!("{} {}", self.n, self.edge_count);
        for (u, v) in self.edges() {
            s.push_str(&format!(" {} {}", u + 1, v + 1));
        }
        s
    }
}

fn next_num(tokens: &mut std::str::SplitWhitespace, what: &str) -> Result<usize> {
    tokens
        .next()
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
}

/// Index of pair (u,v), u < v, in the fixed upper-triangle order used by
/// edge masks and `GraphDistribution`.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Applies a vertex permutation to an edge mask and returns the new mask.
pub fn permute_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> pair_index(n, u, v) & 1 == 1 {
                let (a, b) = if perm[u] < perm[v] {
                    (perm[u], perm[v])
                } else {
                    (perm[v], perm[u])
                };
                out |= 1u64 << pair_index(n, a, b);
            }
        }
    }
    out
}

/// Minimal mask over all vertex permutations (brute force, small n only).
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let mut best = mask;
    for_each_permutation(n, &mut |perm| {
        let m = permute_mask(n, mask, perm);
        if m < best {
            best = m;
        }
    });
    best
}

/// Calls `f` with every permutation of 0..n.
pub fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permute(&mut perm, n, f);
}

fn heap_permute(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(perm);
        return;
    }
    for i in 0..k {
        heap_permute(perm, k - 1, f);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}
