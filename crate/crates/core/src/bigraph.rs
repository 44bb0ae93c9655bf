//! Bigraphs: bipartite patterns (U1, U2, E) with E ⊆ U1 × U2.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A bigraph `([m1], [m2], E)`. Unlike a bipartite graph, the two sides are
/// ordered and edges are directed pairs (left, right).
///
/// Storage is one left-neighborhood bitmask per right vertex, so the left
/// side is capped at 64 vertices while the right side may be large (F_m has
/// 2^m right vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraph {
    m1: usize,
    m2: usize,
    /// columns[v] = bitmask of left neighbors of right vertex v.
    columns: Vec<u64>,
    edge_count: usize,
}

impl Bigraph {
    pub fn new(m1: usize, m2: usize) -> Result<Self> {
        if m1 > 64 {
            return Err(Error::InvalidBigraph(format!(
                "left side {m1} exceeds 64 (bitmask representation)"
            )));
        }
        Ok(Bigraph {
            m1,
            m2,
            columns: vec![0; m2],
            edge_count: 0,
        })
    }

    pub fn from_edges(m1: usize, m2: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = Bigraph::new(m1, m2)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b)
    }

    /// Builds directly from left-neighborhood masks of the right vertices.
    pub fn from_columns(m1: usize, columns: Vec<u64>) -> Result<Self> {
        if m1 > 64 {
            return Err(Error::InvalidBigraph(format!(
                "left side {m1} exceeds 64 (bitmask representation)"
            )));
        }
        let mask = if m1 == 64 { u64::MAX } else { (1u64 << m1) - 1 };
        if columns.iter().any(|&c| c & !mask != 0) {
            return Err(Error::InvalidBigraph("column bit outside left range".into()));
        }
        let m2 = columns.len();
        let edge_count = columns.iter().map(|c| c.count_ones() as usize).sum();
        Ok(Bigraph {
            m1,
            m2,
            columns,
            edge_count,
        })
    }

    pub fn left(&self) -> usize {
        self.m1
    }

    pub fn right(&self) -> usize {
        self.m2
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.m1 || v >= self.m2 {
            return Err(Error::InvalidBigraph(format!(
                "edge ({u},{v}) outside [{}]x[{}]",
                self.m1, self.m2
            )));
        }
        if !self.has_edge(u, v) {
            self.columns[v] |= 1u64 << u;
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.m1 && v < self.m2 && self.columns[v] >> u & 1 == 1
    }

    /// Left-neighborhood of right vertex `v` as a bitmask.
    pub fn right_column(&self, v: usize) -> u64 {
        self.columns[v]
    }

    pub fn right_columns(&self) -> &[u64] {
        &self.columns
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for v in 0..self.m2 {
            let mut col = self.columns[v];
            while col != 0 {
                let u = col.trailing_zeros() as usize;
                out.push((u, v));
                col &= col - 1;
            }
        }
        out.sort_unstable();
        out
    }

    /// The associated graph on m1 + m2 vertices: left vertex u is adjacent to
    /// right vertex (m1 + v) iff (u,v) is an edge. Intended for small
    /// bigraphs.
    pub fn associated_graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::new(self.m1 + self.m2);
        for (u, v) in self.edges() {
            g.add_edge(u, self.m1 + v).expect("bigraph edge in range");
        }
        g
    }

    /// True if the associated graph is connected.
    pub fn is_connected(&self) -> bool {
        let g = self.associated_graph();
        let n = g.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !seen[v] && g.has_edge(u, v) {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// True if all right-vertex neighborhoods are pairwise distinct.
    pub fn right_neighborhoods_distinct(&self) -> bool {
        let mut cols = self.columns.clone();
        cols.sort_unstable();
        cols.windows(2).all(|w| w[0] != w[1])
    }

    /// True if no two vertices (on either side, across sides too) of the
    /// associated graph have the same neighborhood. Small bigraphs only.
    pub fn has_distinct_neighborhoods(&self) -> bool {
        let g = self.associated_graph();
        let n = g.n();
        for a in 0..n {
            for b in (a + 1)..n {
                if (0..n).all(|w| g.has_edge(a, w) == g.has_edge(b, w)) {
                    return false;
                }
            }
        }
        true
    }

    /// Parses the text format: header "m1 m2 e" then e lines "u v" (1-based).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut tok = text.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            tok.next()
                .ok_or_else(|| Error::Parse(format!("missing {what}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
        };
        let m1 = next("left count")?;
        let m2 = next("right count")?;
        let e = next("edge count")?;
        let mut edges = Vec::with_capacity(e);
        for _ in 0..e {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            if u == 0 || v == 0 {
                return Err(Error::Parse("vertices are 1-based".into()));
            }
            edges.push((u - 1, v - 1));
        }
        Bigraph::from_edges(m1, m2, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.m1, self.m2, self.edge_count);
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_in_bounds() {
        let mut b = Bigraph::new(2, 3).unwrap();
        assert!(b.add_edge(2, 0).is_err());
        assert!(b.add_edge(1, 2).is_ok());
        assert!(b.has_edge(1, 2));
    }

    #[test]
    fn no_multiplicity() {
        let mut b = Bigraph::new(2, 2).unwrap();
        b.add_edge(0, 1).unwrap();
        b.add_edge(0, 1).unwrap();
        assert_eq!(b.edge_count(), 1);
    }

    #[test]
    fn text_round_trip() {
        let b = Bigraph::from_edges(2, 3, &[(0, 0), (1, 2)]).unwrap();
        let again = Bigraph::from_text(&b.to_text()).unwrap();
        assert_eq!(b, again);
    }

    #[test]
    fn associated_graph_of_single_edge() {
        let b = Bigraph::from_edges(1, 1, &[(0, 0)]).unwrap();
        let g = b.associated_graph();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
        assert!(b.is_connected());
    }
}
