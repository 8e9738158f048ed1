//! Simple undirected graphs on the vertex set `0..n`.

mod families;
mod generate;
pub mod graph6;
mod structure;

pub use generate::{random_cubic, random_regular};
pub use structure::{ComponentInfo, ComponentKind};

use crate::error::{Error, Result};

/// An undirected edge stored as `(smaller endpoint, larger endpoint)`.
pub type Edge = (usize, usize);

/// Canonical form of the edge `{a, b}`.
#[inline]
pub fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Largest order handled by the bitmask-based exact solvers.
pub const BITSET_MAX_ORDER: usize = 64;

/// A simple graph with sorted adjacency lists.
///
/// Immutable once built: every constructor rejects loops, repeated edges and
/// out-of-range endpoints, so adjacency is always symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    });
                }
            }
            if a == b {
                return Err(Error::InvalidEdge(format!("loop at vertex {a}")));
            }
            adj[a].push(b);
            adj[b].push(a);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge(format!("parallel edge {v}-{}", w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn is_r_regular(&self, r: usize) -> bool {
        self.adj.iter().all(|l| l.len() == r)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_r_regular(3)
    }

    /// Common degree of a regular graph, `None` if degrees differ or `n = 0`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.is_r_regular(d).then_some(d)
    }

    /// `N(X)`: union of the neighborhoods of `set`, sorted.
    pub fn neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .flat_map(|&v| self.adj[v].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &v in set {
            if v >= self.order() || member[v] {
                return false;
            }
            member[v] = true;
        }
        set.iter().all(|&v| self.adj[v].iter().all(|&w| !member[w]))
    }

    /// Induced subgraph on `vertices` (relabelled in the given order) plus the
    /// new-to-old vertex map.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            new_index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = new_index[w];
                if j != usize::MAX {
                    adj[i].push(j);
                    if i < j {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        (Graph { adj, m }, vertices.to_vec())
    }

    /// Adjacency bitmasks, one `u64` per vertex.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        self.require_bitset_scale()?;
        Ok(self
            .adj
            .iter()
            .map(|l| l.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
            .collect())
    }

    pub(crate) fn require_bitset_scale(&self) -> Result<()> {
        if self.order() > BITSET_MAX_ORDER {
            Err(Error::ScaleExceeded {
                order: self.order(),
                cap: BITSET_MAX_ORDER,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_cubic(&self) -> Result<()> {
        if self.is_cubic() {
            Ok(())
        } else {
            Err(Error::NotCubic)
        }
    }
}

pub(crate) fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}
