use crate::error::{Error, Result};

/// Largest left side accepted by the exhaustive Hall check.
pub const HALL_EXHAUSTIVE_MAX: usize = 24;

/// A bipartite graph given by left-to-right adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Repeated `(left, right)` pairs are merged.
    pub fn new(
        left: usize,
        right: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); left];
        for (l, r) in edges {
            if l >= left || r >= right {
                return Err(Error::InvalidEdge(format!(
                    "pair ({l}, {r}) outside a {left}x{right} bipartite graph"
                )));
            }
            adj[l].push(r);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(BipartiteGraph { right, adj })
    }

    pub fn left_len(&self) -> usize {
        self.adj.len()
    }

    pub fn right_len(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adj[left]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

/// A left subset `X` with `|N(X)| < |X|`, smallest first and then
/// lexicographically least, found by exhaustive subset search. `None` exactly
/// when some matching saturates the left side.
pub fn hall_violator(h: &BipartiteGraph) -> Result<Option<Vec<usize>>> {
    let left = h.left_len();
    if left > HALL_EXHAUSTIVE_MAX {
        return Err(Error::ScaleExceeded {
            order: left,
            cap: HALL_EXHAUSTIVE_MAX,
        });
    }
    let words = h.right.div_ceil(64).max(1);
    let rows: Vec<Vec<u64>> = h
        .adj
        .iter()
        .map(|list| {
            let mut row = vec![0u64; words];
            for &r in list {
                row[r / 64] |= 1 << (r % 64);
            }
            row
        })
        .collect();
    let mut search = SubsetSearch {
        rows: &rows,
        words,
        picked: Vec::new(),
        unions: vec![0; words * (left + 1)],
    };
    for k in 1..=left {
        if search.find(0, k) {
            return Ok(Some(search.picked));
        }
    }
    Ok(None)
}

struct SubsetSearch<'a> {
    rows: &'a [Vec<u64>],
    words: usize,
    picked: Vec<usize>,
    // unions[d * words..]: neighborhood of the first d picked vertices
    unions: Vec<u64>,
}

impl SubsetSearch<'_> {
    fn find(&mut self, start: usize, k: usize) -> bool {
        let depth = self.picked.len();
        let w = self.words;
        let covered: u32 = self.unions[depth * w..(depth + 1) * w]
            .iter()
            .map(|x| x.count_ones())
            .sum();
        // neighborhoods only grow, so no extension can fall below k
        if covered as usize >= k {
            return false;
        }
        if depth == k {
            return true;
        }
        for v in start..self.rows.len() {
            if self.rows.len() - v < k - depth {
                break;
            }
            for i in 0..w {
                self.unions[(depth + 1) * w + i] = self.unions[depth * w + i] | self.rows[v][i];
            }
            self.picked.push(v);
            if self.find(v + 1, k) {
                return true;
            }
            self.picked.pop();
        }
        false
    }
}
