use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::invariants::BipartiteGraph;

/// Candidate set of star centers, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CenterSet(Vec<usize>);

impl CenterSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        CenterSet(v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub(crate) fn membership(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }
}

impl From<Vec<usize>> for CenterSet {
    fn from(v: Vec<usize>) -> Self {
        CenterSet::new(v)
    }
}

/// The bipartite graph `H = (S, L)`: centers against the edges of `G \ S`.
///
/// `graph` links a center to every edge sharing an endpoint with one of its
/// neighbors. When a center is adjacent to *both* endpoints of such an edge,
/// adding it to the center's claw closes a triangle rather than forming a
/// double-star; `admissible` drops exactly those pairs and is what the
/// decomposition routines match on. The two coincide whenever no center lies
/// on a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxBipartite {
    pub left: Vec<usize>,
    pub right: Vec<Edge>,
    pub graph: BipartiteGraph,
    pub admissible: BipartiteGraph,
}

impl AuxBipartite {
    /// Left index pairs that close a triangle with their center.
    pub fn triangle_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.left.len())
            .flat_map(|i| {
                self.graph
                    .neighbors(i)
                    .iter()
                    .filter(move |j| self.admissible.neighbors(i).binary_search(j).is_err())
                    .map(move |&j| (i, j))
            })
            .collect()
    }
}

pub fn build_aux(g: &Graph, s: &CenterSet) -> Result<AuxBipartite> {
    for &v in s.vertices() {
        g.check_vertex(v)?;
    }
    if !g.is_independent(s.vertices()) {
        return Err(Error::NotIndependent);
    }
    let in_s = s.membership(g.order());
    let right: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| !in_s[a] && !in_s[b])
        .collect();
    let index: HashMap<Edge, usize> = right.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let mut literal = Vec::new();
    let mut admissible = Vec::new();
    for (i, &c) in s.vertices().iter().enumerate() {
        let mut seen = Vec::new();
        for &x in g.neighbors(c) {
            for &y in g.neighbors(x) {
                if y == c || in_s[y] {
                    continue;
                }
                let j = index[&edge(x, y)];
                if seen.contains(&j) {
                    continue;
                }
                seen.push(j);
                literal.push((i, j));
                if !g.has_edge(c, y) {
                    admissible.push((i, j));
                }
            }
        }
    }
    Ok(AuxBipartite {
        left: s.vertices().to_vec(),
        right: right.clone(),
        graph: BipartiteGraph::new(s.len(), right.len(), literal)?,
        admissible: BipartiteGraph::new(s.len(), right.len(), admissible)?,
    })
}

/// Maximum matching of a bipartite graph as `(left, right)` pairs sorted by
/// left index (Hopcroft-Karp).
pub fn hopcroft_karp(h: &BipartiteGraph) -> Vec<(usize, usize)> {
    const FREE: usize = usize::MAX;
    let left = h.left_len();
    let mut mate_left = vec![FREE; left];
    let mut mate_right = vec![FREE; h.right_len()];
    let mut dist = vec![usize::MAX; left];

    loop {
        // BFS layering from the free left vertices
        let mut queue = VecDeque::new();
        for l in 0..left {
            if mate_left[l] == FREE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut reachable_free = false;
        while let Some(l) = queue.pop_front() {
            for &r in h.neighbors(l) {
                match mate_right[r] {
                    FREE => reachable_free = true,
                    next if dist[next] == usize::MAX => {
                        dist[next] = dist[l] + 1;
                        queue.push_back(next);
                    }
                    _ => {}
                }
            }
        }
        if !reachable_free {
            break;
        }
        for l in 0..left {
            if mate_left[l] == FREE {
                augment(h, l, &mut mate_left, &mut mate_right, &mut dist);
            }
        }
    }
    (0..left)
        .filter(|&l| mate_left[l] != FREE)
        .map(|l| (l, mate_left[l]))
        .collect()
}

fn augment(
    h: &BipartiteGraph,
    l: usize,
    mate_left: &mut [usize],
    mate_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &r in h.neighbors(l) {
        let next = mate_right[r];
        let ok = next == usize::MAX
            || (dist[next] == dist[l].wrapping_add(1)
                && augment(h, next, mate_left, mate_right, dist));
        if ok {
            mate_left[l] = r;
            mate_right[r] = l;
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}
