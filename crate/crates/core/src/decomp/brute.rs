//! Edge-by-edge backtracking, independent of the center-set search.

use std::collections::HashMap;

use super::star::{Certificate, DoubleStar};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// Largest edge count the backtracking oracle accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 28;

/// Finds an `S_{1,r-1}` decomposition by repeatedly covering the smallest
/// uncovered edge with every double-star of uncovered edges through it.
pub fn brute_force_decompose(g: &Graph, r: usize) -> Result<Option<Certificate>> {
    if g.size() > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::ScaleExceeded {
            order: g.size(),
            cap: BRUTE_FORCE_MAX_EDGES,
        });
    }
    if r < 2 {
        return Err(Error::PreconditionViolated(format!(
            "r = {r} must be at least 2"
        )));
    }
    if !g.size().is_multiple_of(r + 1) {
        return Ok(None);
    }
    let edges = g.edges();
    let mut oracle = Backtrack {
        g,
        r,
        index: edges.iter().enumerate().map(|(i, &e)| (e, i)).collect(),
        edges,
        covered: vec![false; g.size()],
        stars: Vec::new(),
    };
    Ok(oracle.solve().then(|| Certificate {
        order: g.order(),
        r,
        stars: oracle.stars,
    }))
}

struct Backtrack<'a> {
    g: &'a Graph,
    r: usize,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
    covered: Vec<bool>,
    stars: Vec<DoubleStar>,
}

impl Backtrack<'_> {
    fn solve(&mut self) -> bool {
        let Some(first) = self.covered.iter().position(|&c| !c) else {
            return true;
        };
        let target = self.edges[first];
        for star in self.stars_through(target) {
            let ids: Vec<usize> = star.edges().iter().map(|e| self.index[e]).collect();
            ids.iter().for_each(|&i| self.covered[i] = true);
            self.stars.push(star);
            if self.solve() {
                return true;
            }
            self.stars.pop();
            ids.iter().for_each(|&i| self.covered[i] = false);
        }
        false
    }

    fn free(&self, a: usize, b: usize) -> bool {
        !self.covered[self.index[&edge(a, b)]]
    }

    fn free_neighbors(&self, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.free(v, w))
            .collect()
    }

    // every double-star of uncovered edges that contains `target`
    fn stars_through(&self, target: Edge) -> Vec<DoubleStar> {
        let (a, b) = target;
        let mut centers: Vec<usize> = [a, b]
            .into_iter()
            .chain(self.g.neighbors(a).iter().copied())
            .chain(self.g.neighbors(b).iter().copied())
            .collect();
        centers.sort_unstable();
        centers.dedup();

        let mut out = Vec::new();
        for center in centers {
            let around = self.free_neighbors(center);
            if around.len() < self.r {
                continue;
            }
            for &spine in &around {
                for spine_leaf in self.free_neighbors(spine) {
                    if spine_leaf == center {
                        continue;
                    }
                    let pool: Vec<usize> = around
                        .iter()
                        .copied()
                        .filter(|&x| x != spine && x != spine_leaf)
                        .collect();
                    for center_leaves in combinations(&pool, self.r - 1) {
                        let star = DoubleStar {
                            center,
                            spine,
                            spine_leaf,
                            center_leaves,
                        };
                        if star.edges().contains(&target) {
                            out.push(star);
                        }
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..=pool.len() - k {
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, pool[i]);
            out.push(rest);
        }
    }
    out
}
