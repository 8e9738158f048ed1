use serde::Serialize;

use super::independence::full_mask;
use crate::error::Result;
use crate::graph::{mask_to_vec, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominatingWitness {
    pub size: usize,
    pub set: Vec<usize>,
}

/// Exact domination number with a witness, for `n <= 64`.
///
/// Branches on the lowest undominated vertex `u`: some member of `N[u]` must
/// be chosen, tried in order of decreasing new coverage. Earlier siblings are
/// forbidden in later branches. The bound counts how many of the largest
/// remaining coverages are needed to reach every undominated vertex.
pub fn domination_number(g: &Graph) -> Result<DominatingWitness> {
    let n = g.order();
    let closed: Vec<u64> = g
        .neighbor_masks()?
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | (1 << v))
        .collect();
    let full = full_mask(n);
    let greedy = greedy_dominating(&closed, full);
    let mut solver = DomSolver {
        closed: &closed,
        full,
        best: greedy.count_ones() as usize,
        best_set: greedy,
    };
    solver.search(0, 0, 0);
    Ok(DominatingWitness {
        size: solver.best,
        set: mask_to_vec(solver.best_set),
    })
}

fn greedy_dominating(closed: &[u64], full: u64) -> u64 {
    let mut chosen = 0;
    let mut dominated = 0;
    while dominated != full {
        let undominated = full & !dominated;
        let v = (0..closed.len())
            .max_by_key(|&v| ((closed[v] & undominated).count_ones(), std::cmp::Reverse(v)))
            .expect("non-empty graph while vertices remain undominated");
        chosen |= 1 << v;
        dominated |= closed[v];
    }
    chosen
}

struct DomSolver<'a> {
    closed: &'a [u64],
    full: u64,
    best: usize,
    best_set: u64,
}

impl DomSolver<'_> {
    fn search(&mut self, chosen: u64, dominated: u64, forbidden: u64) {
        let count = chosen.count_ones() as usize;
        if dominated == self.full {
            if count < self.best {
                self.best = count;
                self.best_set = chosen;
            }
            return;
        }
        let undominated = self.full & !dominated;
        if count + self.lower_bound(undominated, forbidden | chosen) >= self.best {
            return;
        }
        let u = undominated.trailing_zeros() as usize;
        let mut options: Vec<(u32, usize)> = mask_to_vec(self.closed[u] & !forbidden & !chosen)
            .into_iter()
            .map(|w| ((self.closed[w] & undominated).count_ones(), w))
            .collect();
        options.sort_by_key(|&(gain, w)| (std::cmp::Reverse(gain), w));
        let mut banned = forbidden;
        for (_, w) in options {
            self.search(chosen | (1 << w), dominated | self.closed[w], banned);
            banned |= 1 << w;
        }
    }

    fn lower_bound(&self, undominated: u64, unavailable: u64) -> usize {
        let need = undominated.count_ones();
        let mut gains: Vec<u32> = mask_to_vec(self.full & !unavailable)
            .into_iter()
            .map(|w| (self.closed[w] & undominated).count_ones())
            .filter(|&g| g > 0)
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0;
        for (i, g) in gains.into_iter().enumerate() {
            covered += g;
            if covered >= need {
                return i + 1;
            }
        }
        // the remaining vertices cannot all be dominated in this branch
        usize::MAX / 2
    }
}
