use serde::Serialize;

use crate::error::Result;
use crate::graph::{mask_to_vec, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceWitness {
    pub size: usize,
    pub set: Vec<usize>,
}

/// Exact independence number with a witness, for `n <= 64`.
///
/// Branch and bound over bitmasks: vertices of degree at most one in the
/// remaining candidate set are taken greedily, otherwise the candidate of
/// largest remaining degree (smallest index on ties) is branched on, include
/// first. A greedy clique cover bounds each subtree. The witness is the first
/// maximum set met in this fixed order.
pub fn independence_number(g: &Graph) -> Result<IndependenceWitness> {
    let nb = g.neighbor_masks()?;
    let all = full_mask(g.order());
    let (best, set) = max_independent_within(&nb, all);
    Ok(IndependenceWitness {
        size: best,
        set: mask_to_vec(set),
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Maximum independent subset of `within`, as (size, mask).
pub(crate) fn max_independent_within(nb: &[u64], within: u64) -> (usize, u64) {
    let greedy = greedy_independent(nb, within);
    let mut solver = MisSolver {
        nb,
        best: greedy.count_ones() as usize,
        best_set: greedy,
    };
    solver.search(0, within);
    (solver.best, solver.best_set)
}

fn greedy_independent(nb: &[u64], mut cand: u64) -> u64 {
    let mut chosen = 0;
    while cand != 0 {
        let v = min_degree_vertex(nb, cand);
        chosen |= 1 << v;
        cand &= !(nb[v] | (1 << v));
    }
    chosen
}

fn min_degree_vertex(nb: &[u64], cand: u64) -> usize {
    let mut best = (u32::MAX, 0);
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (nb[v] & cand).count_ones();
        if d < best.0 {
            best = (d, v);
        }
    }
    best.1
}

struct MisSolver<'a> {
    nb: &'a [u64],
    best: usize,
    best_set: u64,
}

impl MisSolver<'_> {
    fn search(&mut self, mut chosen: u64, mut cand: u64) {
        // forced moves: a vertex with at most one candidate neighbor is always
        // part of some maximum independent set of the candidate subgraph
        loop {
            let mut forced = None;
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (self.nb[v] & cand).count_ones() <= 1 {
                    forced = Some(v);
                    break;
                }
            }
            match forced {
                Some(v) => {
                    chosen |= 1 << v;
                    cand &= !(self.nb[v] | (1 << v));
                }
                None => break,
            }
        }
        let size = chosen.count_ones() as usize;
        if cand == 0 {
            if size > self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return;
        }
        if size + clique_cover_bound(self.nb, cand) <= self.best {
            return;
        }
        let v = max_degree_vertex(self.nb, cand);
        self.search(chosen | (1 << v), cand & !(self.nb[v] | (1 << v)));
        self.search(chosen, cand & !(1 << v));
    }
}

fn max_degree_vertex(nb: &[u64], cand: u64) -> usize {
    let mut best = (0, 0);
    let mut rest = cand;
    let mut first = true;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (nb[v] & cand).count_ones();
        if first || d > best.0 {
            best = (d, v);
            first = false;
        }
    }
    best.1
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// its independence number.
fn clique_cover_bound(nb: &[u64], cand: u64) -> usize {
    let mut cliques: Vec<u64> = Vec::new();
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        match cliques.iter_mut().find(|c| **c & !nb[v] == 0) {
            Some(c) => *c |= 1 << v,
            None => cliques.push(1 << v),
        }
    }
    cliques.len()
}

/// Lexicographic stream of the independent `k`-subsets of a graph.
pub struct IndependentSets {
    nb: Vec<u64>,
    k: usize,
    chosen: Vec<usize>,
    // cands[d]: vertices still to try at depth d
    cands: Vec<u64>,
    done: bool,
}

/// Every independent set of size exactly `k`, each once, in lexicographic
/// order of the sorted vertex lists. `n <= 64`.
pub fn enumerate_independent_sets(g: &Graph, k: usize) -> Result<IndependentSets> {
    let nb = g.neighbor_masks()?;
    let all = full_mask(g.order());
    Ok(IndependentSets {
        nb,
        k,
        chosen: Vec::with_capacity(k),
        cands: vec![all],
        done: k > g.order(),
    })
}

impl Iterator for IndependentSets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.k == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        loop {
            let depth = self.chosen.len();
            if depth == self.k {
                let out = self.chosen.clone();
                self.chosen.pop();
                self.cands.pop();
                return Some(out);
            }
            let cand = self.cands[depth];
            if (cand.count_ones() as usize) < self.k - depth {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.cands.pop();
                self.chosen.pop();
                continue;
            }
            let v = cand.trailing_zeros() as usize;
            let remaining = cand & !(1 << v);
            self.cands[depth] = remaining;
            self.chosen.push(v);
            self.cands.push(remaining & !self.nb[v]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(independence_number(&Graph::complete(4)).unwrap().size, 1);
        assert_eq!(independence_number(&Graph::cycle(8)).unwrap().size, 4);
        assert_eq!(independence_number(&Graph::hypercube(3)).unwrap().size, 4);
        assert_eq!(independence_number(&Graph::petersen()).unwrap().size, 4);
        assert_eq!(
            independence_number(&Graph::empty(5)).unwrap().set,
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(independence_number(&Graph::empty(0)).unwrap().size, 0);
    }

    #[test]
    fn witness_is_independent() {
        let g = Graph::petersen();
        let w = independence_number(&g).unwrap();
        assert!(g.is_independent(&w.set));
        assert_eq!(w.set.len(), w.size);
        assert_eq!(w, independence_number(&g).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let k4 = Graph::complete(4);
        let singles: Vec<_> = enumerate_independent_sets(&k4, 1).unwrap().collect();
        assert_eq!(singles, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(enumerate_independent_sets(&k4, 2).unwrap().count(), 0);
        let pairs: Vec<_> = enumerate_independent_sets(&Graph::cycle(5), 2)
            .unwrap()
            .collect();
        assert_eq!(
            pairs,
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
        );
        assert_eq!(
            enumerate_independent_sets(&k4, 0)
                .unwrap()
                .collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(enumerate_independent_sets(&k4, 5).unwrap().count(), 0);
    }

    #[test]
    fn scale_cap() {
        assert!(independence_number(&Graph::cycle(65)).is_err());
        assert!(enumerate_independent_sets(&Graph::cycle(65), 2).is_err());
        assert_eq!(independence_number(&Graph::cycle(64)).unwrap().size, 32);
    }
}
