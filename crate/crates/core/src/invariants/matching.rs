use std::collections::VecDeque;

use crate::graph::{edge, Edge, Graph};

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm, O(n^3)). Edges are canonical and sorted.
pub fn max_matching_general(g: &Graph) -> Vec<Edge> {
    let n = g.order();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut search = Blossom::new(g);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = search.augmenting_path(root, &mate) {
                search.flip(end, &mut mate);
            }
        }
    }
    let mut out: Vec<Edge> = (0..n)
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| edge(v, mate[v]))
        .collect();
    out.sort_unstable();
    out
}

struct Blossom<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            used: vec![false; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn augmenting_path(&mut self, root: usize, mate: &[usize]) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(v, to, mate);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn lca(&self, mut a: usize, mut b: usize, mate: &[usize]) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn flip(&self, mut v: usize, mate: &mut [usize]) {
        while v != NONE {
            let pv = self.parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
}
