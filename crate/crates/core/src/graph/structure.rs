use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ComponentKind {
    IsolatedVertex,
    /// A tree with exactly two leaves (a single edge included).
    Path,
    /// Connected and 2-regular.
    Cycle,
    /// Any other tree.
    Tree,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
    /// Vertices of degree 3 inside the component.
    pub count3: usize,
}

impl ComponentInfo {
    /// Isolated vertices and paths count as trees.
    pub fn is_tree(&self) -> bool {
        matches!(
            self.kind,
            ComponentKind::IsolatedVertex | ComponentKind::Path | ComponentKind::Tree
        )
    }
}

impl Graph {
    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `G \ S`: the subgraph induced by the vertices outside `removed`, with
    /// an order-preserving old-to-new index map (`None` for deleted vertices).
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, Vec<Option<usize>>)> {
        let mut gone = vec![false; self.order()];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&v| !gone[v]).collect();
        let mut map = vec![None; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        let (sub, _) = self.induced(&keep);
        Ok((sub, map))
    }

    pub fn classify_components(&self) -> Vec<ComponentInfo> {
        self.connected_components()
            .into_iter()
            .map(|vertices| {
                let degrees: Vec<usize> = vertices.iter().map(|&v| self.degree(v)).collect();
                let edges = degrees.iter().sum::<usize>() / 2;
                let kind = if vertices.len() == 1 {
                    ComponentKind::IsolatedVertex
                } else if edges + 1 == vertices.len() {
                    if degrees.iter().all(|&d| d <= 2) {
                        ComponentKind::Path
                    } else {
                        ComponentKind::Tree
                    }
                } else if degrees.iter().all(|&d| d == 2) {
                    ComponentKind::Cycle
                } else {
                    ComponentKind::Other
                };
                let count3 = degrees.iter().filter(|&&d| d == 3).count();
                ComponentInfo {
                    vertices,
                    kind,
                    count3,
                }
            })
            .collect()
    }

    /// Whether some cycle of length exactly `len` passes through `v`.
    pub fn in_cycle_of_length(&self, v: usize, len: usize) -> Result<bool> {
        self.check_vertex(v)?;
        if len < 3 {
            return Ok(false);
        }
        let mut on_path = vec![false; self.order()];
        on_path[v] = true;
        Ok(self.extend_path(v, v, len - 1, &mut on_path))
    }

    // Simple paths from `start` with `remaining` more edges before closing at `start`.
    fn extend_path(&self, start: usize, at: usize, remaining: usize, on_path: &mut [bool]) -> bool {
        if remaining == 0 {
            return self.has_edge(at, start);
        }
        for &w in self.neighbors(at) {
            // only the last step may return to start, which the closing check handles
            if on_path[w] {
                continue;
            }
            on_path[w] = true;
            let found = self.extend_path(start, w, remaining - 1, on_path);
            on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }

    /// Cycle test restricted to the lengths 3, 5 and 7.
    pub fn in_short_odd_cycle(&self, v: usize, len: usize) -> Result<bool> {
        if !matches!(len, 3 | 5 | 7) {
            return Err(Error::PreconditionViolated(format!(
                "cycle length {len} is not one of 3, 5, 7"
            )));
        }
        self.in_cycle_of_length(v, len)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(a, b)| {
            let (na, nb) = (self.neighbors(a), self.neighbors(b));
            !na.iter().any(|w| nb.binary_search(w).is_ok())
        })
    }

    /// Two-coloring `(A, B)`; within each component the smallest vertex goes
    /// to `A`. `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = color[v]?;
                for &w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| color[v] == Some(false));
        Some((a, b))
    }

    /// Exact vertex connectivity. Complete graphs give `n - 1`, disconnected
    /// graphs and graphs with fewer than two vertices give 0.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.order();
        if n <= 1 || !self.is_connected() {
            return 0;
        }
        let mut best = (0..n).map(|v| self.degree(v)).min().unwrap_or(0);
        // some vertex among the first best + 1 lies outside a minimum separator
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    best = best.min(self.local_connectivity(i, j, best));
                }
            }
            i += 1;
        }
        best
    }

    // Internally vertex-disjoint s-t paths, counting stops at `cap`.
    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // vertex v splits into in = 2v and out = 2v + 1 joined by a unit arc
        let mut net = UnitNetwork::new(2 * self.order());
        for v in 0..self.order() {
            let inner = if v == s || v == t { cap + 1 } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, inner);
            for &w in self.neighbors(v) {
                net.add_arc(2 * v + 1, 2 * w, 1);
            }
        }
        let mut flow = 0;
        while flow < cap && net.augment(2 * s + 1, 2 * t) {
            flow += 1;
        }
        flow
    }
}

struct UnitNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl UnitNetwork {
    fn new(nodes: usize) -> Self {
        UnitNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, a: usize, b: usize, c: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.head.len()];
        let mut queue = VecDeque::from([source]);
        let mut reached = vec![false; self.head.len()];
        reached[source] = true;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &arc in &self.head[x] {
                let y = self.to[arc];
                if self.cap[arc] > 0 && !reached[y] {
                    reached[y] = true;
                    via[y] = arc;
                    queue.push_back(y);
                }
            }
        }
        if !reached[sink] {
            return false;
        }
        let mut y = sink;
        while y != source {
            let arc = via[y];
            self.cap[arc] -= 1;
            self.cap[arc ^ 1] += 1;
            y = self.to[arc ^ 1];
        }
        true
    }
}
