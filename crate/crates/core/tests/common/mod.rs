#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stardecomp::graph6::parse_graph6;
use stardecomp::{edge, Certificate, DoubleStar, Edge, Graph};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn catalog(name: &str) -> Vec<Graph> {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture readable");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).expect("fixture parses"))
        .collect()
}

pub fn cubic_catalog_up_to(max_n: usize) -> Vec<Graph> {
    [4, 6, 8, 10, 12]
        .into_iter()
        .filter(|&n| n <= max_n)
        .flat_map(|n| catalog(&format!("cubic_connected_{n}.g6")))
        .collect()
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

pub fn brute_alpha(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| g.is_independent(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn dominates(g: &Graph, set: &[usize]) -> bool {
    let mut hit = vec![false; g.order()];
    for &v in set {
        hit[v] = true;
        for &w in g.neighbors(v) {
            hit[w] = true;
        }
    }
    hit.into_iter().all(|h| h)
}

pub fn brute_gamma(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| dominates(g, s))
        .map(|s| s.len())
        .min()
        .unwrap()
}

/// Maximum matching size by recursion on the lowest unmatched vertex.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut Vec<bool>, from: usize) -> usize {
        let Some(v) = (from..g.order()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, &mut vec![false; g.order()], 0)
}

/// Every `S_{1,2}` decomposition of a cubic graph with the given centers,
/// found by choosing a spine and a spine leaf for each center.
pub fn all_decompositions_with_centers(g: &Graph, centers: &[usize]) -> Vec<Certificate> {
    let choices: Vec<Vec<DoubleStar>> = centers
        .iter()
        .map(|&c| {
            let mut stars = Vec::new();
            for &spine in g.neighbors(c) {
                for &leaf in g.neighbors(spine) {
                    if leaf == c || g.has_edge(c, leaf) {
                        continue;
                    }
                    let mut center_leaves: Vec<usize> = g
                        .neighbors(c)
                        .iter()
                        .copied()
                        .filter(|&x| x != spine)
                        .collect();
                    center_leaves.sort_unstable();
                    stars.push(DoubleStar {
                        center: c,
                        spine,
                        spine_leaf: leaf,
                        center_leaves,
                    });
                }
            }
            stars
        })
        .collect();
    let mut found = Vec::new();
    let mut pick = Vec::new();
    product(g, &choices, &mut pick, &mut found);
    found
}

fn product(
    g: &Graph,
    choices: &[Vec<DoubleStar>],
    pick: &mut Vec<DoubleStar>,
    found: &mut Vec<Certificate>,
) {
    if pick.len() == choices.len() {
        let mut edges: Vec<Edge> = pick.iter().flat_map(|s| s.edges()).collect();
        edges.sort_unstable();
        if edges == g.edges() {
            found.push(Certificate {
                order: g.order(),
                r: 3,
                stars: pick.clone(),
            });
        }
        return;
    }
    for star in &choices[pick.len()] {
        let clash = star
            .edges()
            .iter()
            .any(|e| pick.iter().any(|p| p.edges().contains(e)));
        if clash {
            continue;
        }
        pick.push(star.clone());
        product(g, choices, pick, found);
        pick.pop();
    }
}

/// Moves one edge from star `from` to star `to`.
pub fn move_edge(c: &Certificate, from: usize, which: usize, to: usize) -> Vec<Vec<Edge>> {
    let mut groups = c.edge_groups();
    let e = groups[from].remove(which);
    groups[to].push(e);
    groups
}

/// An `r`-regular graph built around the center set `0..k`: the other
/// vertices form disjoint cycles plus isolated vertices, and all remaining
/// degree goes to the centers, avoiding parallel edges and triangles at
/// centers. Returns `None` when the greedy pairing gets stuck.
pub fn planted_cycling(n: usize, r: usize, seed: u64) -> Option<(Graph, Vec<usize>)> {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = r * n / (2 * (r + 1));
    let rest = n - k;
    let on_cycles = (r * rest - r * k) / 2;
    if on_cycles < 3 || on_cycles > rest {
        return None;
    }
    let mut cycle_vertices: Vec<usize> = (k..n).collect();
    cycle_vertices.shuffle(&mut rng);
    cycle_vertices.truncate(on_cycles);
    let mut edges = Vec::new();
    let mut start = 0;
    while start < on_cycles {
        let left = on_cycles - start;
        let len = if left < 6 {
            left
        } else {
            rng.gen_range(3..=left - 3)
        };
        let cyc = &cycle_vertices[start..start + len];
        for i in 0..len {
            edges.push(edge(cyc[i], cyc[(i + 1) % len]));
        }
        start += len;
    }
    let mut deg = vec![0; n];
    for &(a, b) in &edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut stubs: Vec<usize> = (k..n)
        .flat_map(|v| std::iter::repeat_n(v, r - deg[v]))
        .collect();
    stubs.shuffle(&mut rng);
    let mut capacity = vec![r; k];
    for v in stubs {
        let open: Vec<usize> = (0..k)
            .filter(|&c| {
                capacity[c] > 0
                    && !adj[v].contains(&c)
                    && !adj[v].iter().any(|&w| adj[w].contains(&c))
            })
            .collect();
        let &c = open.choose(&mut rng)?;
        capacity[c] -= 1;
        adj[v].push(c);
        adj[c].push(v);
        edges.push(edge(c, v));
    }
    Some((Graph::from_edges(n, edges).ok()?, (0..k).collect()))
}
