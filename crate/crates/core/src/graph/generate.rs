use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{edge, Graph};
use crate::error::{Error, Result};

/// Uniform random simple `r`-regular graph from the pairing model, rejecting
/// pairings that produce loops or repeated edges. Deterministic per seed.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if n <= r || (n * r) % 2 == 1 {
        return Err(Error::InvalidOrder(n, r + 1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: loop {
        points.shuffle(&mut rng);
        let mut edges: Vec<_> = points.chunks_exact(2).map(|p| edge(p[0], p[1])).collect();
        if edges.iter().any(|&(a, b)| a == b) {
            continue;
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                continue 'attempt;
            }
        }
        return Graph::from_edges(n, edges);
    }
}

/// Random cubic graph on an even number `n >= 4` of vertices.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidOrder(n, 4));
    }
    random_regular(n, 3, seed)
}
