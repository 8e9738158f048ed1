use super::star::{Certificate, DoubleStar};
use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::max_matching_general;

/// Decomposition of a cubic graph into paths on four vertices (`S_{1,1}`),
/// present exactly when the graph has a perfect matching.
///
/// Removing a perfect matching leaves disjoint cycles. Orienting each cycle
/// gives every vertex one outgoing edge, and each matching edge `uv` becomes
/// the path `out(u) - u - v - out(v)`.
pub fn s11_decompose(g: &Graph) -> Result<Option<Certificate>> {
    g.require_cubic()?;
    let n = g.order();
    let matching = max_matching_general(g);
    if 2 * matching.len() < n {
        return Ok(None);
    }
    let mut mate = vec![0; n];
    for &(a, b) in &matching {
        mate[a] = b;
        mate[b] = a;
    }
    let mate = &mate;
    let rest = |v: usize| {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| w != mate[v])
    };
    let mut succ = vec![usize::MAX; n];
    for start in 0..n {
        if succ[start] != usize::MAX {
            continue;
        }
        let mut prev = start;
        let mut at = rest(start).min().expect("cubic vertex keeps two edges");
        succ[start] = at;
        while at != start {
            let next = rest(at).find(|&w| w != prev).expect("2-regular remainder");
            succ[at] = next;
            prev = at;
            at = next;
        }
    }
    let stars = matching
        .iter()
        .map(|&(u, v)| DoubleStar {
            center: u,
            spine: v,
            spine_leaf: succ[v],
            center_leaves: vec![succ[u]],
        })
        .collect();
    Ok(Some(Certificate {
        order: n,
        r: 2,
        stars,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::verify_certificate;

    #[test]
    fn k4_and_petersen() {
        for g in [Graph::complete(4), Graph::petersen(), Graph::hypercube(3)] {
            let c = s11_decompose(&g).unwrap().expect("has a perfect matching");
            assert_eq!(verify_certificate(&g, &c, 2), Ok(()));
            assert_eq!(c.stars.len(), g.order() / 2);
        }
    }

    #[test]
    fn bridged_triangles_have_no_perfect_matching() {
        // hub 0 joined by bridges to three 5-vertex blocks; deleting the hub
        // leaves three odd components
        let mut edges = Vec::new();
        for block in 0..3 {
            let b = 1 + 5 * block;
            // K4 minus edge {b, b+1} plus vertex b+4 adjacent to b, b+1 and the hub
            edges.extend([
                (b, b + 2),
                (b, b + 3),
                (b + 1, b + 2),
                (b + 1, b + 3),
                (b + 2, b + 3),
            ]);
            edges.extend([(b + 4, b), (b + 4, b + 1), (0, b + 4)]);
        }
        let g = Graph::from_edges(16, edges).unwrap();
        assert!(g.is_cubic());
        assert_eq!(s11_decompose(&g).unwrap(), None);
    }

    #[test]
    fn requires_cubic() {
        assert!(s11_decompose(&Graph::cycle(6)).is_err());
    }
}
