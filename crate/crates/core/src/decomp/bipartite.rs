//! Checks specific to cubic bipartite graphs: the domination criterion and
//! the matching criterion between a center set `S ⊆ A` and `N(A \ S)`.

use serde::Serialize;

use super::aux::{hopcroft_karp, CenterSet};
use super::search::{center_count, decompose_with_centers};
use super::star::{Certificate, DoubleStar};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{domination_number, BipartiteGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationCheck {
    pub gamma: usize,
    pub gamma_is_n_over_4: bool,
    pub part_a: Vec<usize>,
    /// Minimum dominating set used for the construction.
    pub dominating_set: Vec<usize>,
    /// `(|D ∩ A|, |D ∩ B|)`.
    pub split: (usize, usize),
    /// A set `S ⊆ A` for which both decompositions below exist.
    pub witness_s: Option<CenterSet>,
    /// Certificates with center sets `S` and `N(A \ S)`.
    pub both_decompositions: Option<(Certificate, Certificate)>,
}

fn bipartite_cubic_parts(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    g.require_cubic()?;
    g.bipartition().ok_or(Error::NotBipartite)
}

fn outside(a: &[usize], s: &CenterSet) -> Vec<usize> {
    a.iter().copied().filter(|&v| !s.contains(v)).collect()
}

/// Both decompositions for `S ⊆ A`, if they exist.
fn double_decomposition(
    g: &Graph,
    a: &[usize],
    s: &CenterSet,
) -> Result<Option<(Certificate, Certificate)>> {
    let k = center_count(g.order(), 3);
    if k != Some(s.len()) {
        return Ok(None);
    }
    let Some(first) = decompose_with_centers(g, s, 3)? else {
        return Ok(None);
    };
    let t = CenterSet::new(g.neighborhood(&outside(a, s)));
    if k != Some(t.len()) {
        return Ok(None);
    }
    Ok(decompose_with_centers(g, &t, 3)?.map(|second| (first, second)))
}

/// Computes `gamma` exactly and relates `gamma = n/4` to the existence of
/// `S ⊆ A`, `|S| = 3n/8`, with decompositions centered at both `S` and
/// `N(A \ S)`.
///
/// When `gamma = n/4` the witness is built from a minimum dominating set `D`:
/// `S = N(D ∩ B)`, and then `N(A \ S) = N(D ∩ A)`. Otherwise every
/// `S ⊆ A` of size `3n/8` is tried; finding one would contradict the
/// equivalence and is reported through `witness_s`.
pub fn bipartite_domination_check(g: &Graph) -> Result<DominationCheck> {
    let (a, _) = bipartite_cubic_parts(g)?;
    let n = g.order();
    if !n.is_multiple_of(8) {
        return Err(Error::BadOrder(n));
    }
    let d = domination_number(g)?;
    let in_a = |v: &usize| a.binary_search(v).is_ok();
    let d_a: Vec<usize> = d.set.iter().copied().filter(in_a).collect();
    let d_b: Vec<usize> = d.set.iter().copied().filter(|v| !in_a(v)).collect();
    let gamma_is_n_over_4 = 4 * d.size == n;

    let mut witness_s = None;
    let mut both = None;
    if gamma_is_n_over_4 {
        let s = CenterSet::new(g.neighborhood(&d_b));
        both = double_decomposition(g, &a, &s)?;
        witness_s = Some(s);
    } else {
        let k = 3 * n / 8;
        for pick in super::brute::combinations(&a, k) {
            let s = CenterSet::new(pick);
            if let Some(pair) = double_decomposition(g, &a, &s)? {
                witness_s = Some(s);
                both = Some(pair);
                break;
            }
        }
    }
    Ok(DominationCheck {
        gamma: d.size,
        gamma_is_n_over_4,
        split: (d_a.len(), d_b.len()),
        part_a: a,
        dominating_set: d.set,
        witness_s,
        both_decompositions: both,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingCondition {
    pub decomposable: bool,
    /// Perfect matching between `S` and `N(A \ S)` as vertex pairs.
    pub matching: Option<Vec<(usize, usize)>>,
    #[serde(skip)]
    pub certificate: Option<Certificate>,
}

/// Decides `(S_{1,2}, S)`-decomposability of a cubic bipartite graph for
/// `S ⊆ A`, `|S| = 3n/8`, via a perfect matching between `S` and
/// `N(A \ S)` using edges of the graph. Each matched pair `(u, v)` yields the
/// star centered at `u` with spine `v`, whose spine leaf is the unique
/// neighbor of `v` in `A \ S`.
pub fn bipartite_matching_condition(
    g: &Graph,
    part_a: &[usize],
    s: &CenterSet,
) -> Result<MatchingCondition> {
    g.require_cubic()?;
    let n = g.order();
    let mut in_a = vec![false; n];
    for &v in part_a {
        g.check_vertex(v)?;
        in_a[v] = true;
    }
    if g.edges().iter().any(|&(x, y)| in_a[x] == in_a[y]) {
        return Err(Error::NotBipartite);
    }
    if s.vertices().iter().any(|&v| v >= n || !in_a[v]) {
        return Err(Error::BadCenterSet(
            "center set is not contained in A".into(),
        ));
    }
    if center_count(n, 3) != Some(s.len()) {
        return Err(Error::BadCenterSet(format!(
            "|S| = {} is not 3n/8 for n = {n}",
            s.len()
        )));
    }
    let rest_a: Vec<usize> = part_a.iter().copied().filter(|&v| !s.contains(v)).collect();
    let targets = g.neighborhood(&rest_a);
    let no = MatchingCondition {
        decomposable: false,
        matching: None,
        certificate: None,
    };
    if targets.len() != s.len() {
        return Ok(no);
    }
    let pairs = s.vertices().iter().enumerate().flat_map(|(i, &u)| {
        targets
            .iter()
            .enumerate()
            .filter(move |&(_, &v)| g.has_edge(u, v))
            .map(move |(j, _)| (i, j))
    });
    let h = BipartiteGraph::new(s.len(), targets.len(), pairs)?;
    let matching = hopcroft_karp(&h);
    if matching.len() < s.len() {
        return Ok(no);
    }
    let in_rest = |v: usize| in_a[v] && !s.contains(v);
    let stars = matching
        .iter()
        .map(|&(i, j)| {
            let (u, v) = (s.vertices()[i], targets[j]);
            let w = *g
                .neighbors(v)
                .iter()
                .find(|&&w| in_rest(w))
                .expect("every vertex of N(A \\ S) has a neighbor in A \\ S");
            DoubleStar {
                center: u,
                spine: v,
                spine_leaf: w,
                center_leaves: g.neighbors(u).iter().copied().filter(|&x| x != v).collect(),
            }
        })
        .collect();
    Ok(MatchingCondition {
        decomposable: true,
        matching: Some(
            matching
                .iter()
                .map(|&(i, j)| (s.vertices()[i], targets[j]))
                .collect(),
        ),
        certificate: Some(Certificate {
            order: n,
            r: 3,
            stars,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::verify_certificate;

    #[test]
    fn q3_domination() {
        let q3 = Graph::hypercube(3);
        let check = bipartite_domination_check(&q3).unwrap();
        assert_eq!(check.gamma, 2);
        assert!(check.gamma_is_n_over_4);
        assert_eq!(check.split, (1, 1));
        let (c1, c2) = check.both_decompositions.expect("both decompositions");
        assert_eq!(verify_certificate(&q3, &c1, 3), Ok(()));
        assert_eq!(verify_certificate(&q3, &c2, 3), Ok(()));
        let s = check.witness_s.unwrap();
        assert!(s.vertices().iter().all(|v| check.part_a.contains(v)));
    }

    #[test]
    fn domination_preconditions() {
        assert_eq!(
            bipartite_domination_check(&Graph::complete(4)).unwrap_err(),
            Error::NotBipartite
        );
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(
            bipartite_domination_check(&k33).unwrap_err(),
            Error::BadOrder(6)
        );
        assert_eq!(
            bipartite_domination_check(&Graph::cycle(8)).unwrap_err(),
            Error::NotCubic
        );
    }

    #[test]
    fn shared_neighbor_blocks_matching() {
        // Q3 with A = even vertices; S = {0, 3, 5} leaves A \ S = {6}
        let q3 = Graph::hypercube(3);
        let a = vec![0, 3, 5, 6];
        let ok = bipartite_matching_condition(&q3, &a, &CenterSet::new([0, 3, 5])).unwrap();
        assert!(ok.decomposable);
        assert_eq!(
            verify_certificate(&q3, ok.certificate.as_ref().unwrap(), 3),
            Ok(())
        );
        // in two copies of Q3, leave out two A-vertices with common neighbors
        let two = q3.disjoint_union(&q3);
        let (a2, _) = two.bipartition().unwrap();
        // remove 0 and 3 from the first copy (common neighbors 1 and 2)
        let s: Vec<usize> = a2.iter().copied().filter(|&v| v != 0 && v != 3).collect();
        let s = CenterSet::new(s);
        let res = bipartite_matching_condition(&two, &a2, &s).unwrap();
        assert!(!res.decomposable);
        assert!(res.matching.is_none());
    }

    #[test]
    fn matching_preconditions() {
        let q3 = Graph::hypercube(3);
        let a = vec![0, 3, 5, 6];
        assert!(matches!(
            bipartite_matching_condition(&q3, &a, &CenterSet::new([0, 3])),
            Err(Error::BadCenterSet(_))
        ));
        assert!(matches!(
            bipartite_matching_condition(&q3, &a, &CenterSet::new([0, 3, 1])),
            Err(Error::BadCenterSet(_))
        ));
        assert_eq!(
            bipartite_matching_condition(&q3, &[0, 1, 2, 3], &CenterSet::new([0, 1, 2]))
                .unwrap_err(),
            Error::NotBipartite
        );
    }
}
