//! Exact decision by center-set search.
//!
//! In an `S_{1,r-1}` decomposition of an `r`-regular graph (`r >= 3`) every
//! center uses all `r` of its edges in its own star, so no vertex is the
//! center of two stars and no two centers are adjacent. Each star has `r + 1`
//! edges, so a component of order `n_c` has exactly `r n_c / (2(r+1))`
//! centers. Conversely the extra edge of each star has both endpoints outside
//! the center set, and its center touches exactly one of them. Hence the
//! decompositions with center set `S` are in bijection with the perfect
//! matchings of the admissible auxiliary graph, and enumerating every
//! independent set of the forced size per component is a complete search.

use serde::Serialize;

use super::aux::{build_aux, hopcroft_karp, CenterSet};
use super::necessary::component_flags;
use super::star::{Certificate, DoubleStar};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::enumerate_independent_sets;

/// Default cap on the order of a component searched exhaustively.
pub const DEFAULT_SCALE_MAX: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_component_order: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_component_order: DEFAULT_SCALE_MAX,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Refusal {
    /// Some component has an order for which the star count is fractional.
    OrderNotDivisible { component_order: usize },
    /// No center set of the forced size admits a decomposition.
    NoCenterSet,
}

impl std::fmt::Display for Refusal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Refusal::OrderNotDivisible { component_order } => {
                write!(
                    f,
                    "component of order {component_order} has no whole number of stars"
                )
            }
            Refusal::NoCenterSet => write!(f, "no center set admits a decomposition"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub certificate: Option<Certificate>,
    pub refusal: Option<Refusal>,
    /// Center sets handed to the matching step.
    pub candidates_examined: u64,
}

/// Number of centers an `r`-regular graph of order `n` must have, if integral.
pub fn center_count(n: usize, r: usize) -> Option<usize> {
    let (num, den) = (r * n, 2 * (r + 1));
    (num % den == 0).then_some(num / den)
}

/// Builds the decomposition with center set `s`, or `None` when the
/// admissible auxiliary graph has no perfect matching. Each star is the claw
/// at its center plus its matched edge, the endpoint adjacent to the center
/// being the spine.
pub fn decompose_with_centers(g: &Graph, s: &CenterSet, r: usize) -> Result<Option<Certificate>> {
    if r < 2 || !g.is_r_regular(r) {
        return Err(Error::PreconditionViolated(format!(
            "graph is not {r}-regular"
        )));
    }
    if center_count(g.order(), r) != Some(s.len()) {
        return Err(Error::PreconditionViolated(format!(
            "center set has {} vertices, expected r*n/(2(r+1)) for n = {}, r = {r}",
            s.len(),
            g.order()
        )));
    }
    let h = build_aux(g, s).map_err(|e| match e {
        Error::NotIndependent => {
            Error::PreconditionViolated("center set is not independent".into())
        }
        other => other,
    })?;
    let matching = hopcroft_karp(&h.admissible);
    if matching.len() < h.left.len() || h.right.len() != h.left.len() {
        return Ok(None);
    }
    let stars = matching
        .into_iter()
        .map(|(i, j)| {
            let center = h.left[i];
            let (a, b) = h.right[j];
            let (spine, spine_leaf) = if g.has_edge(center, a) {
                (a, b)
            } else {
                (b, a)
            };
            DoubleStar {
                center,
                spine,
                spine_leaf,
                center_leaves: g
                    .neighbors(center)
                    .iter()
                    .copied()
                    .filter(|&x| x != spine)
                    .collect(),
            }
        })
        .collect();
    Ok(Some(Certificate {
        order: g.order(),
        r,
        stars,
    }))
}

/// Exact `S_{1,2}` decision for cubic graphs.
pub fn decide_s12(g: &Graph) -> Result<Option<Certificate>> {
    Ok(decide_s12_traced(g, &SearchLimits::default())?.certificate)
}

pub fn decide_s12_traced(g: &Graph, limits: &SearchLimits) -> Result<Decision> {
    g.require_cubic()?;
    decide(g, 3, limits)
}

/// Exact `S_{1,r-1}` decision for `r`-regular graphs, `r >= 3`.
pub fn decide_s1r(g: &Graph, r: usize) -> Result<Option<Certificate>> {
    Ok(decide_s1r_traced(g, r, &SearchLimits::default())?.certificate)
}

pub fn decide_s1r_traced(g: &Graph, r: usize, limits: &SearchLimits) -> Result<Decision> {
    if r < 3 {
        return Err(Error::PreconditionViolated(format!(
            "r = {r} must be at least 3"
        )));
    }
    if !g.is_r_regular(r) {
        return Err(Error::NotRegular(r));
    }
    decide(g, r, limits)
}

fn decide(g: &Graph, r: usize, limits: &SearchLimits) -> Result<Decision> {
    let components = g.connected_components();
    let mut decision = Decision {
        certificate: None,
        refusal: None,
        candidates_examined: 0,
    };
    if let Some(c) = components
        .iter()
        .find(|c| center_count(c.len(), r).is_none())
    {
        decision.refusal = Some(Refusal::OrderNotDivisible {
            component_order: c.len(),
        });
        return Ok(decision);
    }
    if let Some(c) = components
        .iter()
        .find(|c| c.len() > limits.max_component_order)
    {
        return Err(Error::ScaleExceeded {
            order: c.len(),
            cap: limits.max_component_order,
        });
    }

    let mut stars = Vec::new();
    for comp in &components {
        let (local, to_global) = g.induced(comp);
        let k = center_count(local.order(), r).expect("checked above");
        let mut found = None;
        for centers in enumerate_independent_sets(&local, k)? {
            if r == 3 {
                // necessary conditions on G \ S prune before matching
                let (rest, _) = local.delete_vertices(&centers)?;
                let (components_ok, no_two_3vertices) = component_flags(&rest);
                if !(components_ok && no_two_3vertices) {
                    continue;
                }
            }
            decision.candidates_examined += 1;
            if let Some(cert) = decompose_with_centers(&local, &CenterSet::new(centers), r)? {
                found = Some(cert);
                break;
            }
        }
        match found {
            Some(cert) => stars.extend(cert.stars.into_iter().map(|s| DoubleStar {
                center: to_global[s.center],
                spine: to_global[s.spine],
                spine_leaf: to_global[s.spine_leaf],
                center_leaves: s.center_leaves.iter().map(|&x| to_global[x]).collect(),
            })),
            None => {
                decision.refusal = Some(Refusal::NoCenterSet);
                return Ok(decision);
            }
        }
    }
    decision.certificate = Some(Certificate {
        order: g.order(),
        r,
        stars,
    });
    Ok(decision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::verify_certificate;

    #[test]
    fn q3_is_decomposable() {
        let q3 = Graph::hypercube(3);
        let cert = decide_s12(&q3).unwrap().expect("Q3 decomposes");
        assert_eq!(cert.stars.len(), 3);
        assert_eq!(verify_certificate(&q3, &cert, 3), Ok(()));
    }

    #[test]
    fn orders_not_divisible_by_eight() {
        for g in [Graph::complete(4), Graph::petersen()] {
            let d = decide_s12_traced(&g, &SearchLimits::default()).unwrap();
            assert!(d.certificate.is_none());
            assert!(matches!(d.refusal, Some(Refusal::OrderNotDivisible { .. })));
            assert_eq!(d.candidates_examined, 0);
        }
    }

    #[test]
    fn disconnected_inputs_are_split() {
        let q3 = Graph::hypercube(3);
        let two = q3.disjoint_union(&q3);
        let cert = decide_s12(&two).unwrap().unwrap();
        assert_eq!(cert.stars.len(), 6);
        assert_eq!(verify_certificate(&two, &cert, 3), Ok(()));
        // an order-4 component sinks the whole graph even though 8 | 12
        let mixed = Graph::complete(4).disjoint_union(&q3);
        assert!(decide_s12(&mixed).unwrap().is_none());
    }

    #[test]
    fn preconditions() {
        assert_eq!(decide_s12(&Graph::cycle(8)), Err(Error::NotCubic));
        let q3 = Graph::hypercube(3);
        assert!(decompose_with_centers(&q3, &CenterSet::new([0, 3]), 3).is_err());
        assert!(decompose_with_centers(&q3, &CenterSet::new([0, 1, 6]), 3).is_err());
        let limits = SearchLimits {
            max_component_order: 6,
        };
        assert!(matches!(
            decide_s12_traced(&q3, &limits),
            Err(Error::ScaleExceeded { order: 8, cap: 6 })
        ));
    }

    #[test]
    fn center_counts() {
        assert_eq!(center_count(8, 3), Some(3));
        assert_eq!(center_count(10, 3), None);
        assert_eq!(center_count(5, 4), Some(2));
    }
}
