use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::aux::CenterSet;
use crate::graph::{edge, Edge, Graph};

/// Current certificate schema version.
pub const CERTIFICATE_VERSION: u32 = 1;

/// The double-star `S_{1,r-1}`: a center of degree `r` whose neighbors are
/// the spine and `r - 1` leaves, plus one extra leaf hanging off the spine.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubleStar {
    pub center: usize,
    pub spine: usize,
    pub spine_leaf: usize,
    pub center_leaves: Vec<usize>,
}

impl DoubleStar {
    /// The `r + 1` edges, canonical and sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .center_leaves
            .iter()
            .chain(std::iter::once(&self.spine))
            .map(|&x| edge(self.center, x))
            .collect();
        out.push(edge(self.spine, self.spine_leaf));
        out.sort_unstable();
        out
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.center, self.spine, self.spine_leaf];
        out.extend(&self.center_leaves);
        out
    }

    /// Recognize an edge set as an `S_{1,r-1}`. For `r = 2` (a path on four
    /// vertices) the smaller inner vertex is taken as the center.
    pub fn from_edges(edges: &[Edge], r: usize) -> Option<DoubleStar> {
        if r < 2 || edges.len() != r + 1 {
            return None;
        }
        let mut degree: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in edges {
            for v in [a, b] {
                match degree.iter_mut().find(|(x, _)| *x == v) {
                    Some(entry) => entry.1 += 1,
                    None => degree.push((v, 1)),
                }
            }
        }
        let center = degree
            .iter()
            .filter(|&&(_, d)| d == r)
            .map(|&(v, _)| v)
            .min()?;
        let around = |v: usize| -> Vec<usize> {
            edges
                .iter()
                .filter_map(|&(a, b)| match (a == v, b == v) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .collect()
        };
        let spine = around(center)
            .into_iter()
            .filter(|&x| degree.iter().any(|&(y, d)| y == x && d == 2))
            .min()?;
        let spine_leaf = around(spine).into_iter().find(|&x| x != center)?;
        let mut center_leaves: Vec<usize> =
            around(center).into_iter().filter(|&x| x != spine).collect();
        center_leaves.sort_unstable();
        let star = DoubleStar {
            center,
            spine,
            spine_leaf,
            center_leaves,
        };
        let mut given = edges.to_vec();
        given.iter_mut().for_each(|e| *e = edge(e.0, e.1));
        given.sort_unstable();
        (star.is_well_formed(r) && star.edges() == given).then_some(star)
    }

    fn is_well_formed(&self, r: usize) -> bool {
        if self.center_leaves.len() + 1 != r {
            return false;
        }
        let mut vs = self.vertices();
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
    }
}

/// An explicit edge partition into double-stars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub order: usize,
    pub r: usize,
    pub stars: Vec<DoubleStar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertificateDefect {
    #[error("edge {0:?} is covered by more than one star")]
    Overlap(Edge),
    #[error("edge {0:?} is not covered")]
    Missing(Edge),
    #[error("star {index} is not a valid S_{{1,r-1}} of the graph: {reason}")]
    BadStar { index: usize, reason: String },
    #[error("certificate header does not match: {0}")]
    Mismatch(String),
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    v: u32,
    order: usize,
    r: usize,
    stars: Vec<DoubleStar>,
}

impl Certificate {
    pub fn centers(&self) -> CenterSet {
        CenterSet::new(self.stars.iter().map(|s| s.center))
    }

    pub fn edge_groups(&self) -> Vec<Vec<Edge>> {
        self.stars.iter().map(DoubleStar::edges).collect()
    }

    /// Rebuild a certificate from raw edge groups; groups that are not
    /// double-stars are reported as `BadStar`.
    pub fn from_edge_groups(
        order: usize,
        r: usize,
        groups: &[Vec<Edge>],
    ) -> Result<Certificate, CertificateDefect> {
        let stars = groups
            .iter()
            .enumerate()
            .map(|(index, group)| {
                DoubleStar::from_edges(group, r).ok_or_else(|| CertificateDefect::BadStar {
                    index,
                    reason: format!("edges {group:?} do not form S_{{1,{}}}", r - 1),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Certificate { order, r, stars })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CertificateJson {
            v: CERTIFICATE_VERSION,
            order: self.order,
            r: self.r,
            stars: self.stars.clone(),
        })
        .expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Certificate, serde_json::Error> {
        let wire: CertificateJson = serde_json::from_str(text)?;
        if wire.v != CERTIFICATE_VERSION {
            return Err(serde::de::Error::custom(format!(
                "unsupported certificate version {}",
                wire.v
            )));
        }
        Ok(Certificate {
            order: wire.order,
            r: wire.r,
            stars: wire.stars,
        })
    }
}

/// Checks that `c` partitions `E(g)` into copies of `S_{1,r-1}` whose edges
/// all belong to `g`.
pub fn verify_certificate(g: &Graph, c: &Certificate, r: usize) -> Result<(), CertificateDefect> {
    if c.order != g.order() || c.r != r {
        return Err(CertificateDefect::Mismatch(format!(
            "certificate is for order {} and r = {}, checked against order {} and r = {r}",
            c.order,
            c.r,
            g.order()
        )));
    }
    let mut covered = HashSet::new();
    for (index, star) in c.stars.iter().enumerate() {
        let bad = |reason: String| CertificateDefect::BadStar { index, reason };
        if r < 2 || !star.is_well_formed(r) {
            return Err(bad(format!(
                "needs r + 2 = {} distinct vertices with {} center leaves",
                r + 2,
                r.saturating_sub(1)
            )));
        }
        if let Some(v) = star.vertices().into_iter().find(|&v| v >= g.order()) {
            return Err(bad(format!("vertex {v} out of range")));
        }
        for e in star.edges() {
            if !g.has_edge(e.0, e.1) {
                return Err(bad(format!("edge {e:?} is not in the graph")));
            }
            if !covered.insert(e) {
                return Err(CertificateDefect::Overlap(e));
            }
        }
    }
    match g.edges().into_iter().find(|e| !covered.contains(e)) {
        Some(e) => Err(CertificateDefect::Missing(e)),
        None => Ok(()),
    }
}
