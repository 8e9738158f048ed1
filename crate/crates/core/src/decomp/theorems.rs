//! Hypothesis checkers for the sufficient conditions. Each returns whether
//! the hypotheses hold; the corresponding conclusion is that
//! `decompose_with_centers` succeeds on the same center set.

use super::aux::CenterSet;
use super::search::center_count;
use crate::error::{Error, Result};
use crate::graph::{ComponentKind, Graph};
use crate::invariants::independence_number;

/// Whether `2(r+1)` divides `r n`, the order condition for `S_{1,r-1}`
/// decompositions of `r`-regular graphs (`8 | n` when `r = 3`).
pub fn r_divisibility(n: usize, r: usize) -> bool {
    (r * n).is_multiple_of(2 * (r + 1))
}

/// `S` independent and every component of `G \ S` a cycle or an isolated
/// vertex.
pub fn is_independent_cycling_set(g: &Graph, s: &CenterSet) -> bool {
    if s.vertices().iter().any(|&v| v >= g.order()) || !g.is_independent(s.vertices()) {
        return false;
    }
    let (rest, _) = g.delete_vertices(s.vertices()).expect("vertices checked");
    rest.classify_components()
        .iter()
        .all(|c| matches!(c.kind, ComponentKind::Cycle | ComponentKind::IsolatedVertex))
}

fn on_triangle(g: &Graph, v: usize) -> bool {
    g.in_cycle_of_length(v, 3).unwrap_or(false)
}

/// A cubic graph together with its independence number, so that sweeps over
/// many center sets compute `alpha` once.
#[derive(Clone, Debug)]
pub struct CubicHypotheses<'g> {
    g: &'g Graph,
    alpha: usize,
}

impl<'g> CubicHypotheses<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        g.require_cubic()?;
        let alpha = independence_number(g)?.size;
        Ok(CubicHypotheses { g, alpha })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    fn extremal_size(&self, s: &CenterSet) -> bool {
        center_count(self.g.order(), 3).is_some_and(|k| self.alpha == k && s.len() == k)
    }

    /// `alpha = 3n/8`, `S` an independent cycling set of that size, and no
    /// center on a triangle.
    pub fn cycling_applies(&self, s: &CenterSet) -> bool {
        self.extremal_size(s)
            && is_independent_cycling_set(self.g, s)
            && !s.vertices().iter().any(|&v| on_triangle(self.g, v))
    }

    /// `alpha = 3n/8`, `S` independent of that size, and no center on a
    /// cycle of length 3, 5 or 7.
    pub fn main_applies(&self, s: &CenterSet) -> bool {
        self.extremal_size(s)
            && s.vertices().iter().all(|&v| v < self.g.order())
            && self.g.is_independent(s.vertices())
            && s.vertices().iter().all(|&v| {
                [3, 5, 7]
                    .iter()
                    .all(|&k| !self.g.in_short_odd_cycle(v, k).expect("vertex in range"))
            })
    }
}

pub fn theorem_cycling_applies(g: &Graph, s: &CenterSet) -> Result<bool> {
    Ok(CubicHypotheses::new(g)?.cycling_applies(s))
}

pub fn theorem_main_applies(g: &Graph, s: &CenterSet) -> Result<bool> {
    Ok(CubicHypotheses::new(g)?.main_applies(s))
}

/// The `r`-regular cycling-set condition (`r >= 4`). Unlike the cubic
/// version it carries no independence-number hypothesis, and it does not
/// on its own guarantee a decomposition with centers `S`: a center whose
/// neighbors are all isolated in `G \ S` has no spine edge.
pub fn theorem_r_cycling_applies(g: &Graph, s: &CenterSet, r: usize) -> Result<bool> {
    if r < 4 {
        return Err(Error::PreconditionViolated(format!(
            "r = {r} must be at least 4"
        )));
    }
    if !g.is_r_regular(r) {
        return Err(Error::NotRegular(r));
    }
    Ok(center_count(g.order(), r) == Some(s.len())
        && is_independent_cycling_set(g, s)
        && !s.vertices().iter().any(|&v| on_triangle(g, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility() {
        assert!(r_divisibility(8, 3));
        assert!(r_divisibility(10, 4));
        assert!(!r_divisibility(12, 4));
        assert!(!r_divisibility(12, 3));
    }

    #[test]
    fn cycling_sets() {
        assert!(is_independent_cycling_set(
            &Graph::cycle(8),
            &CenterSet::default()
        ));
        assert!(is_independent_cycling_set(
            &Graph::complete(4),
            &CenterSet::new([0])
        ));
        assert!(!is_independent_cycling_set(
            &Graph::complete(4),
            &CenterSet::new([0, 1])
        ));
        assert!(!is_independent_cycling_set(
            &Graph::cycle(8),
            &CenterSet::new([0])
        ));
        assert!(!is_independent_cycling_set(
            &Graph::cycle(8),
            &CenterSet::new([8])
        ));
    }

    #[test]
    fn q3_hypotheses() {
        let q3 = Graph::hypercube(3);
        let hyp = CubicHypotheses::new(&q3).unwrap();
        // alpha(Q3) = 4 > 3 = 3n/8, so neither theorem applies
        assert_eq!(hyp.alpha(), 4);
        assert!(!hyp.cycling_applies(&CenterSet::new([0, 3, 5])));
        assert!(!hyp.main_applies(&CenterSet::new([0, 3, 5])));
        assert_eq!(
            theorem_cycling_applies(&Graph::cycle(8), &CenterSet::default()),
            Err(Error::NotCubic)
        );
    }

    #[test]
    fn r_cycling_preconditions() {
        let k5 = Graph::complete(5);
        assert!(theorem_r_cycling_applies(&k5, &CenterSet::new([0]), 3).is_err());
        assert_eq!(
            theorem_r_cycling_applies(&Graph::hypercube(3), &CenterSet::new([0]), 4),
            Err(Error::NotRegular(4))
        );
        // wrong size
        assert!(!theorem_r_cycling_applies(&k5, &CenterSet::new([0]), 4).unwrap());
        // K5 has no independent pair at all, and every vertex is on a triangle
        assert!(!theorem_r_cycling_applies(&k5, &CenterSet::new([0, 1]), 4).unwrap());
    }
}
