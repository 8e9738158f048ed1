use serde::Serialize;

use super::aux::CenterSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::independence_number;

/// The necessary conditions that the center set of any `S_{1,2}`
/// decomposition of a cubic graph satisfies, evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NecessaryReport {
    pub divisible_by_8: bool,
    pub independent_ok: bool,
    /// `|S| >= 3n/8`.
    pub size_ok: bool,
    /// Every component of `G \ S` is a cycle or a tree.
    pub components_ok: bool,
    /// No component of `G \ S` holds two vertices of degree 3.
    pub no_two_3vertices: bool,
    /// `G \ S` has an independent set of size `n/4`.
    pub pendant_set_exists: bool,
}

impl NecessaryReport {
    pub fn all(&self) -> bool {
        self.divisible_by_8
            && self.independent_ok
            && self.size_ok
            && self.components_ok
            && self.no_two_3vertices
            && self.pendant_set_exists
    }
}

pub fn necessary_conditions(g: &Graph, s: &CenterSet) -> Result<NecessaryReport> {
    g.require_cubic()?;
    let n = g.order();
    let (rest, _) = g.delete_vertices(s.vertices())?;
    let (components_ok, no_two_3vertices) = component_flags(&rest);
    let pendant_set_exists = n.is_multiple_of(4) && independence_number(&rest)?.size >= n / 4;
    Ok(NecessaryReport {
        divisible_by_8: n.is_multiple_of(8),
        independent_ok: g.is_independent(s.vertices()),
        size_ok: 8 * s.len() >= 3 * n,
        components_ok,
        no_two_3vertices,
        pendant_set_exists,
    })
}

/// (every component a cycle or tree, no component with two 3-vertices)
pub(crate) fn component_flags(rest: &Graph) -> (bool, bool) {
    let comps = rest.classify_components();
    (
        comps
            .iter()
            .all(|c| c.is_tree() || c.kind == crate::graph::ComponentKind::Cycle),
        comps.iter().all(|c| c.count3 <= 1),
    )
}
