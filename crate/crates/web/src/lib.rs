//! Browser bindings for the decomposition library. Every exported function
//! takes and returns plain strings (graph6 in, JSON out) so the page needs
//! no generated TypeScript types.

use serde::Serialize;
use serde_json::{json, Value};
use stardecomp::graph6::{encode_graph6, parse_graph6};
use stardecomp::{
    build_aux, decide_s12_traced, decompose_with_centers, necessary_conditions, random_cubic,
    s11_decompose, verify_certificate, CenterSet, Certificate, Graph, SearchLimits,
};
use wasm_bindgen::prelude::*;

/// Largest component order the page will search; keeps the tab responsive.
pub const DEMO_SCALE_MAX: usize = 24;

#[derive(Serialize)]
struct Drawing {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Unit-circle coordinates, one component after another.
    layout: Vec<(f64, f64)>,
}

fn drawing(g: &Graph) -> Drawing {
    let n = g.order().max(1);
    let mut layout = vec![(0.0, 0.0); g.order()];
    let mut slot = 0;
    for comp in g.connected_components() {
        for v in comp {
            let t = std::f64::consts::TAU * slot as f64 / n as f64;
            layout[v] = (t.cos(), t.sin());
            slot += 1;
        }
    }
    Drawing {
        n: g.order(),
        edges: g.edges(),
        layout,
    }
}

fn stars_json(c: &Certificate) -> Value {
    serde_json::from_str::<Value>(&c.to_json())
        .map(|v| v["stars"].clone())
        .unwrap_or(Value::Null)
}

fn fail(msg: impl std::fmt::Display) -> Value {
    json!({ "ok": false, "error": msg.to_string() })
}

fn parse_cubic(text: &str) -> Result<Graph, Value> {
    let g = parse_graph6(text.trim()).map_err(fail)?;
    if !g.is_cubic() {
        return Err(fail("graph is not cubic"));
    }
    Ok(g)
}

/// Decides decomposability of a cubic graph and returns the drawing, the
/// certificate (if any) and the path partition (if any).
pub fn decompose_report(graph6: &str) -> Value {
    let g = match parse_cubic(graph6) {
        Ok(g) => g,
        Err(e) => return e,
    };
    let limits = SearchLimits {
        max_component_order: DEMO_SCALE_MAX,
    };
    let decision = match decide_s12_traced(&g, &limits) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    let verified = decision
        .certificate
        .as_ref()
        .map(|c| verify_certificate(&g, c, 3).is_ok());
    let paths = s11_decompose(&g).ok().flatten();
    json!({
        "ok": true,
        "graph": drawing(&g),
        "decomposable": decision.certificate.is_some(),
        "reason": decision.refusal.map(|r| r.to_string()),
        "candidates_examined": decision.candidates_examined,
        "stars": decision.certificate.as_ref().map(stars_json),
        "verified": verified,
        "paths": paths.as_ref().map(|c| c.edge_groups()),
    })
}

/// Evaluates a user-chosen center set: the necessary conditions, the
/// auxiliary graph size, and the decomposition with exactly those centers.
pub fn center_set_report_value(graph6: &str, centers: &str) -> Value {
    let g = match parse_cubic(graph6) {
        Ok(g) => g,
        Err(e) => return e,
    };
    let parsed: Result<Vec<usize>, _> = centers
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect();
    let vertices = match parsed {
        Ok(v) if v.iter().all(|&x| x < g.order()) => v,
        Ok(_) => return fail("center out of range"),
        Err(e) => return fail(format!("bad center list: {e}")),
    };
    let s = CenterSet::new(vertices);
    let necessary = match necessary_conditions(&g, &s) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let (aux, certificate) = match build_aux(&g, &s) {
        Ok(h) => {
            let aux = json!({ "centers": h.left.len(), "edges_outside": h.right.len(), "pairs": h.admissible.edge_count() });
            (aux, decompose_with_centers(&g, &s, 3).ok().flatten())
        }
        Err(e) => (json!({ "error": e.to_string() }), None),
    };
    json!({
        "ok": true,
        "centers": s.vertices(),
        "necessary": necessary,
        "necessary_all": necessary.all(),
        "aux": aux,
        "decomposable": certificate.is_some(),
        "stars": certificate.as_ref().map(stars_json),
    })
}

/// A seeded random cubic graph as graph6, or an error object.
pub fn random_cubic_value(n: usize, seed: u64) -> Value {
    match random_cubic(n, seed).and_then(|g| encode_graph6(&g)) {
        Ok(text) => json!({ "ok": true, "graph6": text }),
        Err(e) => fail(e),
    }
}

#[wasm_bindgen]
pub fn decompose(graph6: &str) -> String {
    decompose_report(graph6).to_string()
}

#[wasm_bindgen]
pub fn center_set_report(graph6: &str, centers: &str) -> String {
    center_set_report_value(graph6, centers).to_string()
}

#[wasm_bindgen]
pub fn random_cubic_graph6(n: u32, seed: u32) -> String {
    random_cubic_value(n as usize, seed as u64).to_string()
}
