//! `hunt`: search a corpus for non-decomposable cubic graphs under
//! structural filters (triangle-free, bipartite, connectivity, order, and
//! extremal independence number).

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use stardecomp::{
    brute_force_decompose, graph6::parse_graph6, independence_number, verify_certificate,
    Certificate, Error, Graph, BRUTE_FORCE_MAX_EDGES,
};

use crate::corpus::CorpusLine;
use crate::oracle::{Mismatch, Trace};
use crate::Options;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HuntFilters {
    pub triangle_free: bool,
    pub bipartite: bool,
    pub min_connectivity: Option<usize>,
    pub order_mod_8: bool,
    pub alpha_equals_3n8: bool,
}

impl HuntFilters {
    /// Whether a cubic graph passes every requested filter.
    pub fn admits(&self, g: &Graph) -> Result<bool, Error> {
        let n = g.order();
        if self.order_mod_8 && !n.is_multiple_of(8) {
            return Ok(false);
        }
        if self.triangle_free && !g.is_triangle_free() {
            return Ok(false);
        }
        if self.bipartite && g.bipartition().is_none() {
            return Ok(false);
        }
        if let Some(k) = self.min_connectivity {
            if g.vertex_connectivity() < k {
                return Ok(false);
            }
        }
        if self.alpha_equals_3n8
            && (!n.is_multiple_of(8) || independence_number(g)?.size != 3 * n / 8)
        {
            return Ok(false);
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HuntHit {
    pub v: u32,
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub connectivity: usize,
    pub triangle_free: bool,
    pub bipartite: bool,
    /// Re-confirmed by the backtracking oracle; `false` only beyond its cap.
    pub confirmed: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HuntReport {
    pub examined: usize,
    pub passed_filters: usize,
    pub decomposable: usize,
    pub hits: Vec<HuntHit>,
    pub skipped: Vec<(usize, String)>,
    /// Negative answers the oracle refuted; never reported as hits.
    pub mismatches: Vec<Mismatch>,
}

impl HuntReport {
    pub fn exit_code(&self) -> i32 {
        if self.mismatches.is_empty() {
            0
        } else {
            1
        }
    }
}

enum Outcome {
    Skip(String),
    Filtered,
    Decomposable,
    Hit(HuntHit),
    Refuted(Mismatch),
}

pub fn run_hunt<D>(
    lines: &[CorpusLine],
    filters: &HuntFilters,
    opts: &Options,
    decide: D,
) -> anyhow::Result<HuntReport>
where
    D: Fn(&Graph) -> Result<Option<Certificate>, Error> + Sync,
{
    let outcomes: Vec<Outcome> = opts.pool()?.install(|| {
        lines
            .par_iter()
            .map(|l| hunt_one(l, filters, &decide))
            .collect()
    });
    let mut report = HuntReport::default();
    for (line, outcome) in lines.iter().zip(outcomes) {
        report.examined += 1;
        match outcome {
            Outcome::Skip(why) => report.skipped.push((line.index, why)),
            Outcome::Filtered => {}
            Outcome::Decomposable => {
                report.passed_filters += 1;
                report.decomposable += 1;
            }
            Outcome::Hit(hit) => {
                report.passed_filters += 1;
                report.hits.push(hit);
            }
            Outcome::Refuted(m) => {
                report.passed_filters += 1;
                report.mismatches.push(m);
            }
        }
    }
    Ok(report)
}

fn hunt_one<D>(line: &CorpusLine, filters: &HuntFilters, decide: &D) -> Outcome
where
    D: Fn(&Graph) -> Result<Option<Certificate>, Error>,
{
    let g = match parse_graph6(&line.text) {
        Ok(g) => g,
        Err(e) => return Outcome::Skip(format!("parse error: {e}")),
    };
    if !g.is_cubic() {
        return Outcome::Skip("not cubic".into());
    }
    match filters.admits(&g) {
        Ok(true) => {}
        Ok(false) => return Outcome::Filtered,
        Err(e) => return Outcome::Skip(e.to_string()),
    }
    match decide(&g) {
        Ok(Some(cert)) => match verify_certificate(&g, &cert, 3) {
            Ok(()) => Outcome::Decomposable,
            Err(e) => Outcome::Skip(format!(
                "internal error: certificate failed verification: {e}"
            )),
        },
        Ok(None) => {
            let confirmed = g.size() <= BRUTE_FORCE_MAX_EDGES;
            if confirmed {
                match brute_force_decompose(&g, 3) {
                    Ok(None) => {}
                    Ok(Some(found)) => {
                        return Outcome::Refuted(Mismatch {
                            index: line.index,
                            graph6: line.text.clone(),
                            decide: Trace::from_certificate(None),
                            oracle: Trace::from_certificate(Some(&found)),
                        })
                    }
                    Err(e) => return Outcome::Skip(e.to_string()),
                }
            }
            Outcome::Hit(HuntHit {
                v: crate::survey::RECORD_VERSION,
                index: line.index,
                graph6: line.text.clone(),
                n: g.order(),
                connectivity: g.vertex_connectivity(),
                triangle_free: g.is_triangle_free(),
                bipartite: g.bipartition().is_some(),
                confirmed,
            })
        }
        Err(e) => Outcome::Skip(e.to_string()),
    }
}

pub fn write_hunt(report: &HuntReport, out: &mut dyn Write) -> anyhow::Result<()> {
    for hit in &report.hits {
        writeln!(out, "{}", serde_json::to_string(hit)?)?;
    }
    for m in &report.mismatches {
        writeln!(out, "MISMATCH {}", serde_json::to_string(m)?)?;
    }
    if report.hits.is_empty() {
        writeln!(out, "none found in corpus")?;
    }
    writeln!(
        out,
        "hunt: examined={} passed_filters={} decomposable={} hits={} skipped={}",
        report.examined,
        report.passed_filters,
        report.decomposable,
        report.hits.len(),
        report.skipped.len()
    )?;
    Ok(())
}
