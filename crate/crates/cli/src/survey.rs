//! `survey`: one JSONL record per corpus line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use stardecomp::{
    decide_s12_traced, decide_s1r_traced, domination_number, graph6::parse_graph6,
    independence_number, verify_certificate, Error, Graph, BITSET_MAX_ORDER,
};

use crate::check::Verdict;
use crate::corpus::CorpusLine;
use crate::{millis, refusal_text, Options};

pub const RECORD_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub v: u32,
    pub index: usize,
    pub graph6: String,
    pub n: Option<usize>,
    /// Common degree when the graph is regular.
    pub regular: Option<usize>,
    pub connectivity: Option<usize>,
    pub bipartite: Option<bool>,
    pub triangle_free: Option<bool>,
    pub alpha: Option<usize>,
    pub gamma: Option<usize>,
    pub r: usize,
    pub s12: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub certificate_path: Option<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SurveySummary {
    pub records: usize,
    pub yes: usize,
    pub no: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl std::fmt::Display for SurveySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "records={} yes={} no={} skipped={} errors={}",
            self.records, self.yes, self.no, self.skipped, self.errors
        )
    }
}

/// Evaluates one corpus line. Certificates are written to
/// `<cert_dir>/<index>.cert.json` when `opts.emit_cert` is set.
pub fn survey_one(line: &CorpusLine, opts: &Options, cert_dir: &Path) -> SurveyRecord {
    let start = Instant::now();
    let mut record = SurveyRecord {
        v: RECORD_VERSION,
        index: line.index,
        graph6: line.text.clone(),
        n: None,
        regular: None,
        connectivity: None,
        bipartite: None,
        triangle_free: None,
        alpha: None,
        gamma: None,
        r: opts.r,
        s12: Verdict::Skipped,
        reason: None,
        certificate_path: None,
        elapsed_ms: 0,
        error: None,
    };
    match parse_graph6(&line.text) {
        Ok(g) => fill(&mut record, &g, opts, cert_dir),
        Err(e) => {
            record.reason = Some("parse error".into());
            record.error = Some(e.to_string());
        }
    }
    record.elapsed_ms = millis(start.elapsed());
    record
}

fn fill(record: &mut SurveyRecord, g: &Graph, opts: &Options, cert_dir: &Path) {
    record.n = Some(g.order());
    record.regular = g.regular_degree();
    record.connectivity = Some(g.vertex_connectivity());
    record.bipartite = Some(g.bipartition().is_some());
    record.triangle_free = Some(g.is_triangle_free());
    if g.order() <= BITSET_MAX_ORDER {
        record.alpha = independence_number(g).ok().map(|w| w.size);
        record.gamma = domination_number(g).ok().map(|w| w.size);
    }
    let r = opts.r;
    if !g.is_r_regular(r) {
        record.reason = Some(if r == 3 {
            "not cubic".into()
        } else {
            format!("not {r}-regular")
        });
        return;
    }
    let decision = if r == 3 {
        decide_s12_traced(g, &opts.limits)
    } else {
        decide_s1r_traced(g, r, &opts.limits)
    };
    match decision {
        Ok(d) => match d.certificate {
            Some(cert) => {
                if let Err(e) = verify_certificate(g, &cert, r) {
                    record.error = Some(format!(
                        "internal error: certificate failed verification: {e}"
                    ));
                    return;
                }
                record.s12 = Verdict::Yes;
                if opts.emit_cert {
                    let path = cert_dir.join(format!("{}.cert.json", record.index));
                    match std::fs::write(&path, cert.to_json() + "\n") {
                        Ok(()) => record.certificate_path = Some(path.display().to_string()),
                        Err(e) => record.error = Some(format!("writing {}: {e}", path.display())),
                    }
                }
            }
            None => {
                record.s12 = Verdict::No;
                record.reason = d.refusal.map(|f| refusal_text(&f, r));
            }
        },
        Err(Error::ScaleExceeded { order, cap }) => {
            record.reason = Some(format!(
                "scale exceeded (component of order {order} > {cap})"
            ));
        }
        Err(e) => record.error = Some(e.to_string()),
    }
}

/// Surveys `lines` in parallel and writes the records in input order.
pub fn run_survey(
    lines: &[CorpusLine],
    opts: &Options,
    cert_dir: Option<PathBuf>,
    out: &mut dyn Write,
) -> anyhow::Result<SurveySummary> {
    let cert_dir = cert_dir.unwrap_or_else(|| PathBuf::from("."));
    let records: Vec<SurveyRecord> = opts.pool()?.install(|| {
        lines
            .par_iter()
            .map(|l| survey_one(l, opts, &cert_dir))
            .collect()
    });
    let mut summary = SurveySummary::default();
    for record in &records {
        writeln!(out, "{}", serde_json::to_string(record)?)?;
        summary.records += 1;
        if record.error.is_some() {
            summary.errors += 1;
        }
        match record.s12 {
            Verdict::Yes => summary.yes += 1,
            Verdict::No => summary.no += 1,
            Verdict::Skipped => summary.skipped += 1,
        }
    }
    out.flush()?;
    Ok(summary)
}
