//! `oracle-compare`: the center-set search against edge backtracking.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use stardecomp::{
    brute_force_decompose, decide_s12_traced, graph6::parse_graph6, Certificate, Error, Graph,
    SearchLimits,
};

use crate::corpus::CorpusLine;
use crate::Options;

/// One side of a comparison: the answer and the certificate behind a yes.
#[derive(Clone, Debug, Serialize)]
pub struct Trace {
    pub decomposable: bool,
    pub certificate: Option<serde_json::Value>,
}

impl Trace {
    pub fn from_certificate(cert: Option<&Certificate>) -> Trace {
        Trace {
            decomposable: cert.is_some(),
            certificate: cert
                .map(|c| serde_json::from_str(&c.to_json()).expect("certificate is JSON")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub index: usize,
    pub graph6: String,
    pub decide: Trace,
    pub oracle: Trace,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct OracleReport {
    pub compared: usize,
    pub agreed: usize,
    pub skipped: Vec<(usize, String)>,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

/// The production decision used by the CLI.
pub fn default_decider(
    limits: SearchLimits,
) -> impl Fn(&Graph) -> Result<Option<Certificate>, Error> + Sync {
    move |g| Ok(decide_s12_traced(g, &limits)?.certificate)
}

enum Outcome {
    Agree,
    Skip(String),
    Disagree(Mismatch),
}

/// Compares `decide` with the backtracking oracle on every cubic graph of at
/// most `max_edges` edges; other lines are skipped with a notice.
pub fn oracle_compare<D>(
    lines: &[CorpusLine],
    max_edges: usize,
    opts: &Options,
    decide: D,
) -> anyhow::Result<OracleReport>
where
    D: Fn(&Graph) -> Result<Option<Certificate>, Error> + Sync,
{
    let outcomes: Vec<Outcome> = opts.pool()?.install(|| {
        lines
            .par_iter()
            .map(|line| compare_one(line, max_edges, &decide))
            .collect()
    });
    let mut report = OracleReport::default();
    for (line, outcome) in lines.iter().zip(outcomes) {
        match outcome {
            Outcome::Agree => {
                report.compared += 1;
                report.agreed += 1;
            }
            Outcome::Skip(why) => report.skipped.push((line.index, why)),
            Outcome::Disagree(m) => {
                report.compared += 1;
                report.mismatches.push(m);
            }
        }
    }
    Ok(report)
}

fn compare_one<D>(line: &CorpusLine, max_edges: usize, decide: &D) -> Outcome
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
    if g.size() > max_edges {
        return Outcome::Skip(format!(
            "{} edges exceed the oracle cap of {max_edges}",
            g.size()
        ));
    }
    let ours = match decide(&g) {
        Ok(c) => c,
        Err(e @ Error::ScaleExceeded { .. }) => return Outcome::Skip(e.to_string()),
        Err(e) => return Outcome::Skip(format!("decision failed: {e}")),
    };
    let theirs = match brute_force_decompose(&g, 3) {
        Ok(c) => c,
        Err(e) => return Outcome::Skip(e.to_string()),
    };
    if ours.is_some() == theirs.is_some() {
        Outcome::Agree
    } else {
        Outcome::Disagree(Mismatch {
            index: line.index,
            graph6: line.text.clone(),
            decide: Trace::from_certificate(ours.as_ref()),
            oracle: Trace::from_certificate(theirs.as_ref()),
        })
    }
}

pub fn write_report(report: &OracleReport, out: &mut dyn Write) -> anyhow::Result<()> {
    for (index, why) in &report.skipped {
        writeln!(out, "skipped line {index}: {why}")?;
    }
    for m in &report.mismatches {
        writeln!(out, "MISMATCH {}", serde_json::to_string(m)?)?;
    }
    writeln!(
        out,
        "oracle-compare: {} compared, {} agreed, {} mismatched, {} skipped: {}",
        report.compared,
        report.agreed,
        report.mismatches.len(),
        report.skipped.len(),
        if report.passed() { "PASS" } else { "FAIL" }
    )?;
    Ok(())
}
