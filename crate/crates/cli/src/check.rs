//! `check`: decide one graph and explain the answer.

use serde::Serialize;
use stardecomp::{
    decide_s12_traced, decide_s1r_traced, graph6::parse_graph6, necessary_conditions,
    s11_decompose, verify_certificate, Certificate, Error, NecessaryReport,
};

use crate::{decision_label, refusal_text, Options, EXIT_PARSE, EXIT_SCALE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Skipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub decision: Verdict,
    pub reason: Option<String>,
    /// Center set of the certificate, when there is one.
    pub centers: Option<Vec<usize>>,
    /// Necessary-condition report for those centers (cubic case only).
    pub necessary: Option<NecessaryReport>,
    /// Whether the graph splits into paths on four vertices (cubic only).
    pub s11: Option<bool>,
    #[serde(skip)]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error("cannot parse graph6 input: {0}")]
    Parse(Error),
    #[error("{0}")]
    Scale(Error),
    #[error(transparent)]
    Other(#[from] anyhow::Error),
}

impl CheckError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CheckError::Parse(_) => EXIT_PARSE,
            CheckError::Scale(_) => EXIT_SCALE,
            CheckError::Other(_) => 1,
        }
    }
}

fn scale_or_other(e: Error) -> CheckError {
    match e {
        Error::ScaleExceeded { .. } => CheckError::Scale(e),
        other => CheckError::Other(other.into()),
    }
}

pub fn check(line: &str, opts: &Options) -> Result<CheckReport, CheckError> {
    let g = parse_graph6(line.trim()).map_err(CheckError::Parse)?;
    let r = opts.r;
    let mut report = CheckReport {
        graph6: line.trim().to_string(),
        n: g.order(),
        m: g.size(),
        r,
        decision: Verdict::Skipped,
        reason: None,
        centers: None,
        necessary: None,
        s11: None,
        certificate: None,
    };
    if g.is_cubic() {
        let paths = s11_decompose(&g).map_err(scale_or_other)?;
        if let Some(c) = &paths {
            verify_certificate(&g, c, 2)
                .map_err(|e| anyhow::anyhow!("internal error: bad S11 certificate: {e}"))?;
        }
        report.s11 = Some(paths.is_some());
    }
    if !g.is_r_regular(r) {
        report.reason = Some(if r == 3 {
            "not cubic".into()
        } else {
            format!("not {r}-regular")
        });
        return Ok(report);
    }
    let decision = if r == 3 {
        decide_s12_traced(&g, &opts.limits)
    } else {
        decide_s1r_traced(&g, r, &opts.limits)
    }
    .map_err(scale_or_other)?;

    match decision.certificate {
        Some(cert) => {
            verify_certificate(&g, &cert, r).map_err(|e| {
                anyhow::anyhow!("internal error: certificate failed verification: {e}")
            })?;
            let centers = cert.centers();
            if r == 3 {
                report.necessary =
                    Some(necessary_conditions(&g, &centers).map_err(scale_or_other)?);
            }
            report.decision = Verdict::Yes;
            report.centers = Some(centers.vertices().to_vec());
            report.certificate = Some(cert);
        }
        None => {
            report.decision = Verdict::No;
            report.reason = decision.refusal.map(|f| refusal_text(&f, r));
        }
    }
    Ok(report)
}

pub fn render_text(report: &CheckReport, emit_cert: bool) -> String {
    let mut out = format!("graph: n={} m={}\n", report.n, report.m);
    let label = decision_label(report.r);
    match &report.reason {
        Some(reason) => out += &format!("{label}: {} ({reason})\n", report.decision),
        None => out += &format!("{label}: {}\n", report.decision),
    }
    if let Some(cert) = &report.certificate {
        out += &format!("stars: {}\n", cert.stars.len());
    }
    if let Some(centers) = &report.centers {
        out += &format!("centers: {centers:?}\n");
    }
    if let Some(nc) = &report.necessary {
        out += &format!(
            "necessary: divisible_by_8={} independent_ok={} size_ok={} components_ok={} no_two_3vertices={} pendant_set_exists={}\n",
            nc.divisible_by_8, nc.independent_ok, nc.size_ok, nc.components_ok, nc.no_two_3vertices, nc.pendant_set_exists
        );
    }
    if let Some(s11) = report.s11 {
        out += &format!("s11: {}\n", if s11 { "yes" } else { "no" });
    }
    if emit_cert {
        if let Some(cert) = &report.certificate {
            out += &format!("certificate: {}\n", cert.to_json());
        }
    }
    out
}

pub fn render_json(report: &CheckReport, emit_cert: bool) -> String {
    let mut value = serde_json::to_value(report).expect("report serializes");
    value["v"] = crate::survey::RECORD_VERSION.into();
    if emit_cert {
        if let Some(cert) = &report.certificate {
            value["certificate"] =
                serde_json::from_str(&cert.to_json()).expect("certificate is JSON");
        }
    }
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_rejected_by_order() {
        let report = check("C~", &Options::default()).unwrap();
        assert_eq!(report.decision, Verdict::No);
        let text = render_text(&report, false);
        assert!(
            text.contains("s12: no (order not divisible by 8)"),
            "{text}"
        );
        assert!(text.contains("s11: yes"));
    }

    #[test]
    fn q3_is_accepted() {
        let report = check("GsXP_[", &Options::default()).unwrap();
        assert_eq!(report.decision, Verdict::Yes);
        assert_eq!(report.certificate.as_ref().unwrap().stars.len(), 3);
        assert!(report.necessary.unwrap().all());
        let text = render_text(&report, true);
        assert!(text.contains("s12: yes"));
        assert!(text.contains("certificate: {\"v\":1,\"order\":8,\"r\":3,"));
        let json: serde_json::Value = serde_json::from_str(&render_json(&report, true)).unwrap();
        assert_eq!(json["decision"], "yes");
        assert_eq!(json["certificate"]["stars"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn petersen_is_rejected() {
        let petersen = stardecomp::graph6::encode_graph6(&stardecomp::Graph::petersen()).unwrap();
        let report = check(&petersen, &Options::default()).unwrap();
        assert!(render_text(&report, false).contains("s12: no"));
    }

    #[test]
    fn error_exit_codes() {
        let err = check("C~~", &Options::default()).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PARSE);
        let mut opts = Options::default();
        opts.limits.max_component_order = 4;
        let err = check("GsXP_[", &opts).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_SCALE);
    }

    #[test]
    fn non_regular_input_is_skipped() {
        let report = check("Bw", &Options::default()).unwrap();
        assert_eq!(report.decision, Verdict::Skipped);
        assert_eq!(report.reason.as_deref(), Some("not cubic"));
    }

    #[test]
    fn other_degrees() {
        let k5 = stardecomp::graph6::encode_graph6(&stardecomp::Graph::complete(5)).unwrap();
        let opts = Options {
            r: 4,
            ..Options::default()
        };
        let report = check(&k5, &opts).unwrap();
        assert!(render_text(&report, false).starts_with("graph: n=5 m=10\ns13: "));
    }
}
