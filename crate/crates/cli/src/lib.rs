//! Command implementations behind the `stardecomp` binary. Each command
//! writes to a caller-supplied sink so it can be driven from tests.

pub mod check;
pub mod corpus;
pub mod hunt;
pub mod oracle;
pub mod survey;

use std::time::Duration;

use stardecomp::SearchLimits;

/// Environment variable overriding the exhaustive-search component cap.
pub const SCALE_ENV: &str = "STARDECOMP_SCALE_MAX";

/// Exit status for unparsable graph6 input.
pub const EXIT_PARSE: i32 = 2;
/// Exit status when a graph exceeds the exhaustive-search cap.
pub const EXIT_SCALE: i32 = 3;

/// Options shared by every subcommand.
#[derive(Clone, Debug)]
pub struct Options {
    pub r: usize,
    pub limits: SearchLimits,
    pub emit_cert: bool,
    pub jobs: Option<usize>,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            r: 3,
            limits: SearchLimits::default(),
            emit_cert: false,
            jobs: None,
            seed: 0,
        }
    }
}

impl Options {
    /// Reads the scale cap from the environment, falling back to the default.
    pub fn limits_from_env() -> anyhow::Result<SearchLimits> {
        match std::env::var(SCALE_ENV) {
            Ok(v) => Ok(SearchLimits {
                max_component_order: v
                    .trim()
                    .parse()
                    .map_err(|e| anyhow::anyhow!("{SCALE_ENV}={v:?}: {e}"))?,
            }),
            Err(_) => Ok(SearchLimits::default()),
        }
    }

    pub(crate) fn pool(&self) -> anyhow::Result<rayon::ThreadPool> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = self.jobs {
            builder = builder.num_threads(jobs);
        }
        Ok(builder.build()?)
    }
}

/// Decision label for the chosen `r`: `s12` for cubic graphs, `s13` for
/// 4-regular ones, and so on.
pub fn decision_label(r: usize) -> String {
    format!("s1{}", r - 1)
}

pub(crate) fn millis(d: Duration) -> u64 {
    d.as_millis().try_into().unwrap_or(u64::MAX)
}

/// Human-readable reason for a negative or skipped decision.
pub(crate) fn refusal_text(refusal: &stardecomp::Refusal, r: usize) -> String {
    match refusal {
        stardecomp::Refusal::OrderNotDivisible { .. } if r == 3 => {
            "order not divisible by 8".to_string()
        }
        stardecomp::Refusal::OrderNotDivisible { .. } => {
            format!("2(r+1) does not divide r*n for r = {r}")
        }
        stardecomp::Refusal::NoCenterSet => "no center set admits a decomposition".to_string(),
    }
}
