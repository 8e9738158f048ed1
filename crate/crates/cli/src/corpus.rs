//! Corpus sources: graph6 files or a seeded random generator.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use stardecomp::{graph6, random_cubic};

/// One input graph together with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusLine {
    pub index: usize,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    /// `random:n=<N>,count=<C>,seed=<S>`; graph `i` uses seed `S + i`.
    Random {
        n: usize,
        count: usize,
        seed: u64,
    },
}

impl Source {
    /// Parses a generator spec, or treats the argument as a file path. A
    /// spec without `seed=` uses `default_seed`.
    pub fn parse(arg: &str, default_seed: u64) -> anyhow::Result<Source> {
        let Some(spec) = arg.strip_prefix("random:") else {
            return Ok(Source::File(PathBuf::from(arg)));
        };
        let (mut n, mut count, mut seed) = (None, None, default_seed);
        for part in spec.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .with_context(|| format!("expected key=value in generator spec, got {part:?}"))?;
            match key.trim() {
                "n" => n = Some(value.trim().parse()?),
                "count" => count = Some(value.trim().parse()?),
                "seed" => seed = value.trim().parse()?,
                other => bail!("unknown generator key {other:?}"),
            }
        }
        Ok(Source::Random {
            n: n.context("generator spec needs n=<order>")?,
            count: count.context("generator spec needs count=<graphs>")?,
            seed,
        })
    }

    pub fn load(&self) -> anyhow::Result<Vec<CorpusLine>> {
        match self {
            Source::File(path) => read_corpus(path),
            Source::Random { n, count, seed } => (0..*count)
                .map(|i| {
                    let g = random_cubic(*n, seed.wrapping_add(i as u64))?;
                    Ok(CorpusLine {
                        index: i + 1,
                        text: graph6::encode_graph6(&g)?,
                    })
                })
                .collect(),
        }
    }
}

/// Non-empty lines of a graph6 file; a bare `>>graph6<<` header line is
/// skipped and line numbers are preserved.
pub fn read_corpus(path: &Path) -> anyhow::Result<Vec<CorpusLine>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_corpus(&text))
}

pub fn parse_corpus(text: &str) -> Vec<CorpusLine> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end()))
        .filter(|(_, line)| !line.is_empty() && *line != graph6::HEADER)
        .map(|(index, line)| CorpusLine {
            index,
            text: line.to_string(),
        })
        .collect()
}
