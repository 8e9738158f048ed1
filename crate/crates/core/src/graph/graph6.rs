//! graph6 codec (short and 3-byte long order forms).
//!
//! The adjacency bit vector lists the upper triangle column by column:
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per printable byte,
//! most significant bit first, zero-padded to a full byte.

use super::Graph;
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";

/// Largest order expressible with the 3-byte order prefix.
pub const MAX_ORDER: usize = (1 << 18) - 1;

const BIAS: u8 = 63;

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if body.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(pos) = body.iter().position(|&c| !(BIAS..=126).contains(&c)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {:#04x} at offset {pos} is outside 63..=126",
            body[pos]
        )));
    }
    let (n, data) = if body[0] < 126 {
        ((body[0] - BIAS) as usize, &body[1..])
    } else if body.get(1) == Some(&126) {
        // 6-byte order form, only used for n >= 2^18
        return Err(Error::UnsupportedSize(MAX_ORDER + 1));
    } else {
        if body.len() < 4 {
            return Err(Error::MalformedGraph6("truncated order prefix".into()));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &c| (acc << 6) | (c - BIAS) as usize);
        if n < 63 {
            return Err(Error::MalformedGraph6(format!(
                "order {n} must use the one-byte form"
            )));
        }
        (n, &body[4..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            data.len()
        )));
    }

    let bit = |k: usize| (data[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::MalformedGraph6("non-zero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize(n));
    }
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|shift| ((n >> shift) & 0x3f) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
