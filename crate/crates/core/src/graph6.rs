//! graph6 encoding, compatible with nauty's `geng` output.
//!
//! A graph is written as its order followed by the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! six bits per byte, most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_order(out: &mut String, n: usize) {
    let push6 = |out: &mut String, n: usize, groups: u32| {
        for k in (0..groups).rev() {
            out.push(char::from(BIAS + ((n >> (6 * k)) & 0x3f) as u8));
        }
    };
    if n <= 62 {
        out.push(char::from(BIAS + n as u8));
    } else if n <= 258_047 {
        out.push('~');
        push6(out, n, 3);
    } else {
        out.push_str("~~");
        push6(out, n, 6);
    }
}

/// Encodes `g` as a single graph6 line (without the trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(BIAS + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(BIAS + (acc << (6 - filled))));
    }
    out
}

fn sextet(b: u8) -> Result<u8> {
    if (BIAS..=BIAS + 63).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(Error::Graph6(format!(
            "byte {b:#04x} outside the graph6 range"
        )))
    }
}

fn read_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let take = |from: usize, groups: usize| -> Result<usize> {
        let slice = bytes
            .get(from..from + groups)
            .ok_or_else(|| Error::Graph6("truncated order field".into()))?;
        slice
            .iter()
            .try_fold(0usize, |acc, &b| Ok(acc << 6 | usize::from(sextet(b)?)))
    };
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [b'~', b'~', ..] => Ok((take(2, 6)?, 8)),
        [b'~', ..] => Ok((take(1, 3)?, 4)),
        [b, ..] => Ok((usize::from(sextet(*b)?), 1)),
    }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored; padding bits must be zero.
pub fn decode(line: &str) -> Result<Graph> {
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header_len) = read_order(bytes)?;
    if n == 0 {
        return Err(Error::Graph6("order 0 graphs are not supported".into()));
    }
    let bits = n * (n - 1) / 2;
    let body = &bytes[header_len..];
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "order {n} needs {} data bytes, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let data = body
        .iter()
        .map(|&b| sextet(b))
        .collect::<Result<Vec<u8>>>()?;
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..data.len() * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
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
    Graph::new(n, edges)
}
