//! graph6 encoding for orders up to 62 (single-byte order header).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six
//! bits per byte (most significant first), zero-padded, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + OFFSET) as char);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if let Some((pos, &b)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(OFFSET..=126).contains(&b))
    {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} at offset {pos} is not a graph6 character"
        )));
    }
    let Some(&header) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if header == 126 {
        return Err(Error::Graph6(format!(
            "multi-byte order header (order > {MAX_ORDER}) is not supported"
        )));
    }
    let n = (header - OFFSET) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let pairs = n * (n - 1) / 2;
    let payload = &bytes[1..];
    let expected = pairs.div_ceil(6);
    if payload.len() < expected {
        return Err(Error::Graph6(format!(
            "truncated payload: order {n} needs {expected} bytes, found {}",
            payload.len()
        )));
    }
    if payload.len() > expected {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after payload",
            payload.len() - expected
        )));
    }

    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
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
    Graph::from_edge_list(n, &edges)
}
