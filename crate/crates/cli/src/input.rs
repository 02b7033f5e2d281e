//! Reading a graph from a file or stdin, in either edge-list or graph6 form.

use std::io::Read;

use domkit::graph::{graph6_decode, parse_edge_list};
use domkit::{Error, Graph};

/// Reads `path` (`-` for stdin) and parses it.
pub fn read_graph(path: &str) -> Result<Graph, String> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    parse_graph(&text).map_err(|e| {
        if path == "-" {
            e
        } else {
            format!("{path}: {e}")
        }
    })
}

/// Blank lines and lines starting with `#` are skipped. A first remaining line
/// starting with a digit is an edge-list header; anything else is graph6. The
/// graph6 alphabet (`?` to `~`) has no digits, so the two never overlap.
pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((line_no, first)) = lines.next() else {
        return Err("input contains no graph".into());
    };
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        return parse_edge_list(text).map_err(|e| e.to_string());
    }
    if let Some((extra, _)) = lines.next() {
        return Err(format!("line {extra}: expected a single graph6 line"));
    }
    graph6_decode(first).map_err(|e| match e {
        Error::Graph6(msg) => format!("line {line_no}: invalid graph6: {msg}"),
        other => format!("line {line_no}: {other}"),
    })
}
