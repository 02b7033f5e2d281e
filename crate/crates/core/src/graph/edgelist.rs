//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`
//! (0-based). `#` starts a comment that runs to the end of the line.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    // (line number, tokens with 1-based columns)
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(body);
        (!tokens.is_empty()).then_some((i + 1, tokens))
    });

    let Some((hline, header)) = lines.next() else {
        return Err(parse_err(1, 1, "missing header line `n m`"));
    };
    if header.len() != 2 {
        let col = header.get(2).map_or(header[0].0, |t| t.0);
        return Err(parse_err(hline, col, "header must be exactly `n m`"));
    }
    let n = number(hline, header[0])?;
    let m = number(hline, header[1])?;

    let mut edges = Vec::with_capacity(m);
    for (line, tokens) in lines.by_ref() {
        if edges.len() == m {
            return Err(parse_err(
                line,
                tokens[0].0,
                format!("more than the {m} edges announced in the header"),
            ));
        }
        if tokens.len() != 2 {
            let col = tokens.get(2).map_or(tokens[0].0, |t| t.0);
            return Err(parse_err(line, col, "edge line must be exactly `u v`"));
        }
        let u = number(line, tokens[0])?;
        let v = number(line, tokens[1])?;
        for (w, col) in [(u, tokens[0].0), (v, tokens[1].0)] {
            if w >= n {
                return Err(parse_err(
                    line,
                    col,
                    format!("vertex {w} out of range for order {n}"),
                ));
            }
        }
        if u == v {
            return Err(parse_err(
                line,
                tokens[0].0,
                format!("self-loop at vertex {u}"),
            ));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        let last = text.lines().count().max(1);
        return Err(parse_err(
            last,
            1,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges).map_err(|e| parse_err(hline, header[0].0, e.to_string()))
}

pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn number(line: usize, (column, tok): (usize, &str)) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            column,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}
