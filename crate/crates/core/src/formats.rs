//! Text formats for terminal graphs.
//!
//! Native format: the first non-comment line is `n x y`, every further line
//! is an edge `u v`. `#` starts a comment. Alternatively a file may hold a
//! graph6 string on one line plus a `terminals: x y` line.

use crate::error::{parse_err, Error, Result};
use crate::graph::{SimpleGraph, TerminalGraph, MAX_VERTICES};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a number, found `{tok}`")))
}

/// Parses either the native format or graph6 with a `terminals:` sidecar.
pub fn parse_terminal_graph(text: &str) -> Result<TerminalGraph> {
    if text.lines().any(|l| l.trim_start().starts_with("terminals:")) {
        return parse_graph6_with_terminals(text);
    }
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(parse_err(hl, "header must be `n x y`"));
    }
    let n = parse_usize(toks[0], hl)?;
    let x = parse_usize(toks[1], hl)?;
    let y = parse_usize(toks[2], hl)?;
    let mut g = SimpleGraph::new(n).map_err(|e| parse_err(hl, e.to_string()))?;
    for (ln, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(ln, "edge line must be `u v`"));
        }
        let u = parse_usize(toks[0], ln)?;
        let v = parse_usize(toks[1], ln)?;
        if g.has_edge(u, v) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    TerminalGraph::new(g, x, y).map_err(|e| parse_err(hl, e.to_string()))
}

fn parse_graph6_with_terminals(text: &str) -> Result<TerminalGraph> {
    let mut g = None;
    let mut terms = None;
    for (ln, l) in content_lines(text) {
        if let Some(rest) = l.strip_prefix("terminals:") {
            let t: Vec<&str> = rest.split_whitespace().collect();
            if t.len() != 2 {
                return Err(parse_err(ln, "expected `terminals: x y`"));
            }
            terms = Some((parse_usize(t[0], ln)?, parse_usize(t[1], ln)?, ln));
        } else if g.is_none() {
            g = Some(decode_graph6(l).map_err(|e| match e {
                Error::Parse { msg, .. } => parse_err(ln, msg),
                other => parse_err(ln, other.to_string()),
            })?);
        } else {
            return Err(parse_err(ln, "unexpected extra line"));
        }
    }
    let g = g.ok_or_else(|| parse_err(1, "missing graph6 line"))?;
    let (x, y, ln) = terms.ok_or_else(|| parse_err(1, "missing terminals line"))?;
    TerminalGraph::new(g, x, y).map_err(|e| parse_err(ln, e.to_string()))
}

/// Native format, edges in lexicographic order.
pub fn write_terminal_graph(g: &TerminalGraph) -> String {
    let mut s = format!("{} {} {}\n", g.n(), g.x(), g.y());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Native format of the canonical relabelling (terminals are 0 and 1).
pub fn write_canonical(g: &TerminalGraph) -> String {
    write_terminal_graph(&g.canonical_form().terminal_graph())
}

/// graph6 encoding (graphs here have at most 32 vertices, so `N(n)` is one byte).
pub fn encode_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}

pub fn decode_graph6(s: &str) -> Result<SimpleGraph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let first = *bytes.first().ok_or_else(|| parse_err(1, "empty graph6 string"))?;
    if !(63..=126).contains(&first) {
        return Err(parse_err(1, "invalid graph6 size byte"));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(parse_err(1, format!("graph6 graph has {n} vertices, limit is {MAX_VERTICES}")));
    }
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let body = &bytes[1..];
    if body.len() != need {
        return Err(parse_err(1, format!("graph6 body has {} bytes, expected {need}", body.len())));
    }
    let mut g = SimpleGraph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6];
            if !(63..=126).contains(&b) {
                return Err(parse_err(1, "invalid graph6 character"));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
