//! Plain-text embedding format.
//!
//! ```text
//! n 4 m 6
//! e 0 1 +1      # edge 0, darts 0 (at 0) and 1 (at 1)
//! ...
//! r 0 0 4 2     # rotation at vertex 0, as dart ids
//! t 0 1         # optional terminals
//! ```

use super::RotationEmbedding;
use crate::error::{parse_err, Result};
use crate::graph::MultiGraph;

pub fn write_embedding(emb: &RotationEmbedding, terminals: Option<(usize, usize)>) -> String {
    let mut s = format!("n {} m {}\n", emb.n(), emb.edge_count());
    for (e, &(u, v)) in emb.host().edges.iter().enumerate() {
        s.push_str(&format!("e {u} {v} {:+}\n", emb.sign(e)));
    }
    for v in 0..emb.n() {
        let r: Vec<String> = emb.rotation(v).iter().map(|d| d.to_string()).collect();
        s.push_str(format!("r {v} {}\n", r.join(" ")).trim_end());
        s.push('\n');
    }
    if let Some((x, y)) = terminals {
        s.push_str(&format!("t {x} {y}\n"));
    }
    s
}

pub fn parse_embedding(text: &str) -> Result<(RotationEmbedding, Option<(usize, usize)>)> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut signs = Vec::new();
    let mut rots: Vec<Option<Vec<usize>>> = Vec::new();
    let mut terms = None;
    let num = |t: &str, ln: usize| -> Result<usize> {
        t.parse().map_err(|_| parse_err(ln, format!("expected a number, found `{t}`")))
    };
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "n" => {
                if toks.len() != 4 || toks[2] != "m" {
                    return Err(parse_err(ln, "header must be `n <n> m <m>`"));
                }
                let nv = num(toks[1], ln)?;
                n = Some((nv, num(toks[3], ln)?));
                rots = vec![None; nv];
            }
            "e" => {
                if toks.len() != 4 {
                    return Err(parse_err(ln, "edge line must be `e u v sign`"));
                }
                edges.push((num(toks[1], ln)?, num(toks[2], ln)?));
                signs.push(match toks[3] {
                    "+1" | "1" | "+" => 1,
                    "-1" | "-" => -1,
                    t => return Err(parse_err(ln, format!("bad sign `{t}`"))),
                });
            }
            "r" => {
                let (nv, _) = n.ok_or_else(|| parse_err(ln, "rotation before header"))?;
                if toks.len() < 2 {
                    return Err(parse_err(ln, "rotation line must be `r v darts...`"));
                }
                let v = num(toks[1], ln)?;
                if v >= nv {
                    return Err(parse_err(ln, format!("vertex {v} out of range")));
                }
                if rots[v].is_some() {
                    return Err(parse_err(ln, format!("second rotation for vertex {v}")));
                }
                rots[v] = Some(toks[2..].iter().map(|t| num(t, ln)).collect::<Result<_>>()?);
            }
            "t" => {
                if toks.len() != 3 {
                    return Err(parse_err(ln, "terminal line must be `t x y`"));
                }
                terms = Some((num(toks[1], ln)?, num(toks[2], ln)?));
            }
            other => return Err(parse_err(ln, format!("unknown record `{other}`"))),
        }
    }
    let (nv, m) = n.ok_or_else(|| parse_err(1, "missing header"))?;
    let last = text.lines().count().max(1);
    if edges.len() != m {
        return Err(parse_err(last, format!("header says {m} edges, found {}", edges.len())));
    }
    let host = MultiGraph::new(nv, edges).map_err(|e| parse_err(1, e.to_string()))?;
    let rots: Vec<Vec<usize>> = rots.into_iter().map(|r| r.unwrap_or_default()).collect();
    let emb = RotationEmbedding::from_rotations(host, &rots, signs).map_err(|e| parse_err(last, e.to_string()))?;
    emb.validate().map_err(|e| parse_err(last, e.to_string()))?;
    Ok((emb, terms))
}
