//! K-graphs (subdivisions of K4 or K2,3) avoiding both terminals and lying
//! inside a Kuratowski subgraph.

use std::collections::HashSet;

use serde::Serialize;

use super::{classify_subdivision, is_outerplanar, kuratowski_subgraph, planar, KuratowskiSubgraph};
use crate::embedding::Budget;
use crate::error::Result;
use crate::graph::{SimpleGraph, TerminalGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KGraphKind {
    K4,
    K23,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KGraphWitness {
    pub kind: KGraphKind,
    pub edges: Vec<(usize, usize)>,
    pub branch_vertices: Vec<usize>,
    /// A Kuratowski subgraph of the input containing the K-graph.
    pub extension: KuratowskiSubgraph,
}

impl KGraphWitness {
    /// Re-checks the witness against `g`.
    pub fn verify(&self, g: &TerminalGraph) -> bool {
        let avoids = self.edges.iter().all(|&(a, b)| !g.is_terminal(a) && !g.is_terminal(b));
        let inside = self.edges.iter().all(|e| self.extension.edges.contains(e));
        let ext_ok = self.extension.edges.iter().all(|&(a, b)| g.graph().has_edge(a, b))
            && classify_subdivision(&self.extension.edges).is_some();
        avoids && inside && ext_ok && classify_k_graph(&self.edges).map(|(k, _)| k) == Some(self.kind)
    }
}

/// Names a subdivision of K4 or K2,3 given as an edge list.
pub fn classify_k_graph(edges: &[(usize, usize)]) -> Option<(KGraphKind, Vec<usize>)> {
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max()?;
    let g = SimpleGraph::from_edges(n, edges).ok()?;
    let used: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    if used.iter().any(|&v| g.degree(v) < 2 || g.degree(v) > 3) || !connected_on(&g, &used) {
        return None;
    }
    let branch: Vec<usize> = used.iter().copied().filter(|&v| g.degree(v) == 3).collect();
    // Trace branch paths between degree-3 vertices.
    let mut paths: Vec<(usize, usize, usize)> = Vec::new();
    for &b in &branch {
        for w in g.neighbors(b) {
            let (mut prev, mut cur, mut len) = (b, w, 1);
            while g.degree(cur) == 2 {
                let nxt = g.neighbors(cur).find(|&z| z != prev)?;
                prev = cur;
                cur = nxt;
                len += 1;
            }
            if cur == b {
                return None;
            }
            if b < cur {
                paths.push((b, cur, len));
            }
        }
    }
    match branch.len() {
        4 => {
            let mut ends: Vec<(usize, usize)> = paths.iter().map(|&(a, b, _)| (a, b)).collect();
            ends.sort_unstable();
            ends.dedup();
            (ends.len() == 6 && paths.len() == 6).then_some((KGraphKind::K4, branch))
        }
        2 => (paths.len() == 3 && paths.iter().all(|&(_, _, l)| l >= 2)).then_some((KGraphKind::K23, branch)),
        _ => None,
    }
}

fn connected_on(g: &SimpleGraph, used: &[usize]) -> bool {
    let Some(&s) = used.first() else { return false };
    let mask = used.iter().fold(0u32, |m, &v| m | 1 << v);
    g.reach(s, mask) == mask
}

fn without_terminals(g: &SimpleGraph, x: usize, y: usize) -> SimpleGraph {
    let mut h = g.clone();
    for v in [x, y] {
        for w in g.neighbors(v) {
            let _ = h.remove_edge(v, w);
        }
    }
    h
}

type Extracted = (KGraphKind, Vec<(usize, usize)>, Vec<usize>);

/// Edge-minimal non-outerplanar subgraph, classified.
fn extract_k_graph(h: &SimpleGraph) -> Option<Extracted> {
    if is_outerplanar(h) {
        return None;
    }
    let mut s = h.clone();
    for (u, v) in h.edges() {
        s.remove_edge(u, v).expect("present");
        if is_outerplanar(&s) {
            s.add_edge(u, v).expect("restore");
        }
    }
    let edges = s.edges();
    let (kind, branch) = classify_k_graph(&edges)?;
    Some((kind, edges, branch))
}

fn witness_in(k: KuratowskiSubgraph, x: usize, y: usize) -> Option<KGraphWitness> {
    let n = k.edges.iter().map(|&(a, b)| a.max(b) + 1).max()?.max(x + 1).max(y + 1);
    let kg = SimpleGraph::from_edges(n, &k.edges).ok()?;
    let (kind, edges, branch_vertices) = extract_k_graph(&without_terminals(&kg, x, y))?;
    Some(KGraphWitness { kind, edges, branch_vertices, extension: k })
}

/// Searches for a K-graph avoiding `x` and `y` that extends to a Kuratowski
/// subgraph of `g`, i.e. a Kuratowski subgraph `K` such that `K - x - y` is
/// not outerplanar. Each explored subgraph costs one budget unit.
pub fn find_k_graph_disjoint(g: &TerminalGraph, budget: &mut Budget) -> Result<Option<KGraphWitness>> {
    let (x, y) = (g.x(), g.y());
    let base = g.graph();
    if planar(base) {
        return Ok(None);
    }
    for v in [x, y] {
        let mut h = base.clone();
        for w in base.neighbors(v) {
            h.remove_edge(v, w)?;
        }
        if let Some(k) = kuratowski_subgraph(&h) {
            return Ok(witness_in(k, x, y));
        }
    }
    let good = |s: &SimpleGraph| !planar(s) && !is_outerplanar(&without_terminals(s, x, y));
    if !good(base) {
        return Ok(None);
    }
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut stack = vec![base.clone()];
    while let Some(s) = stack.pop() {
        budget.tick()?;
        let mut minimal = true;
        for (u, v) in s.edges() {
            let mut t = s.clone();
            t.remove_edge(u, v)?;
            if good(&t) {
                minimal = false;
                if seen.insert(t.edges()) {
                    stack.push(t);
                }
            }
        }
        if minimal {
            if let Some(k) = classify_subdivision(&s.edges()) {
                if let Some(w) = witness_in(k, x, y) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}
