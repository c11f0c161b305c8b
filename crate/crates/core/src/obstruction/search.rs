//! Exhaustive search for obstructions on a fixed number of vertices.
//!
//! Graphs are grown one edge at a time from the edgeless graph, keeping one
//! canonical representative per isomorphism class at each edge count. Only
//! members are extended: a proper supergraph of a non-member has a
//! non-member edge deletion and cannot be an obstruction. The previous
//! level holds every member with one edge fewer, so a graph with a deletion
//! missing from it is a non-member and needs neither decider nor verifier.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{verify_obstruction, Catalog, CatalogEntry};
use crate::alternation::is_member_a1;
use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, TerminalGraph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    /// Vertex bound, terminals included.
    pub max_n: usize,
    /// Keep only graphs with the edge `xy`.
    pub require_xy_edge: bool,
    /// Least degree of a non-terminal vertex in a reported obstruction.
    pub min_degree: usize,
    /// Stop after this many distinct graphs; the catalog is then marked incomplete.
    pub max_graphs: Option<u64>,
}

impl SearchConstraints {
    pub fn new(max_n: usize) -> Self {
        SearchConstraints { max_n, require_xy_edge: false, min_degree: 3, max_graphs: None }
    }
}

/// Removes isolated non-terminal vertices.
fn strip(g: &TerminalGraph) -> TerminalGraph {
    let gr = g.graph();
    let keep = (0..g.n()).filter(|&v| g.is_terminal(v) || gr.degree(v) > 0).fold(0u32, |m, v| m | 1 << v);
    let (h, old) = gr.induced(keep);
    let at = |t: usize| old.iter().position(|&o| o == t).expect("terminal kept");
    TerminalGraph::new(h, at(g.x()), at(g.y())).expect("distinct terminals")
}

/// Whether every edge deletion (other than `xy` when it is required) is a
/// known member.
fn deletions_are_members(g: &TerminalGraph, members: &HashSet<CanonicalForm>, keep_xy: bool) -> bool {
    g.edges().into_iter().all(|(u, v)| {
        if keep_xy && g.is_terminal(u) && g.is_terminal(v) {
            return true;
        }
        let mut h = g.clone();
        h.remove_edge(u, v).expect("edge present");
        members.contains(&h.canonical_form())
    })
}

fn children(g: &TerminalGraph) -> Vec<CanonicalForm> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.graph().has_edge(u, v) {
                let mut h = g.clone();
                h.add_edge(u, v).expect("valid");
                out.push(h.canonical_form());
            }
        }
    }
    out
}

/// All obstructions with at most `max_n` vertices meeting the constraints,
/// sorted by vertex count, edge count and canonical form.
pub fn search_obstructions(c: &SearchConstraints) -> Result<Catalog> {
    if c.max_n < 2 || c.max_n + 3 > MAX_VERTICES {
        return Err(Error::Precondition(format!("max_n must lie in 2..={}", MAX_VERTICES - 3)));
    }
    let mut start = TerminalGraph::new(SimpleGraph::new(c.max_n)?, 0, 1)?;
    if c.require_xy_edge {
        start.add_edge(0, 1)?;
    }
    let mut level = vec![start.canonical_form().terminal_graph()];
    let mut found: Vec<CanonicalForm> = Vec::new();
    let mut seen: u64 = 1;
    let mut complete = true;
    while !level.is_empty() {
        let members: HashSet<CanonicalForm> = level.par_iter().map(|g| g.canonical_form()).collect();
        let mut next: Vec<CanonicalForm> = level.par_iter().flat_map_iter(children).collect();
        next.par_sort_unstable();
        next.dedup();
        seen += next.len() as u64;
        if c.max_graphs.is_some_and(|m| seen > m) {
            complete = false;
            break;
        }
        // A graph with a non-member deletion is a non-member and not minimal.
        let judged: Vec<(TerminalGraph, bool, bool)> = next
            .into_par_iter()
            .map(|cf| {
                let g = cf.terminal_graph();
                if !deletions_are_members(&g, &members, c.require_xy_edge) {
                    return Ok((g, false, false));
                }
                is_member_a1(&g).map(|m| (g, m, !m))
            })
            .collect::<Result<_>>()?;
        let candidates: Vec<CanonicalForm> = judged
            .par_iter()
            .filter(|(_, _, candidate)| *candidate)
            .map(|(g, _, _)| strip(g))
            .filter(|g| (0..g.n()).all(|v| g.is_terminal(v) || g.graph().degree(v) >= c.min_degree))
            .map(|g| verify_obstruction(&g).map(|v| v.is_obstruction.then(|| g.canonical_form())))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        found.extend(candidates);
        level = judged.into_iter().filter(|(_, m, _)| *m).map(|(g, _, _)| g).collect();
    }
    found.sort_by(|a, b| (a.n(), a.graph().edge_count(), a).cmp(&(b.n(), b.graph().edge_count(), b)));
    found.dedup();
    let entries = found
        .into_iter()
        .map(|cf| {
            let g = cf.terminal_graph();
            CatalogEntry::named(g)
        })
        .collect();
    let mut cat = Catalog { entries, complete };
    cat.number_names();
    Ok(cat)
}
