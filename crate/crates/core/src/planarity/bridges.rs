//! Bridges of a subgraph, overlap graphs of cycle bridges, supports on segments.

use serde::Serialize;

use super::planar;
use crate::error::{Error, Result};
use crate::graph::{bits, SimpleGraph};

/// An `H`-bridge: a single edge outside `H` with both ends in `H`, or a
/// component of `G - V(H)` together with its edges to `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bridge {
    pub interior: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub attachments: Vec<usize>,
}

impl Bridge {
    fn attachment_mask(&self) -> u32 {
        self.attachments.iter().fold(0, |m, &v| m | 1 << v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeDecomposition {
    pub h_vertices: Vec<usize>,
    pub h_edges: Vec<(usize, usize)>,
    pub bridges: Vec<Bridge>,
}

/// Bridges of the subgraph with vertex set `h_vertices` (given as a mask,
/// endpoints of `h_edges` are added) and edge set `h_edges`.
pub fn bridges_of(g: &SimpleGraph, h_vertices: u32, h_edges: &[(usize, usize)]) -> Result<BridgeDecomposition> {
    let n = g.n();
    let mut hv = h_vertices;
    let mut hadj = vec![0u32; n];
    for &(a, b) in h_edges {
        if !g.has_edge(a, b) {
            return Err(Error::MissingEdge(a, b));
        }
        hv |= 1 << a | 1 << b;
        hadj[a] |= 1 << b;
        hadj[b] |= 1 << a;
    }
    if hv & !g.all_vertices() != 0 {
        return Err(Error::VertexOutOfRange(31 - (hv & !g.all_vertices()).leading_zeros() as usize));
    }
    let mut out = Vec::new();
    for u in bits(hv) {
        for w in bits(g.mask(u) & hv & !hadj[u]) {
            if u < w {
                out.push(Bridge { interior: Vec::new(), edges: vec![(u, w)], attachments: vec![u, w] });
            }
        }
    }
    let mut rest = g.all_vertices() & !hv;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        let comp = g.reach(s, g.all_vertices() & !hv);
        rest &= !comp;
        let mut edges = Vec::new();
        let mut att = 0u32;
        for v in bits(comp) {
            for w in g.neighbors(v) {
                if comp & (1 << w) != 0 {
                    if v < w {
                        edges.push((v, w));
                    }
                } else {
                    att |= 1 << w;
                    edges.push((v.min(w), v.max(w)));
                }
            }
        }
        edges.sort_unstable();
        out.push(Bridge { interior: bits(comp).collect(), edges, attachments: bits(att).collect() });
    }
    let mut h_edges: Vec<(usize, usize)> = h_edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    h_edges.sort_unstable();
    Ok(BridgeDecomposition { h_vertices: bits(hv).collect(), h_edges, bridges: out })
}

/// Branches of `H`: maximal paths whose interior vertices have degree 2 in `H`.
fn branches(d: &BridgeDecomposition) -> Vec<Vec<usize>> {
    let n = d.h_vertices.iter().max().map_or(0, |&v| v + 1);
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &d.h_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let is_branch_vertex = |v: usize| adj[v].len() != 2;
    let mut out = Vec::new();
    for &s in &d.h_vertices {
        if !is_branch_vertex(s) {
            continue;
        }
        for &w in &adj[s] {
            let mut path = vec![s];
            let (mut prev, mut cur) = (s, w);
            while !is_branch_vertex(cur) {
                path.push(cur);
                let nxt = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = nxt;
            }
            path.push(cur);
            // Each branch is found from both ends; keep one.
            if (s, path[1]) <= (cur, path[path.len() - 2]) {
                out.push(path);
            }
        }
    }
    out
}

/// True iff all attachments of `bridge` lie on one branch of `H`. A subgraph
/// with no vertex of degree other than 2 (a disjoint union of cycles) has no
/// branches, so no bridge is local to it.
pub fn is_local(bridge: &Bridge, h: &BridgeDecomposition) -> bool {
    let att = bridge.attachment_mask();
    branches(h).iter().any(|p| {
        let m = p.iter().fold(0u32, |m, &v| m | 1 << v);
        att & m == att
    })
}

/// A path in `H`, listed from one end to the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment(pub Vec<usize>);

/// Smallest subsegment of `segment` containing every attachment of `bridge`.
pub fn support_of(bridge: &Bridge, segment: &Segment) -> Result<Segment> {
    let mut lo = usize::MAX;
    let mut hi = 0;
    for &a in &bridge.attachments {
        let p = segment.0.iter().position(|&v| v == a).ok_or(Error::AttachmentOutsideSegment(a))?;
        lo = lo.min(p);
        hi = hi.max(p);
    }
    if lo == usize::MAX {
        return Err(Error::Precondition("bridge has no attachments".into()));
    }
    Ok(Segment(segment.0[lo..=hi].to_vec()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapGraph {
    pub bridges: usize,
    pub edges: Vec<(usize, usize)>,
}

fn arc_mask(cycle: &[usize], i: usize, j: usize) -> u32 {
    let len = cycle.len();
    let mut m = 0u32;
    let mut k = i;
    loop {
        m |= 1 << cycle[k];
        if k == j {
            return m;
        }
        k = (k + 1) % len;
    }
}

/// Two bridges avoid each other iff some `u, v` on the cycle split it into
/// arcs `C[u, v]` and `C[v, u]` holding one bridge's attachments each.
fn avoid(cycle: &[usize], a: u32, b: u32) -> bool {
    let len = cycle.len();
    for i in 0..len {
        for j in 0..len {
            if i == j {
                continue;
            }
            let (p, q) = (arc_mask(cycle, i, j), arc_mask(cycle, j, i));
            if (a & p == a && b & q == b) || (b & p == b && a & q == a) {
                return true;
            }
        }
    }
    false
}

fn validate_cycle(g: &SimpleGraph, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle("fewer than three vertices".into()));
    }
    let mut seen = 0u32;
    for (i, &v) in cycle.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        if seen & (1 << v) != 0 {
            return Err(Error::NotACycle(format!("vertex {v} repeated")));
        }
        seen |= 1 << v;
        let w = cycle[(i + 1) % cycle.len()];
        if !g.has_edge(v, w) {
            return Err(Error::NotACycle(format!("missing edge {v}-{w}")));
        }
    }
    Ok(())
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

/// Overlap graph of the bridges of the cycle `cycle` in `d`.
pub fn overlap_graph(cycle: &[usize], d: &BridgeDecomposition) -> OverlapGraph {
    let masks: Vec<u32> = d.bridges.iter().map(Bridge::attachment_mask).collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if !avoid(cycle, masks[i], masks[j]) {
                edges.push((i, j));
            }
        }
    }
    OverlapGraph { bridges: masks.len(), edges }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapVerdict {
    pub planar: bool,
    /// Bridge indices along an odd cycle of the overlap graph.
    pub odd_cycle: Option<Vec<usize>>,
}

/// Planarity through the bipartiteness of the overlap graph of the bridges
/// of a cycle. Every bridge together with the cycle must be planar.
pub fn planar_via_overlap(g: &SimpleGraph, cycle: &[usize]) -> Result<OverlapVerdict> {
    validate_cycle(g, cycle)?;
    let ce = cycle_edges(cycle);
    let cmask = cycle.iter().fold(0u32, |m, &v| m | 1 << v);
    let d = bridges_of(g, cmask, &ce)?;
    for (i, b) in d.bridges.iter().enumerate() {
        let mut all = ce.clone();
        all.extend(&b.edges);
        if !planar(&g.edge_subgraph(&all)) {
            return Err(Error::NonPlanarBridge(i));
        }
    }
    let og = overlap_graph(cycle, &d);
    let k = og.bridges;
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &og.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color = vec![u8::MAX; k];
    let mut parent = vec![usize::MAX; k];
    for s in 0..k {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Ok(OverlapVerdict { planar: false, odd_cycle: Some(odd_cycle(&parent, u, w)) });
                }
            }
        }
    }
    Ok(OverlapVerdict { planar: true, odd_cycle: None })
}

fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pu = path(u);
    let pw = path(w);
    let lca = *pu.iter().find(|v| pw.contains(v)).expect("same BFS tree");
    let mut cyc: Vec<usize> = pu.iter().copied().take_while(|&v| v != lca).collect();
    cyc.push(lca);
    let tail: Vec<usize> = pw.iter().copied().take_while(|&v| v != lca).collect();
    cyc.extend(tail.into_iter().rev());
    cyc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(k: usize) -> SimpleGraph {
        let mut g = SimpleGraph::cycle(k);
        let hub = g.add_vertex().unwrap();
        for v in 0..k {
            g.add_edge(hub, v).unwrap();
        }
        g
    }

    #[test]
    fn wheel_rim() {
        let g = wheel(5);
        let rim: Vec<usize> = (0..5).collect();
        let d = bridges_of(&g, 0, &cycle_edges(&rim)).unwrap();
        assert_eq!(d.bridges.len(), 1);
        assert_eq!(d.bridges[0].attachments, rim);
        assert_eq!(d.bridges[0].interior, vec![5]);
        assert!(!is_local(&d.bridges[0], &d));
    }

    #[test]
    fn chord_and_k33() {
        let mut g = SimpleGraph::cycle(5);
        g.add_edge(0, 2).unwrap();
        let c: Vec<usize> = (0..5).collect();
        let d = bridges_of(&g, 0, &cycle_edges(&c)).unwrap();
        assert_eq!(d.bridges, vec![Bridge { interior: vec![], edges: vec![(0, 2)], attachments: vec![0, 2] }]);

        let mut k33 = SimpleGraph::cycle(6);
        for v in 0..3 {
            k33.add_edge(v, v + 3).unwrap();
        }
        let hex: Vec<usize> = (0..6).collect();
        let d = bridges_of(&k33, 0, &cycle_edges(&hex)).unwrap();
        assert_eq!(d.bridges.len(), 3);
        let og = overlap_graph(&hex, &d);
        assert_eq!(og.edges.len(), 3);
        let v = planar_via_overlap(&k33, &hex).unwrap();
        assert!(!v.planar);
        assert_eq!(v.odd_cycle.unwrap().len(), 3);
    }

    #[test]
    fn non_crossing_chords() {
        let mut g = SimpleGraph::cycle(6);
        g.add_edge(0, 2).unwrap();
        g.add_edge(3, 5).unwrap();
        let c: Vec<usize> = (0..6).collect();
        let v = planar_via_overlap(&g, &c).unwrap();
        assert!(v.planar);
        let d = bridges_of(&g, 0, &cycle_edges(&c)).unwrap();
        assert!(overlap_graph(&c, &d).edges.is_empty());
    }

    #[test]
    fn locality_on_a_path_with_a_tail() {
        // H = path 0-1-2-3 plus edge 3-4 and 3-5 (vertex 3 branches)
        let g = SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (0, 2), (1, 4), (6, 0), (6, 5)]).unwrap();
        let h = [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)];
        let d = bridges_of(&g, 0, &h).unwrap();
        let local: Vec<bool> = d.bridges.iter().map(|b| is_local(b, &d)).collect();
        // bridges: 0-2 (local), 1-4 (not), {6} with attachments 0,5 (not)
        assert_eq!(local, vec![true, false, false]);
    }

    #[test]
    fn supports() {
        let seg = Segment(vec![10, 11, 12, 13, 14, 15]);
        let b = |a: Vec<usize>| Bridge { interior: vec![], edges: vec![], attachments: a };
        assert_eq!(support_of(&b(vec![11, 13]), &seg).unwrap(), Segment(vec![11, 12, 13]));
        assert_eq!(support_of(&b(vec![12]), &seg).unwrap(), Segment(vec![12]));
        assert_eq!(support_of(&b(vec![10, 15]), &seg).unwrap(), seg);
        assert_eq!(support_of(&b(vec![10, 3]), &seg), Err(Error::AttachmentOutsideSegment(3)));
    }

    #[test]
    fn overlap_agrees_with_planarity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 1000 {
            let n = rng.gen_range(4..=10);
            let mut g = SimpleGraph::cycle(n);
            for u in 0..n {
                for v in u + 2..n {
                    if rng.gen_bool(0.25) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let c: Vec<usize> = (0..n).collect();
            match planar_via_overlap(&g, &c) {
                Ok(v) => {
                    assert_eq!(v.planar, planar(&g), "{g:?}");
                    checked += 1;
                }
                Err(Error::NonPlanarBridge(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}
