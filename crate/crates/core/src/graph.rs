//! Simple graphs, graphs with two terminals, and the multigraphs used as
//! embedding hosts.
//!
//! Simple graphs are stored as adjacency bitmasks, so every graph here has
//! at most [`MAX_VERTICES`] vertices. That is plenty for the desk-scale
//! searches this crate performs.

use std::fmt;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u32>,
}

impl serde::Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SimpleGraph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        Ok(SimpleGraph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n).expect("size");
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = SimpleGraph::new(a + b).expect("size");
        for u in 0..a {
            for v in a..a + b {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::new(n).expect("size");
        for i in 0..n {
            g.insert(i, (i + 1) % n);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = SimpleGraph::new(10).expect("size");
        for i in 0..5 {
            g.insert(i, (i + 1) % 5);
            g.insert(i, i + 5);
            g.insert(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.insert(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n() == MAX_VERTICES {
            return Err(Error::TooManyVertices { got: self.n() + 1, max: MAX_VERTICES });
        }
        self.adj.push(0);
        Ok(self.n() - 1)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange(v))
        } else {
            Ok(())
        }
    }

    /// Removes vertex `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let low = (1u32 << v) - 1;
        let adj = (0..self.n())
            .filter(|&u| u != v)
            .map(|u| {
                let m = self.adj[u];
                (m & low) | ((m >> 1) & !low)
            })
            .collect();
        SimpleGraph { adj }
    }

    /// Subgraph induced by the vertices in `keep` (a bitmask), renumbered in
    /// increasing order. Also returns the old id of every new vertex.
    pub fn induced(&self, keep: u32) -> (SimpleGraph, Vec<usize>) {
        let old: Vec<usize> = bits(keep).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &o) in old.iter().enumerate() {
            new_id[o] = i;
        }
        let mut g = SimpleGraph { adj: vec![0; old.len()] };
        for (i, &o) in old.iter().enumerate() {
            for w in bits(self.adj[o] & keep) {
                g.adj[i] |= 1 << new_id[w];
            }
        }
        (g, old)
    }

    /// Spanning subgraph on the given edge list (which must be edges of `self`).
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph { adj: vec![0; self.n()] };
        for &(u, v) in edges {
            debug_assert!(self.has_edge(u, v));
            g.insert(u, v);
        }
        g
    }

    /// Vertex sets of the connected components, as bitmasks, ordered by least vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.reach(s, u32::MAX);
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside the vertex set `allowed`.
    pub fn reach(&self, s: usize, allowed: u32) -> u32 {
        let mut comp = 1u32 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & allowed;
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reach(0, u32::MAX).count_ones() as usize == self.n()
    }

    pub fn all_vertices(&self) -> u32 {
        if self.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.n()) - 1
        }
    }

    pub fn to_multigraph(&self) -> MultiGraph {
        MultiGraph { n: self.n(), edges: self.edges() }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let off = self.n();
        let mut g = SimpleGraph::new(off + other.n())?;
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        for (u, v) in other.edges() {
            g.insert(u + off, v + off);
        }
        Ok(g)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph { adj: vec![0; self.n()] };
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Iterates over the set bits of a mask.
pub fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// A simple graph with two distinct terminals `x` and `y`.
///
/// Terminals may be isolated. Isomorphism of terminal graphs maps terminals
/// to terminals and may exchange `x` and `y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TerminalGraph {
    graph: SimpleGraph,
    x: usize,
    y: usize,
}

impl TerminalGraph {
    pub fn new(graph: SimpleGraph, x: usize, y: usize) -> Result<Self> {
        if x >= graph.n() {
            return Err(Error::VertexOutOfRange(x));
        }
        if y >= graph.n() {
            return Err(Error::VertexOutOfRange(y));
        }
        if x == y {
            return Err(Error::SameTerminals(x));
        }
        Ok(TerminalGraph { graph, x, y })
    }

    pub fn from_edges(n: usize, x: usize, y: usize, edges: &[(usize, usize)]) -> Result<Self> {
        TerminalGraph::new(SimpleGraph::from_edges(n, edges)?, x, y)
    }

    #[inline]
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    #[inline]
    pub fn x(&self) -> usize {
        self.x
    }

    #[inline]
    pub fn y(&self) -> usize {
        self.y
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        v == self.x || v == self.y
    }

    pub fn has_xy(&self) -> bool {
        self.graph.has_edge(self.x, self.y)
    }

    pub fn with_terminals(&self, x: usize, y: usize) -> Result<Self> {
        TerminalGraph::new(self.graph.clone(), x, y)
    }

    pub fn swapped(&self) -> Self {
        TerminalGraph { graph: self.graph.clone(), x: self.y, y: self.x }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.graph.add_edge(u, v)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.graph.remove_edge(u, v)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }

    /// Graph with both terminals and their edges removed, plus the old id of
    /// each remaining vertex.
    pub fn without_terminals(&self) -> (SimpleGraph, Vec<usize>) {
        let keep = self.graph.all_vertices() & !(1 << self.x) & !(1 << self.y);
        self.graph.induced(keep)
    }
}

impl fmt::Debug for TerminalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TerminalGraph(n={}, x={}, y={}, edges={:?})",
            self.n(),
            self.x,
            self.y,
            self.edges()
        )
    }
}

/// Undirected multigraph without loops. Edge ids are positions in `edges`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::Loop(u));
            }
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    /// Underlying simple graph (parallel edges collapsed).
    pub fn simple(&self) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(self.n)?;
        for &(u, v) in &self.edges {
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_idx = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if root_idx[r] == usize::MAX {
                root_idx[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_idx[r]].push(v);
        }
        groups
    }

    /// Biconnected blocks as lists of edge ids. Parallel edges share a block;
    /// isolated vertices belong to none.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut estack: Vec<usize> = Vec::new();
        let mut out = Vec::new();
        for r in 0..n {
            if disc[r] != usize::MAX {
                continue;
            }
            disc[r] = time;
            low[r] = time;
            time += 1;
            // (vertex, parent edge, next adjacency index)
            let mut stack = vec![(r, usize::MAX, 0usize)];
            while let Some(&mut (u, pe, ref mut i)) = stack.last_mut() {
                if *i < adj[u].len() {
                    let (w, e) = adj[u][*i];
                    *i += 1;
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        estack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, 0));
                    } else if disc[w] < disc[u] {
                        estack.push(e);
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            let mut block = Vec::new();
                            while let Some(e) = estack.pop() {
                                block.push(e);
                                if e == pe {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            out.push(block);
                        }
                    }
                }
            }
        }
        out
    }

    /// Subgraph on the given edges, vertices renumbered in increasing order.
    /// Returns the subgraph and the original id of each of its vertices.
    pub fn edge_induced(&self, edge_ids: &[usize]) -> (MultiGraph, Vec<usize>) {
        let mut verts: Vec<usize> = edge_ids.iter().flat_map(|&e| [self.edges[e].0, self.edges[e].1]).collect();
        verts.sort_unstable();
        verts.dedup();
        let id = |v: usize| verts.binary_search(&v).expect("endpoint listed");
        let edges = edge_ids.iter().map(|&e| (id(self.edges[e].0), id(self.edges[e].1))).collect();
        (MultiGraph { n: verts.len(), edges }, verts)
    }
}

/// Minor operation kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorOp {
    Delete,
    Contract,
}

/// A single terminal-respecting minor operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinorStep {
    pub edge: (usize, usize),
    pub op: MinorOp,
}

impl MinorStep {
    pub fn delete(u: usize, v: usize) -> Self {
        MinorStep { edge: (u, v), op: MinorOp::Delete }
    }

    pub fn contract(u: usize, v: usize) -> Self {
        MinorStep { edge: (u, v), op: MinorOp::Contract }
    }
}

/// Applies one minor operation. Contraction merges the larger endpoint into
/// the smaller one, drops parallel edges, and renumbers the vertices above
/// the removed one. The merged vertex is a terminal iff an endpoint was.
pub fn apply_minor(g: &TerminalGraph, step: MinorStep) -> Result<TerminalGraph> {
    let (u, v) = step.edge;
    if !g.graph.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    match step.op {
        MinorOp::Delete => {
            let mut h = g.clone();
            h.graph.remove_edge(u, v)?;
            Ok(h)
        }
        MinorOp::Contract => {
            if g.is_terminal(u) && g.is_terminal(v) {
                return Err(Error::TerminalContraction(u, v));
            }
            let (keep, gone) = (u.min(v), u.max(v));
            let mut graph = g.graph.clone();
            graph.remove_edge(keep, gone)?;
            for w in bits(graph.mask(gone)) {
                graph.insert(keep, w);
            }
            let graph = graph.remove_vertex(gone);
            let shift = |t: usize| {
                if t == gone {
                    keep
                } else if t > gone {
                    t - 1
                } else {
                    t
                }
            };
            TerminalGraph::new(graph, shift(g.x), shift(g.y))
        }
    }
}

/// All legal one-step minors, one representative per isomorphism class, in
/// canonical order.
pub fn one_step_minors(g: &TerminalGraph) -> Vec<TerminalGraph> {
    let mut seen = std::collections::BTreeMap::new();
    for (u, v) in g.edges() {
        for op in [MinorOp::Delete, MinorOp::Contract] {
            if let Ok(h) = apply_minor(g, MinorStep { edge: (u, v), op }) {
                seen.entry(h.canonical_form()).or_insert(h);
            }
        }
    }
    seen.into_values().collect()
}

/// Terminal labels of `XY`-labelled graphs and identified multigraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Label {
    X,
    Y,
}

impl Label {
    pub fn other(self) -> Label {
        match self {
            Label::X => Label::Y,
            Label::Y => Label::X,
        }
    }
}

/// The multigraph obtained by identifying the two terminals.
#[derive(Clone, Debug)]
pub struct IdentifiedGraph {
    pub graph: MultiGraph,
    /// The identified vertex.
    pub v_xy: usize,
    /// For edges at `v_xy`, which terminal the edge came from.
    pub labels: Vec<Option<Label>>,
    /// Old vertex id of each new vertex (`v_xy` maps to `x`).
    pub origin: Vec<usize>,
}

/// Identifies `x` and `y`, keeping parallel edges at the new vertex. The edge
/// `xy`, if present, is deleted first.
pub fn identify_terminals(g: &TerminalGraph) -> IdentifiedGraph {
    let (x, y) = (g.x, g.y);
    let origin: Vec<usize> = (0..g.n()).filter(|&v| v != y).collect();
    let mut new_id = vec![0; g.n()];
    for (i, &o) in origin.iter().enumerate() {
        new_id[o] = i;
    }
    new_id[y] = new_id[x];
    let v_xy = new_id[x];
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for (u, v) in g.edges() {
        if (u == x && v == y) || (u == y && v == x) {
            continue;
        }
        let label = if u == x || v == x {
            Some(Label::X)
        } else if u == y || v == y {
            Some(Label::Y)
        } else {
            None
        };
        edges.push((new_id[u], new_id[v]));
        labels.push(label);
    }
    IdentifiedGraph { graph: MultiGraph { n: g.n() - 1, edges }, v_xy, labels, origin }
}

/// `G/xy`: the underlying simple graph of [`identify_terminals`].
pub fn simple_identify(g: &TerminalGraph) -> SimpleGraph {
    identify_terminals(g).graph.simple().expect("fewer vertices than input")
}

/// `G⁺`: adds the edge `xy` if absent.
pub fn plus_xy(g: &TerminalGraph) -> TerminalGraph {
    let mut h = g.clone();
    h.graph.insert(g.x, g.y);
    h
}

/// `G*`: the union of `G` with a copy of `K5 - xy` glued at the terminals.
/// Three new vertices are appended; the edge `xy` stays iff `G` has it.
pub fn star_augment(g: &TerminalGraph) -> Result<TerminalGraph> {
    let mut k5 = TerminalGraph::new(SimpleGraph::complete(5), 0, 1)?;
    k5.remove_edge(0, 1)?;
    xy_sum(g, &k5, true)
}

/// Glues `g2` onto `g1` at the terminals. Non-terminal vertices of `g2` are
/// appended after those of `g1`. The edge `xy` is kept only if `keep_edge`
/// and it is present in either summand.
pub fn xy_sum(g1: &TerminalGraph, g2: &TerminalGraph, keep_edge: bool) -> Result<TerminalGraph> {
    let mut graph = g1.graph.clone();
    let mut map = vec![usize::MAX; g2.n()];
    map[g2.x] = g1.x;
    map[g2.y] = g1.y;
    for (v, m) in map.iter_mut().enumerate() {
        if !g2.is_terminal(v) {
            *m = graph.add_vertex()?;
        }
    }
    for (u, v) in g2.edges() {
        graph.insert(map[u], map[v]);
    }
    let had_xy = g1.has_xy() || g2.has_xy();
    if keep_edge && had_xy {
        graph.insert(g1.x, g1.y);
    } else if graph.has_edge(g1.x, g1.y) {
        graph.remove_edge(g1.x, g1.y)?;
    }
    TerminalGraph::new(graph, g1.x, g1.y)
}

fn distributions(g: &SimpleGraph, v: usize, join: bool) -> Result<Vec<TerminalGraph>> {
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    let mut seen = std::collections::BTreeMap::new();
    for subset in 0u32..(1 << nbrs.len()) {
        let mut h = g.clone();
        let v2 = h.add_vertex()?;
        for (i, &w) in nbrs.iter().enumerate() {
            if subset >> i & 1 == 1 {
                h.remove_edge(v, w)?;
                h.insert(v2, w);
            }
        }
        if join {
            h.insert(v, v2);
        }
        let t = TerminalGraph::new(h, v, v2)?;
        seen.entry(t.canonical_form()).or_insert(t);
    }
    Ok(seen.into_values().collect())
}

/// All splits of `g` at `v`: `v` becomes two adjacent terminals (`v` and a
/// new last vertex) sharing its edges in every possible way, empty sides
/// included. Deduplicated up to isomorphism.
pub fn splits_of(g: &SimpleGraph, v: usize) -> Result<Vec<TerminalGraph>> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange(v));
    }
    distributions(g, v, true)
}

/// Like [`splits_of`] but the two new terminals are non-adjacent.
pub fn cuts_of(g: &SimpleGraph, v: usize) -> Result<Vec<TerminalGraph>> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange(v));
    }
    distributions(g, v, false)
}

/// Convenience: is `a` isomorphic to `b` as graphs with terminals.
pub fn is_isomorphic(a: &TerminalGraph, b: &TerminalGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && a.canonical_form() == b.canonical_form()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5() -> TerminalGraph {
        TerminalGraph::new(SimpleGraph::complete(5), 0, 1).unwrap()
    }

    #[test]
    fn delete_terminal_edge() {
        let h = apply_minor(&k5(), MinorStep::delete(0, 1)).unwrap();
        assert_eq!(h.edge_count(), 9);
        assert!(!h.has_xy());
    }

    #[test]
    fn contract_terminal_path() {
        let p = TerminalGraph::from_edges(3, 0, 2, &[(0, 1), (1, 2)]).unwrap();
        let h = apply_minor(&p, MinorStep::contract(0, 1)).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert_eq!((h.x(), h.y()), (0, 1));
    }

    #[test]
    fn contract_simplifies() {
        let t = TerminalGraph::from_edges(3, 0, 1, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = apply_minor(&t, MinorStep::contract(1, 2)).unwrap();
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert!(h.is_terminal(1));
    }

    #[test]
    fn terminal_contraction_rejected() {
        assert_eq!(
            apply_minor(&k5(), MinorStep::contract(0, 1)),
            Err(Error::TerminalContraction(0, 1))
        );
        assert_eq!(apply_minor(&k5(), MinorStep::delete(0, 7)), Err(Error::MissingEdge(0, 7)));
    }

    #[test]
    fn minors_of_tiny_graphs() {
        let e = TerminalGraph::from_edges(2, 0, 1, &[(0, 1)]).unwrap();
        let m = one_step_minors(&e);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].edge_count(), 0);
        let empty = TerminalGraph::from_edges(2, 0, 1, &[]).unwrap();
        assert!(one_step_minors(&empty).is_empty());
    }

    #[test]
    fn identify_c4() {
        // x=0, a=1, y=2, b=3
        let c4 = TerminalGraph::from_edges(4, 0, 2, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let id = identify_terminals(&c4);
        assert_eq!(id.graph.n, 3);
        assert_eq!(id.graph.edge_count(), 4);
        let s = simple_identify(&c4);
        assert_eq!(s.edge_count(), 2);
        assert_eq!(s.degree(id.v_xy), 2);
    }

    #[test]
    fn identify_drops_xy() {
        let id = identify_terminals(&k5());
        assert_eq!(id.graph.n, 4);
        assert_eq!(id.graph.edge_count(), 9);
        let x_labels = id.labels.iter().filter(|l| **l == Some(Label::X)).count();
        assert_eq!(x_labels, 3);
    }

    #[test]
    fn star_augment_sizes() {
        let iso = TerminalGraph::from_edges(2, 0, 1, &[]).unwrap();
        let s = star_augment(&iso).unwrap();
        assert_eq!((s.n(), s.edge_count()), (5, 9));
        let s = star_augment(&k5()).unwrap();
        assert_eq!((s.n(), s.edge_count()), (8, 19));
        let p = plus_xy(&plus_xy(&iso));
        assert_eq!(p, plus_xy(&iso));
    }

    #[test]
    fn sums_of_kuratowski_graphs() {
        let k33 = TerminalGraph::new(SimpleGraph::complete_bipartite(3, 3), 0, 3).unwrap();
        let s = xy_sum(&k33, &k33, false).unwrap();
        assert_eq!((s.n(), s.edge_count()), (10, 16));
        let s = xy_sum(&k5(), &k5(), false).unwrap();
        assert_eq!((s.n(), s.edge_count()), (8, 18));
        let e = TerminalGraph::from_edges(2, 0, 1, &[(0, 1)]).unwrap();
        let g = TerminalGraph::from_edges(4, 0, 2, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(xy_sum(&g, &e, true).unwrap(), plus_xy(&g));
    }

    #[test]
    fn k5_splits() {
        let s = splits_of(&SimpleGraph::complete(5), 0).unwrap();
        assert_eq!(s.len(), 3);
        let c = cuts_of(&SimpleGraph::cycle(3), 0).unwrap();
        // {0,2} and {1,1} distributions of the two edges.
        assert_eq!(c.len(), 2);
        assert!(c.iter().any(|t| !t.has_xy() && t.graph().degree(t.x()) == 1 && t.graph().degree(t.y()) == 1));
    }

    #[test]
    fn remove_vertex_shifts() {
        let g = SimpleGraph::from_edges(4, &[(0, 3), (1, 2)]).unwrap();
        let h = g.remove_vertex(1);
        assert_eq!(h.edges(), vec![(0, 2)]);
    }
}
