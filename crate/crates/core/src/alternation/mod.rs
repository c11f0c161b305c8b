//! XY-labelled graphs, label sequences around the identified terminal
//! vertex, boundary arrangements and the membership deciders.

mod arrange;
mod membership;

pub use arrange::{arrange_2_alternating, brute_min_transitions, contains_xyxyxy, Arrangement};
pub(crate) use membership::is_member_a1;
pub use membership::{
    check_witness, cut_graph, membership_a1, membership_oracle, membership_via_gstar, CutAssignment, Decider,
    MembershipVerdict, NonMemberReason, Witness,
};

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::embedding::{edge_of, enumerate_embeddings, Budget, RotationEmbedding};
use crate::error::{parse_err, Error, Result};
use crate::graph::{identify_terminals, IdentifiedGraph, Label, SimpleGraph, TerminalGraph};

/// Up to two labels on a vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabelSet {
    pub x: bool,
    pub y: bool,
}

impl LabelSet {
    pub const NONE: LabelSet = LabelSet { x: false, y: false };
    pub const X: LabelSet = LabelSet { x: true, y: false };
    pub const Y: LabelSet = LabelSet { x: false, y: true };
    pub const XY: LabelSet = LabelSet { x: true, y: true };

    pub fn has(self, l: Label) -> bool {
        match l {
            Label::X => self.x,
            Label::Y => self.y,
        }
    }

    pub fn count(self) -> usize {
        self.x as usize + self.y as usize
    }

    pub fn without(self, l: Label) -> LabelSet {
        match l {
            Label::X => LabelSet { x: false, ..self },
            Label::Y => LabelSet { y: false, ..self },
        }
    }

    fn parse(tok: &str) -> Option<LabelSet> {
        match tok {
            "-" => Some(LabelSet::NONE),
            "X" => Some(LabelSet::X),
            "Y" => Some(LabelSet::Y),
            "XY" | "YX" => Some(LabelSet::XY),
            _ => None,
        }
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.x, self.y) {
            (false, false) => "-",
            (true, false) => "X",
            (false, true) => "Y",
            (true, true) => "XY",
        })
    }
}

/// Cyclic sequence of labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelSequence(pub Vec<Label>);

impl LabelSequence {
    pub fn parse(s: &str) -> Option<LabelSequence> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'X' => Some(Label::X),
                'Y' => Some(Label::Y),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(LabelSequence)
    }

    pub fn reversed(&self) -> LabelSequence {
        LabelSequence(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for LabelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Label::X => "X",
                Label::Y => "Y",
            })?;
        }
        Ok(())
    }
}

/// Number of cyclically consecutive pairs with different labels.
pub fn transitions(s: &LabelSequence) -> usize {
    let n = s.0.len();
    (0..n).filter(|&i| s.0[i] != s.0[(i + 1) % n]).count()
}

pub fn is_k_alternating(s: &LabelSequence, k: usize) -> bool {
    transitions(s) == 2 * k
}

/// `H = G - x - y` with each vertex labelled by the terminals it neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XYLabelledGraph {
    pub graph: SimpleGraph,
    pub labels: Vec<LabelSet>,
    /// Whether the corresponding terminal graph has the edge `xy`.
    pub xy_edge: bool,
}

impl XYLabelledGraph {
    pub fn new(graph: SimpleGraph, labels: Vec<LabelSet>, xy_edge: bool) -> Result<Self> {
        if labels.len() != graph.n() {
            return Err(Error::Precondition(format!("{} labels for {} vertices", labels.len(), graph.n())));
        }
        Ok(XYLabelledGraph { graph, labels, xy_edge })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Terminal graph with `x = n` and `y = n + 1`.
    pub fn to_terminal(&self) -> Result<TerminalGraph> {
        let n = self.n();
        let mut g = self.graph.clone();
        let x = g.add_vertex()?;
        let y = g.add_vertex()?;
        for v in 0..n {
            if self.labels[v].x {
                g.add_edge(v, x)?;
            }
            if self.labels[v].y {
                g.add_edge(v, y)?;
            }
        }
        if self.xy_edge {
            g.add_edge(x, y)?;
        }
        TerminalGraph::new(g, x, y)
    }

    /// The multigraph with both terminals identified, with edge labels.
    pub fn hat(&self) -> Result<IdentifiedGraph> {
        Ok(identify_terminals(&self.to_terminal()?))
    }
}

/// Deletes the terminals, keeping the order of the remaining vertices.
pub fn to_labelled(g: &TerminalGraph) -> XYLabelledGraph {
    let keep = g.graph().all_vertices() & !(1 << g.x()) & !(1 << g.y());
    let (h, old) = g.graph().induced(keep);
    let labels = old
        .iter()
        .map(|&v| LabelSet { x: g.graph().has_edge(v, g.x()), y: g.graph().has_edge(v, g.y()) })
        .collect();
    XYLabelledGraph { graph: h, labels, xy_edge: g.has_xy() }
}

pub fn to_terminal(h: &XYLabelledGraph) -> Result<TerminalGraph> {
    h.to_terminal()
}

/// Text form: `n`, then `xy-edge: yes|no`, then one label token per vertex
/// on a single line (`-`, `X`, `Y`, `XY`), then edges `u v`.
pub fn parse_labelled(text: &str) -> Result<XYLabelledGraph> {
    let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    });
    let (ln, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n: usize = first.parse().map_err(|_| parse_err(ln, "first line must be the vertex count"))?;
    let (ln, second) = lines.next().ok_or_else(|| parse_err(ln, "missing `xy-edge:` line"))?;
    let xy_edge = match second.strip_prefix("xy-edge:").map(str::trim) {
        Some("yes") => true,
        Some("no") => false,
        _ => return Err(parse_err(ln, "expected `xy-edge: yes` or `xy-edge: no`")),
    };
    let labels: Vec<LabelSet> = if n == 0 {
        Vec::new()
    } else {
        let (ln, third) = lines.next().ok_or_else(|| parse_err(ln, "missing label line"))?;
        let labels = third
            .split_whitespace()
            .map(|t| LabelSet::parse(t).ok_or_else(|| parse_err(ln, format!("bad label `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if labels.len() != n {
            return Err(parse_err(ln, format!("expected {n} labels, found {}", labels.len())));
        }
        labels
    };
    let mut g = SimpleGraph::new(n).map_err(|e| parse_err(1, e.to_string()))?;
    for (ln, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        let (u, v) = match t.as_slice() {
            [a, b] => (
                a.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex"))?,
                b.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex"))?,
            ),
            _ => return Err(parse_err(ln, "edge line must be `u v`")),
        };
        g.add_edge(u, v).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(XYLabelledGraph { graph: g, labels, xy_edge })
}

pub fn write_labelled(h: &XYLabelledGraph) -> String {
    let mut s = format!("{}\nxy-edge: {}\n", h.n(), if h.xy_edge { "yes" } else { "no" });
    if h.n() > 0 {
        let l: Vec<String> = h.labels.iter().map(|l| l.to_string()).collect();
        s.push_str(&l.join(" "));
        s.push('\n');
    }
    for (u, v) in h.graph.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Label sequence read off the rotation at the identified vertex.
pub fn label_sequence_of(emb: &RotationEmbedding, hat: &IdentifiedGraph) -> LabelSequence {
    LabelSequence(
        emb.rotation(hat.v_xy)
            .into_iter()
            .map(|d| hat.labels[edge_of(d)].expect("edges at the identified vertex carry labels"))
            .collect(),
    )
}

/// Smallest number of transitions over planar embeddings of `Ĥ`.
#[derive(Clone, Debug, Serialize)]
pub struct AlternationResult {
    pub min_transitions: usize,
    pub embedding: Option<RotationEmbedding>,
}

impl AlternationResult {
    /// Least `k` with a `k`-alternating planar embedding.
    pub fn min_k(&self) -> usize {
        self.min_transitions / 2
    }
}

/// Restriction of `Ĥ` to the component containing the identified vertex.
fn hat_component(hat: &IdentifiedGraph) -> (IdentifiedGraph, Vec<usize>) {
    let comps = hat.graph.components();
    let comp = comps.into_iter().find(|c| c.contains(&hat.v_xy)).expect("v_xy is a vertex");
    let ids: Vec<usize> = hat
        .graph
        .edges
        .iter()
        .enumerate()
        .filter(|(_, &(a, _))| comp.binary_search(&a).is_ok())
        .map(|(e, _)| e)
        .collect();
    let id = |v: usize| comp.binary_search(&v).expect("in component");
    let edges: Vec<(usize, usize)> = ids.iter().map(|&e| (id(hat.graph.edges[e].0), id(hat.graph.edges[e].1))).collect();
    let labels = ids.iter().map(|&e| hat.labels[e]).collect();
    let origin = comp.iter().map(|&v| hat.origin[v]).collect();
    (
        IdentifiedGraph {
            graph: crate::graph::MultiGraph { n: comp.len(), edges },
            v_xy: id(hat.v_xy),
            labels,
            origin,
        },
        comp,
    )
}

/// Minimum number of label transitions over all planar embeddings of `Ĥ`,
/// by enumerating the planar rotation systems of the component holding
/// the identified vertex. The embedding returned is of that component.
pub fn min_alternation(h: &XYLabelledGraph, budget: &mut Budget) -> Result<AlternationResult> {
    let hat = h.hat()?;
    let (sub, _) = hat_component(&hat);
    if sub.graph.degree(sub.v_xy) == 0 {
        return Ok(AlternationResult { min_transitions: 0, embedding: None });
    }
    let floor = lower_bound(&sub);
    let mut best: Option<(usize, RotationEmbedding)> = None;
    let mut any = false;
    enumerate_embeddings(&sub.graph, 0, budget, |e, _| {
        any = true;
        let t = transitions(&label_sequence_of(e, &sub));
        if best.as_ref().is_none_or(|(b, _)| t < *b) {
            best = Some((t, e.clone()));
        }
        if t == floor {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    if !any {
        return Err(Error::NonPlanar);
    }
    let (t, e) = best.expect("some embedding");
    Ok(AlternationResult { min_transitions: t, embedding: Some(e) })
}

/// Two transitions as soon as both labels occur.
fn lower_bound(hat: &IdentifiedGraph) -> usize {
    let has = |l: Label| hat.labels.contains(&Some(l));
    if has(Label::X) && has(Label::Y) {
        2
    } else {
        0
    }
}

/// Cyclic vertex sequence of the face of `H` in which the identified vertex sits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Boundary(pub Vec<usize>);

impl Boundary {
    /// Rotation- and reflection-invariant representative.
    pub fn normalized(&self) -> Boundary {
        let n = self.0.len();
        let mut best: Option<Vec<usize>> = None;
        for rev in [false, true] {
            let seq: Vec<usize> = if rev { self.0.iter().rev().copied().collect() } else { self.0.clone() };
            for s in 0..n.max(1) {
                let r: Vec<usize> = (0..n).map(|i| seq[(s + i) % n]).collect();
                if best.as_ref().is_none_or(|b| r < *b) {
                    best = Some(r);
                }
            }
        }
        Boundary(best.unwrap_or_default())
    }
}

/// The face of `H` left at the identified vertex when its edges are removed
/// from a planar embedding of `Ĥ` (whose vertex ids follow `hat`).
fn boundary_of(emb: &RotationEmbedding, hat: &IdentifiedGraph) -> Boundary {
    let v = hat.v_xy;
    let keep: Vec<usize> = (0..emb.edge_count())
        .filter(|&e| {
            let (a, b) = emb.host().edges[e];
            a != v && b != v
        })
        .collect();
    let new_id = |e: usize| keep.binary_search(&e).ok();
    // A dart at a labelled neighbour just after an edge to v.
    let start_vertex = emb.head(emb.rotation(v)[0]);
    let rot_w = emb.rotation(start_vertex);
    let pos = rot_w.iter().position(|&d| emb.head(d) == v).expect("edge to v");
    let after = (1..=rot_w.len()).map(|i| rot_w[(pos + i) % rot_w.len()]).find(|&d| new_id(edge_of(d)).is_some());
    let Some(after) = after else {
        return Boundary(vec![start_vertex]);
    };
    let host = crate::graph::MultiGraph { n: emb.n(), edges: keep.iter().map(|&e| emb.host().edges[e]).collect() };
    let rots: Vec<Vec<usize>> = (0..emb.n())
        .map(|w| {
            emb.rotation(w)
                .into_iter()
                .filter_map(|d| new_id(edge_of(d)).map(|ne| 2 * ne + (d & 1)))
                .collect()
        })
        .collect();
    let h = RotationEmbedding::orientable(host, &rots).expect("sub-rotation is valid");
    let target = 2 * new_id(edge_of(after)).expect("kept") + (after & 1);
    let face = h.trace_faces().into_iter().find(|f| f.darts.contains(&target)).expect("dart on a face");
    Boundary(face.vertices)
}

/// All boundaries of a connected labelled graph, normalised and
/// deduplicated, found by scanning every planar embedding of `Ĥ`. Vertex
/// ids are those of `h`.
pub fn boundaries_of(h: &XYLabelledGraph, budget: &mut Budget) -> Result<Vec<Boundary>> {
    if !h.graph.is_connected() {
        return Err(Error::Precondition("boundaries need a connected labelled graph".into()));
    }
    let hat = h.hat()?;
    if hat.graph.degree(hat.v_xy) == 0 {
        return Err(Error::Precondition("no labelled vertex".into()));
    }
    let mut out = std::collections::BTreeSet::new();
    let mut any = false;
    enumerate_embeddings(&hat.graph, 0, budget, |e, _| {
        any = true;
        let b = boundary_of(e, &hat);
        // Ĥ keeps the ids of H; the identified vertex is last.
        out.insert(Boundary(b.0.into_iter().map(|w| hat.origin[w]).collect()).normalized());
        ControlFlow::Continue(())
    })?;
    if !any {
        return Err(Error::NonPlanar);
    }
    Ok(out.into_iter().collect())
}

/// True iff every vertex labelled `a` lies in at most two `a`-blocks of the
/// boundary. An `a`-block is a run of consecutive boundary vertices with no
/// vertex labelled by the other label except possibly at its two ends.
pub fn covered_by_two_blocks(q: &Boundary, labels: &[LabelSet], a: Label) -> bool {
    let b = a.other();
    let n = q.0.len();
    let targets: Vec<usize> = (0..labels.len()).filter(|&v| labels[v].has(a)).collect();
    if targets.is_empty() {
        return true;
    }
    let stops: Vec<usize> = (0..n).filter(|&i| labels[q.0[i]].has(b)).collect();
    if stops.is_empty() {
        return targets.iter().all(|v| q.0.contains(v));
    }
    // Maximal blocks run from one stop to the next, both ends included.
    let blocks: Vec<u32> = (0..stops.len())
        .map(|k| {
            let (s, e) = (stops[k], stops[(k + 1) % stops.len()]);
            let len = if e > s { e - s } else { e + n - s };
            (0..=len).fold(0u32, |m, i| m | 1 << q.0[(s + i) % n])
        })
        .collect();
    let want = targets.iter().fold(0u32, |m, &v| m | 1 << v);
    for i in 0..blocks.len() {
        for j in i..blocks.len() {
            if (blocks[i] | blocks[j]) & want == want {
                return true;
            }
        }
    }
    false
}
