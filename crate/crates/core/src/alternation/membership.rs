//! Three deciders for membership in the class of graphs that are planar or
//! embed in the torus with `x, y, x, y` on one face.

use rayon::prelude::*;
use serde::Serialize;

use crate::embedding::{find_alternating_embedding, min_genus_capped, AlternatingWitness, Budget, RotationEmbedding};
use crate::error::{Error, Result};
use crate::graph::{simple_identify, star_augment, SimpleGraph, TerminalGraph, MAX_VERTICES};
use crate::planarity::{classify_subdivision, gadget, is_planar, kuratowski_subgraph, planar, KuratowskiSubgraph, Planarity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Decider {
    /// Cutting at both terminals and testing planarity.
    A1,
    /// Exhaustive search for an alternating toroidal embedding.
    Oracle,
    /// Genus of the graph with `K5 - xy` glued on.
    GStar,
}

/// Neighbours of `x` and of `y` whose edges move to the second copy.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CutAssignment {
    pub x_side2: Vec<usize>,
    pub y_side2: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NonMemberReason {
    /// `x` and `y` lie in different components of a non-planar graph.
    TerminalsSeparated,
    /// `G/xy` is not planar.
    ContractionNonPlanar { kuratowski: KuratowskiSubgraph },
    /// Every cut was tried.
    NoValidCut { tried: u64 },
    /// The component holding the terminals has genus at least two.
    GenusAtLeastTwo,
    /// Toroidal, but no toroidal embedding has a face where the terminals alternate.
    NoAlternatingEmbedding,
    /// A component without the terminals is not planar.
    NonPlanarElsewhere { kuratowski: KuratowskiSubgraph },
    /// `G*` has genus at least two.
    StarGenusAtLeastTwo,
}

#[derive(Clone, Debug, Serialize)]
pub enum Witness {
    Planar { embedding: RotationEmbedding },
    /// The cut graph has `x1 = x`, `y1 = y`, `x2 = n`, `y2 = n + 1`; the
    /// embedding is a planar embedding of it with a hub on `x1, y1, x2, y2`
    /// and the rim through them.
    Cut { assignment: CutAssignment, gadget_embedding: RotationEmbedding },
    /// An alternating genus-one embedding of the component holding the
    /// terminals; `component[i]` is the vertex of `G` behind vertex `i`.
    Alternating { component: Vec<usize>, witness: AlternatingWitness },
    /// An embedding of `G*` of genus at most one.
    StarTorus { embedding: RotationEmbedding },
    NonMember(NonMemberReason),
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipVerdict {
    pub member: bool,
    pub decider: Decider,
    pub witness: Witness,
}

impl MembershipVerdict {
    fn no(decider: Decider, reason: NonMemberReason) -> Self {
        MembershipVerdict { member: false, decider, witness: Witness::NonMember(reason) }
    }
}

fn same_component(g: &SimpleGraph, x: usize, y: usize) -> bool {
    g.reach(x, g.all_vertices()) >> y & 1 == 1
}

/// Splits `x` and `y` according to `a`. Vertices `n` and `n + 1` are the
/// second copies of `x` and `y`.
pub fn cut_graph(g: &TerminalGraph, a: &CutAssignment) -> Result<SimpleGraph> {
    let (x, y, n) = (g.x(), g.y(), g.n());
    let base = g.graph();
    for &v in &a.x_side2 {
        if !base.has_edge(x, v) {
            return Err(Error::MissingEdge(x, v));
        }
    }
    for &v in &a.y_side2 {
        if !base.has_edge(y, v) {
            return Err(Error::MissingEdge(y, v));
        }
    }
    let mut c = base.clone();
    let x2 = c.add_vertex()?;
    let y2 = c.add_vertex()?;
    debug_assert_eq!((x2, y2), (n, n + 1));
    for &v in &a.x_side2 {
        if v != y {
            c.remove_edge(x, v)?;
            c.insert(x2, v);
        }
    }
    for &v in &a.y_side2 {
        if v != x {
            c.remove_edge(y, v)?;
            c.insert(y2, v);
        }
    }
    if base.has_edge(x, y) {
        c.remove_edge(x, y)?;
        let xe = if a.x_side2.contains(&y) { x2 } else { x };
        let ye = if a.y_side2.contains(&x) { y2 } else { y };
        c.insert(xe, ye);
    }
    Ok(c)
}

fn assignment(nx: &[usize], ny: &[usize], code: u64) -> CutAssignment {
    // The first neighbour of each terminal stays on side one.
    let bx = nx.len().saturating_sub(1);
    let pick = |ns: &[usize], bits: u64| ns.iter().skip(1).enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &v)| v).collect();
    CutAssignment { x_side2: pick(nx, code), y_side2: pick(ny, code >> bx) }
}

/// Same answer as [`membership_a1`] without building a witness.
pub(crate) fn is_member_a1(g: &TerminalGraph) -> Result<bool> {
    if planar(g.graph()) {
        return Ok(true);
    }
    let (x, y) = (g.x(), g.y());
    if !same_component(g.graph(), x, y) || !planar(&simple_identify(g)) {
        return Ok(false);
    }
    if g.n() + 3 > MAX_VERTICES {
        return Err(Error::TooManyVertices { got: g.n() + 3, max: MAX_VERTICES });
    }
    let nx: Vec<usize> = g.graph().neighbors(x).collect();
    let ny: Vec<usize> = g.graph().neighbors(y).collect();
    let free = nx.len().saturating_sub(1) + ny.len().saturating_sub(1);
    if free >= 63 {
        return Err(Error::Precondition("terminal degrees too large to enumerate cuts".into()));
    }
    let quad = [x, y, g.n(), g.n() + 1];
    Ok((0..1u64 << free).any(|code| {
        cut_graph(g, &assignment(&nx, &ny, code))
            .and_then(|c| gadget(&c, quad))
            .is_ok_and(|gd| planar(&gd))
    }))
}

/// Production decider: `G` is a member iff it is planar, or it can be cut
/// at both terminals into a planar graph with `x1, y1, x2, y2` in this
/// cyclic order on one face. The witness found is the one with the least
/// assignment code.
pub fn membership_a1(g: &TerminalGraph) -> Result<MembershipVerdict> {
    let d = Decider::A1;
    if let Planarity::Planar(embedding) = is_planar(g.graph()) {
        return Ok(MembershipVerdict { member: true, decider: d, witness: Witness::Planar { embedding } });
    }
    let (x, y) = (g.x(), g.y());
    if !same_component(g.graph(), x, y) {
        return Ok(MembershipVerdict::no(d, NonMemberReason::TerminalsSeparated));
    }
    if let Some(kuratowski) = kuratowski_subgraph(&simple_identify(g)) {
        return Ok(MembershipVerdict::no(d, NonMemberReason::ContractionNonPlanar { kuratowski }));
    }
    if g.n() + 3 > MAX_VERTICES {
        return Err(Error::TooManyVertices { got: g.n() + 3, max: MAX_VERTICES });
    }
    let nx: Vec<usize> = g.graph().neighbors(x).collect();
    let ny: Vec<usize> = g.graph().neighbors(y).collect();
    let free = nx.len().saturating_sub(1) + ny.len().saturating_sub(1);
    if free >= 63 {
        return Err(Error::Precondition("terminal degrees too large to enumerate cuts".into()));
    }
    let quad = [x, y, g.n(), g.n() + 1];
    let tried = 1u64 << free;
    let hit = (0..tried).into_par_iter().find_map_first(|code| {
        let a = assignment(&nx, &ny, code);
        let c = cut_graph(g, &a).ok()?;
        if !planar(&c) {
            return None;
        }
        match is_planar(&gadget(&c, quad).ok()?) {
            Planarity::Planar(e) => Some((a, e)),
            Planarity::NonPlanar(_) => None,
        }
    });
    Ok(match hit {
        Some((assignment, gadget_embedding)) => {
            MembershipVerdict { member: true, decider: d, witness: Witness::Cut { assignment, gadget_embedding } }
        }
        None => MembershipVerdict::no(d, NonMemberReason::NoValidCut { tried }),
    })
}

/// Definition-level decider: planar, or the component holding both
/// terminals has genus one with an alternating face and every other
/// component is planar.
pub fn membership_oracle(g: &TerminalGraph, budget: &mut Budget) -> Result<MembershipVerdict> {
    let d = Decider::Oracle;
    if let Planarity::Planar(embedding) = is_planar(g.graph()) {
        return Ok(MembershipVerdict { member: true, decider: d, witness: Witness::Planar { embedding } });
    }
    let (x, y) = (g.x(), g.y());
    if !same_component(g.graph(), x, y) {
        return Ok(MembershipVerdict::no(d, NonMemberReason::TerminalsSeparated));
    }
    let cmask = g.graph().reach(x, g.graph().all_vertices());
    let (rest, _) = g.graph().induced(g.graph().all_vertices() & !cmask);
    if let Some(kuratowski) = kuratowski_subgraph(&rest) {
        let (_, old) = g.graph().induced(g.graph().all_vertices() & !cmask);
        let edges = kuratowski.edges.iter().map(|&(a, b)| (old[a], old[b])).collect::<Vec<_>>();
        let kuratowski = classify_subdivision(&edges).expect("relabelled subdivision");
        return Ok(MembershipVerdict::no(d, NonMemberReason::NonPlanarElsewhere { kuratowski }));
    }
    let (comp, old) = g.graph().induced(cmask);
    let m = comp.to_multigraph();
    if min_genus_capped(&m, 1, budget)?.is_none() {
        return Ok(MembershipVerdict::no(d, NonMemberReason::GenusAtLeastTwo));
    }
    let at = |v: usize| old.iter().position(|&o| o == v).expect("terminal in component");
    Ok(match find_alternating_embedding(&m, at(x), at(y), 1, budget)? {
        Some(witness) => {
            MembershipVerdict { member: true, decider: d, witness: Witness::Alternating { component: old, witness } }
        }
        None => MembershipVerdict::no(d, NonMemberReason::NoAlternatingEmbedding),
    })
}

/// Member iff `G*` is toroidal (or planar). Separated terminals in a
/// non-planar graph are rejected first, since the glued `K5 - xy` would
/// join them.
pub fn membership_via_gstar(g: &TerminalGraph, budget: &mut Budget) -> Result<MembershipVerdict> {
    let d = Decider::GStar;
    if !same_component(g.graph(), g.x(), g.y()) && !planar(g.graph()) {
        return Ok(MembershipVerdict::no(d, NonMemberReason::TerminalsSeparated));
    }
    let star = star_augment(g)?;
    Ok(match min_genus_capped(&star.graph().to_multigraph(), 1, budget)? {
        Some(r) => MembershipVerdict { member: true, decider: d, witness: Witness::StarTorus { embedding: r.embedding } },
        None => MembershipVerdict::no(d, NonMemberReason::StarGenusAtLeastTwo),
    })
}

fn stale(msg: impl Into<String>) -> Error {
    Error::StaleWitness(msg.into())
}

fn same_host(e: &RotationEmbedding, g: &SimpleGraph) -> bool {
    let mut a: Vec<(usize, usize)> = e.host().edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    a.sort_unstable();
    e.n() == g.n() && a == g.edges()
}

fn check_kuratowski(k: &KuratowskiSubgraph, host: &SimpleGraph) -> Result<()> {
    if classify_subdivision(&k.edges).as_ref() != Some(k) || !k.edges.iter().all(|&(a, b)| host.has_edge(a, b)) {
        return Err(stale("Kuratowski certificate does not check"));
    }
    Ok(())
}

/// Re-checks a verdict against `g`. Positive witnesses are verified
/// directly; negative ones by their certificate where one exists, and
/// otherwise by repeating the decisive computation without a budget.
pub fn check_witness(g: &TerminalGraph, v: &MembershipVerdict) -> Result<()> {
    let (x, y) = (g.x(), g.y());
    match (&v.witness, v.member) {
        (Witness::Planar { embedding }, true) => {
            if !same_host(embedding, g.graph()) || embedding.genus()? != 0 {
                return Err(stale("not a planar embedding of the graph"));
            }
        }
        (Witness::Cut { assignment, gadget_embedding }, true) => {
            let c = cut_graph(g, assignment)?;
            let gd = gadget(&c, [x, y, g.n(), g.n() + 1])?;
            if !same_host(gadget_embedding, &gd) || gadget_embedding.genus()? != 0 {
                return Err(stale("gadget embedding is not planar"));
            }
            let first_kept = |t: usize, side2: &[usize]| g.graph().neighbors(t).next().is_none_or(|f| !side2.contains(&f));
            if !first_kept(x, &assignment.x_side2) || !first_kept(y, &assignment.y_side2) {
                return Err(stale("first terminal edge moved"));
            }
        }
        (Witness::Alternating { component, witness }, true) => {
            let cmask = component.iter().fold(0u32, |m, &v| m | 1 << v);
            if cmask != g.graph().reach(x, g.graph().all_vertices()) {
                return Err(stale("component does not match"));
            }
            let (comp, old) = g.graph().induced(cmask);
            if old != *component || !same_host(&witness.embedding, &comp) || witness.embedding.genus()? != 1 {
                return Err(stale("not a genus-one embedding of the component"));
            }
            let faces = witness.embedding.trace_faces();
            let f = faces.get(witness.face).ok_or_else(|| stale("face index"))?;
            let at = |v: usize| old.iter().position(|&o| o == v);
            let (cx, cy) = (at(x).ok_or_else(|| stale("x"))?, at(y).ok_or_else(|| stale("y"))?);
            let p = witness.positions;
            let ok = p.windows(2).all(|w| w[0] < w[1])
                && p.iter().all(|&i| i < f.vertices.len())
                && ([cx, cy, cx, cy] == p.map(|i| f.vertices[i]) || [cy, cx, cy, cx] == p.map(|i| f.vertices[i]));
            if !ok {
                return Err(stale("terminals do not alternate on the face"));
            }
            let (rest, _) = g.graph().induced(g.graph().all_vertices() & !cmask);
            if !planar(&rest) {
                return Err(stale("another component is not planar"));
            }
        }
        (Witness::StarTorus { embedding }, true) => {
            let star = star_augment(g)?;
            if !same_host(embedding, star.graph()) || embedding.genus()? > 1 {
                return Err(stale("not a toroidal embedding of G*"));
            }
        }
        (Witness::NonMember(r), false) => check_reason(g, r)?,
        _ => return Err(stale("witness kind does not match the verdict")),
    }
    Ok(())
}

fn check_reason(g: &TerminalGraph, r: &NonMemberReason) -> Result<()> {
    let (x, y) = (g.x(), g.y());
    let nonplanar = !planar(g.graph());
    let ok = match r {
        NonMemberReason::TerminalsSeparated => nonplanar && !same_component(g.graph(), x, y),
        NonMemberReason::ContractionNonPlanar { kuratowski } => {
            check_kuratowski(kuratowski, &simple_identify(g))?;
            nonplanar
        }
        NonMemberReason::NonPlanarElsewhere { kuratowski } => {
            check_kuratowski(kuratowski, g.graph())?;
            let cmask = g.graph().reach(x, g.graph().all_vertices());
            kuratowski.edges.iter().all(|&(a, _)| cmask >> a & 1 == 0)
        }
        NonMemberReason::NoValidCut { .. } => !membership_a1(g)?.member,
        NonMemberReason::GenusAtLeastTwo => {
            let (comp, _) = g.graph().induced(g.graph().reach(x, g.graph().all_vertices()));
            min_genus_capped(&comp.to_multigraph(), 1, &mut Budget::unlimited())?.is_none()
        }
        NonMemberReason::NoAlternatingEmbedding => !membership_oracle(g, &mut Budget::unlimited())?.member,
        NonMemberReason::StarGenusAtLeastTwo => {
            let star = star_augment(g)?;
            min_genus_capped(&star.graph().to_multigraph(), 1, &mut Budget::unlimited())?.is_none()
        }
    };
    if ok {
        Ok(())
    } else {
        Err(stale(format!("reason {r:?} does not hold")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::xy_sum;

    fn t(g: SimpleGraph, x: usize, y: usize) -> TerminalGraph {
        TerminalGraph::new(g, x, y).unwrap()
    }

    fn all(g: &TerminalGraph) -> [bool; 3] {
        let a = membership_a1(g).unwrap();
        let o = membership_oracle(g, &mut Budget::unlimited()).unwrap();
        let s = membership_via_gstar(g, &mut Budget::unlimited()).unwrap();
        for v in [&a, &o, &s] {
            check_witness(g, v).unwrap();
        }
        [a.member, o.member, s.member]
    }

    #[test]
    fn boolean_decider_agrees() {
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        for mask in (0u32..1 << 15).step_by(7) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = t(SimpleGraph::from_edges(6, &edges).unwrap(), 0, 1);
            assert_eq!(is_member_a1(&g).unwrap(), membership_a1(&g).unwrap().member, "{edges:?}");
        }
    }

    #[test]
    fn kuratowski_graphs_are_members() {
        assert_eq!(all(&t(SimpleGraph::complete(5), 0, 1)), [true; 3]);
        assert_eq!(all(&t(SimpleGraph::complete_bipartite(3, 3), 0, 3)), [true; 3]);
        assert_eq!(all(&t(SimpleGraph::complete_bipartite(3, 3), 0, 1)), [true; 3]);
    }

    #[test]
    fn sums_of_kuratowski_graphs_are_not() {
        let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 3);
        let s = xy_sum(&k33, &k33, false).unwrap();
        assert_eq!(all(&s), [false; 3]);
        let k5 = t(SimpleGraph::complete(5), 0, 1);
        assert_eq!(all(&xy_sum(&k5, &k5, true).unwrap()), [false; 3]);
    }

    #[test]
    fn separated_terminals() {
        let g = SimpleGraph::complete(5).disjoint_union(&SimpleGraph::new(2).unwrap()).unwrap();
        assert_eq!(all(&t(g.clone(), 5, 6)), [false; 3]);
        assert_eq!(all(&t(g, 0, 6)), [false; 3]);
        let planar_parts = SimpleGraph::complete(4).disjoint_union(&SimpleGraph::cycle(3)).unwrap();
        assert_eq!(all(&t(planar_parts, 0, 4)), [true; 3]);
    }

    #[test]
    fn planar_is_member() {
        let v = membership_a1(&t(SimpleGraph::cycle(5), 0, 2)).unwrap();
        assert!(v.member);
        assert!(matches!(v.witness, Witness::Planar { .. }));
    }

    #[test]
    fn stale_witness_detected() {
        let k5 = t(SimpleGraph::complete(5), 0, 1);
        let v = membership_a1(&k5).unwrap();
        let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 3);
        assert!(matches!(check_witness(&k33, &v), Err(Error::StaleWitness(_))));
    }

    #[test]
    fn cut_graph_moves_edges() {
        let g = t(SimpleGraph::complete(4), 0, 1);
        let c = cut_graph(&g, &CutAssignment { x_side2: vec![1, 3], y_side2: vec![] }).unwrap();
        assert!(c.has_edge(4, 1) && c.has_edge(4, 3) && c.has_edge(0, 2) && !c.has_edge(0, 1));
        assert_eq!(c.edge_count(), 6);
        assert!(cut_graph(&g, &CutAssignment { x_side2: vec![0], y_side2: vec![] }).is_err());
    }
}
