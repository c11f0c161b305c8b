//! Minimal non-members: verification, structural classification, the
//! torus-obstruction type, torus witnesses, and the catalog and search.

mod catalog;
mod search;

pub use catalog::{builtin_catalog, parse_catalog, write_catalog, Catalog, CatalogEntry, LABELLED_DATA};
pub use search::{search_obstructions, SearchConstraints};

use serde::Serialize;

use crate::alternation::{is_member_a1, min_alternation, to_labelled};
use crate::embedding::{find_alternating_embedding, from_neighbor_rotations, min_genus_capped, torus_from_3_alternating, Budget, RotationEmbedding};
use crate::error::{Error, Result};
use crate::graph::{identify_terminals, plus_xy, simple_identify, star_augment, MinorOp, SimpleGraph, TerminalGraph};
use crate::planarity::{planar, KuratowskiKind};

/// Membership of one minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorEntry {
    pub edge: (usize, usize),
    pub op: MinorOp,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionVerdict {
    pub member: bool,
    pub minors: Vec<MinorEntry>,
    pub is_obstruction: bool,
    pub classification: Option<Classification>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Connectivity {
    Disconnected,
    Connected,
    TwoConnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Classification {
    /// Splitting (`xy` present) or cutting a vertex of a Kuratowski graph.
    SplitKuratowski { kind: KuratowskiKind, split: bool },
    /// A Kuratowski graph with one or two isolated terminals.
    KuratowskiPlusIsolated { kind: KuratowskiKind, isolated: usize },
    /// An `xy`-sum of two Kuratowski graphs.
    SumOfKuratowskis { left: KuratowskiKind, right: KuratowskiKind },
    /// `G/xy` planar; connectivity of `H = G - x - y`.
    LabelledType { connectivity: Connectivity },
    Unclassified,
}

impl Classification {
    pub fn tag(&self) -> String {
        let k = |k: &KuratowskiKind| match k {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K33",
        };
        match self {
            Classification::SplitKuratowski { kind, split } => {
                format!("{}-{}", if *split { "split" } else { "cut" }, k(kind))
            }
            Classification::KuratowskiPlusIsolated { kind, isolated } => format!("{}+{isolated}iso", k(kind)),
            Classification::SumOfKuratowskis { left, right } => format!("sum-{}-{}", k(left), k(right)),
            Classification::LabelledType { connectivity } => format!(
                "labelled-{}",
                match connectivity {
                    Connectivity::Disconnected => "disconnected",
                    Connectivity::Connected => "connected",
                    Connectivity::TwoConnected => "2-connected",
                }
            ),
            Classification::Unclassified => "unclassified".into(),
        }
    }

    pub fn from_tag(s: &str) -> Option<Classification> {
        let kind = |t: &str| match t {
            "K5" => Some(KuratowskiKind::K5),
            "K33" => Some(KuratowskiKind::K33),
            _ => None,
        };
        if let Some(rest) = s.strip_prefix("split-") {
            return Some(Classification::SplitKuratowski { kind: kind(rest)?, split: true });
        }
        if let Some(rest) = s.strip_prefix("cut-") {
            return Some(Classification::SplitKuratowski { kind: kind(rest)?, split: false });
        }
        if let Some(rest) = s.strip_prefix("sum-") {
            let (a, b) = rest.split_once('-')?;
            return Some(Classification::SumOfKuratowskis { left: kind(a)?, right: kind(b)? });
        }
        if let Some((a, b)) = s.split_once('+') {
            let isolated = b.strip_suffix("iso")?.parse().ok()?;
            return Some(Classification::KuratowskiPlusIsolated { kind: kind(a)?, isolated });
        }
        let connectivity = match s.strip_prefix("labelled-")? {
            "disconnected" => Connectivity::Disconnected,
            "connected" => Connectivity::Connected,
            "2-connected" => Connectivity::TwoConnected,
            _ => return None,
        };
        Some(Classification::LabelledType { connectivity })
    }
}

/// Runs the production decider on `g` and on every legal one-step minor.
pub fn verify_obstruction(g: &TerminalGraph) -> Result<ObstructionVerdict> {
    let member = is_member_a1(g)?;
    let mut minors = Vec::new();
    let mut cache = std::collections::HashMap::new();
    for (u, v) in g.edges() {
        for op in [MinorOp::Delete, MinorOp::Contract] {
            let step = crate::graph::MinorStep { edge: (u, v), op };
            let Ok(h) = crate::graph::apply_minor(g, step) else { continue };
            let key = h.canonical_form();
            let m = match cache.get(&key) {
                Some(&m) => m,
                None => {
                    let m = is_member_a1(&h)?;
                    cache.insert(key, m);
                    m
                }
            };
            minors.push(MinorEntry { edge: (u, v), op, member: m });
        }
    }
    let is_obstruction = !member && minors.iter().all(|m| m.member);
    let classification = is_obstruction.then(|| classify(g));
    Ok(ObstructionVerdict { member, minors, is_obstruction, classification })
}

fn kuratowski_kind(g: &SimpleGraph) -> Option<KuratowskiKind> {
    let core: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let (h, _) = g.induced(core.iter().fold(0u32, |m, &v| m | 1 << v));
    let is = |k: &SimpleGraph| crate::canon::graphs_isomorphic(&h, k);
    if is(&SimpleGraph::complete(5)) {
        Some(KuratowskiKind::K5)
    } else if is(&SimpleGraph::complete_bipartite(3, 3)) {
        Some(KuratowskiKind::K33)
    } else {
        None
    }
}

/// Structural class of an obstruction.
pub fn classify(g: &TerminalGraph) -> Classification {
    let (x, y) = (g.x(), g.y());
    let gr = g.graph();
    let isolated_terms = [x, y].iter().filter(|&&t| gr.degree(t) == 0).count();
    let nonterminal_isolated = (0..g.n()).any(|v| !g.is_terminal(v) && gr.degree(v) == 0);
    if isolated_terms > 0 && !nonterminal_isolated {
        if let Some(kind) = kuratowski_kind(gr) {
            let core = (0..g.n()).filter(|&v| gr.degree(v) > 0).count();
            if core == if matches!(kind, KuratowskiKind::K5) { 5 } else { 6 } {
                return Classification::KuratowskiPlusIsolated { kind, isolated: isolated_terms };
            }
        }
    }
    let hat = identify_terminals(g);
    let simple = simple_identify(g);
    if isolated_terms == 0 && hat.graph.edge_count() == simple.edge_count() {
        if let Some(kind) = kuratowski_kind(&simple) {
            if (0..simple.n()).all(|v| simple.degree(v) > 0) {
                return Classification::SplitKuratowski { kind, split: g.has_xy() };
            }
        }
    }
    if let Some(c) = sum_of_kuratowskis(g) {
        return c;
    }
    if planar(&simple) {
        let h = to_labelled(g).graph;
        let connectivity = if !h.is_connected() {
            Connectivity::Disconnected
        } else if h.n() >= 3 && (0..h.n()).all(|v| h.remove_vertex(v).is_connected()) {
            Connectivity::TwoConnected
        } else {
            Connectivity::Connected
        };
        return Classification::LabelledType { connectivity };
    }
    Classification::Unclassified
}

/// Splits `g - xy` at the terminals into two parts, each of which (with
/// `xy` added if needed) must be a Kuratowski graph.
fn sum_of_kuratowskis(g: &TerminalGraph) -> Option<Classification> {
    let (x, y) = (g.x(), g.y());
    let gr = g.graph();
    let rest = gr.all_vertices() & !(1 << x) & !(1 << y);
    let (h, old) = gr.induced(rest);
    let comps = h.components();
    if comps.len() != 2 {
        return None;
    }
    let mut kinds = Vec::new();
    for c in comps {
        let mut keep = 1u32 << x | 1 << y;
        for v in crate::graph::bits(c) {
            keep |= 1 << old[v];
        }
        let (mut piece, _) = gr.induced(keep);
        let pos = |t: usize| (keep & ((1u32 << t) - 1)).count_ones() as usize;
        let (a, b) = (pos(x), pos(y));
        if !piece.has_edge(a, b) {
            piece.add_edge(a, b).ok()?;
        }
        let k = kuratowski_kind(&piece).or_else(|| {
            piece.remove_edge(a, b).ok()?;
            kuratowski_kind(&piece)
        })?;
        kinds.push(k);
    }
    kinds.sort();
    Some(Classification::SumOfKuratowskis { left: kinds[0], right: kinds[1] })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ForbType {
    G,
    GPlus,
    GStar,
}

/// Which of `G`, `G⁺`, `G*` are topological obstructions for the torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbReport {
    pub g: bool,
    pub g_plus: bool,
    pub g_star: bool,
    /// The unique one, if exactly one holds.
    pub forb: Option<ForbType>,
}

/// Topological obstruction for the torus: no isolated or degree-two
/// vertices, not toroidal, and every edge deletion toroidal.
pub fn is_torus_topological_obstruction(g: &SimpleGraph, budget: &mut Budget) -> Result<bool> {
    if (0..g.n()).any(|v| g.degree(v) <= 2) {
        return Ok(false);
    }
    if min_genus_capped(&g.to_multigraph(), 1, budget)?.is_some() {
        return Ok(false);
    }
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v)?;
        if min_genus_capped(&h.to_multigraph(), 1, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn forb_type(g: &TerminalGraph, budget: &mut Budget) -> Result<ForbReport> {
    let a = is_torus_topological_obstruction(g.graph(), budget)?;
    let b = is_torus_topological_obstruction(plus_xy(g).graph(), budget)?;
    let c = is_torus_topological_obstruction(star_augment(g)?.graph(), budget)?;
    let forb = match (a, b, c) {
        (true, false, false) => Some(ForbType::G),
        (false, true, false) => Some(ForbType::GPlus),
        (false, false, true) => Some(ForbType::GStar),
        _ => None,
    };
    Ok(ForbReport { g: a, g_plus: b, g_star: c, forb })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessMethod {
    Search,
    ThreeAlternating,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusWitness {
    pub embedding: RotationEmbedding,
    pub method: WitnessMethod,
}

impl TorusWitness {
    pub fn verify(&self, g: &TerminalGraph) -> bool {
        let mut edges: Vec<(usize, usize)> =
            self.embedding.host().edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        self.embedding.n() == g.n()
            && edges == g.edges()
            && self.embedding.validate().is_ok()
            && self.embedding.genus().ok() == Some(1)
    }
}

/// A genus-one embedding: built from a 3-alternating plane embedding of
/// `Ĥ` for labelled-type graphs where that applies, found by search
/// otherwise.
pub fn torus_witness(g: &TerminalGraph, budget: &mut Budget) -> Result<TorusWitness> {
    if planar(g.graph()) {
        return Err(Error::Precondition("planar graphs have no genus-one witness".into()));
    }
    if matches!(classify(g), Classification::LabelledType { .. }) {
        if let Some(w) = via_three_alternating(g, budget)? {
            return Ok(w);
        }
    }
    match min_genus_capped(&g.graph().to_multigraph(), 1, budget)? {
        Some(r) => Ok(TorusWitness { embedding: r.embedding, method: WitnessMethod::Search }),
        None => Err(Error::Precondition("graph is not toroidal".into())),
    }
}

fn via_three_alternating(g: &TerminalGraph, budget: &mut Budget) -> Result<Option<TorusWitness>> {
    let h = to_labelled(g);
    let hat = h.hat()?;
    if hat.graph.components().len() != 1 {
        return Ok(None);
    }
    let r = match min_alternation(&h, budget) {
        Ok(r) => r,
        Err(Error::NonPlanar) => return Ok(None),
        Err(e) => return Err(e),
    };
    let Some(emb) = r.embedding.filter(|_| r.min_transitions == 6) else { return Ok(None) };
    let e = torus_from_3_alternating(&h, &emb)?;
    // Relabel: H keeps the order of the non-terminals; x, y are last.
    let keep = g.graph().all_vertices() & !(1 << g.x()) & !(1 << g.y());
    let (_, mut old) = g.graph().induced(keep);
    old.extend([g.x(), g.y()]);
    let mut rots = vec![Vec::new(); g.n()];
    for v in 0..e.n() {
        rots[old[v]] = e.neighbor_rotation(v).into_iter().map(|w| old[w]).collect();
    }
    let embedding = from_neighbor_rotations(g.graph(), &rots)?;
    Ok(Some(TorusWitness { embedding, method: WitnessMethod::ThreeAlternating }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AltJump {
    /// The graph embeds in the torus, so the hypothesis does not apply.
    Vacuous,
    Checked { xy_absent: bool, torus_obstruction: bool, alternating_on_double_torus: bool },
}

/// For an obstruction that is not toroidal: records whether `xy` is
/// absent, whether the graph is a torus obstruction, and whether it is
/// alternating on the double torus.
pub fn alt_jump_check(g: &TerminalGraph, budget: &mut Budget) -> Result<AltJump> {
    let m = g.graph().to_multigraph();
    if min_genus_capped(&m, 1, budget)?.is_some() {
        return Ok(AltJump::Vacuous);
    }
    let torus_obstruction = {
        let mut ok = true;
        for (u, v) in g.edges() {
            let mut h = g.graph().clone();
            h.remove_edge(u, v)?;
            if min_genus_capped(&h.to_multigraph(), 1, budget)?.is_none() {
                ok = false;
                break;
            }
        }
        ok
    };
    let alternating = g.graph().is_connected()
        && min_genus_capped(&m, 2, budget)?.is_some()
        && find_alternating_embedding(&m, g.x(), g.y(), 2, budget)?.is_some();
    Ok(AltJump::Checked { xy_absent: !g.has_xy(), torus_obstruction, alternating_on_double_torus: alternating })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::xy_sum;

    fn t(g: SimpleGraph, x: usize, y: usize) -> TerminalGraph {
        TerminalGraph::new(g, x, y).unwrap()
    }

    #[test]
    fn sums_and_members() {
        let k5 = t(SimpleGraph::complete(5), 0, 1);
        let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 3);
        let s = xy_sum(&k5, &k33, false).unwrap();
        let v = verify_obstruction(&s).unwrap();
        assert!(v.is_obstruction);
        assert_eq!(
            v.classification,
            Some(Classification::SumOfKuratowskis { left: KuratowskiKind::K5, right: KuratowskiKind::K33 })
        );
        assert!(!verify_obstruction(&k5).unwrap().is_obstruction);
        assert!(!verify_obstruction(&t(SimpleGraph::cycle(5), 0, 2)).unwrap().is_obstruction);
    }

    #[test]
    fn kuratowski_with_isolated_terminals() {
        let g = SimpleGraph::complete_bipartite(3, 3).disjoint_union(&SimpleGraph::new(2).unwrap()).unwrap();
        let t2 = t(g, 6, 7);
        let v = verify_obstruction(&t2).unwrap();
        assert!(v.is_obstruction);
        assert_eq!(v.classification, Some(Classification::KuratowskiPlusIsolated { kind: KuratowskiKind::K33, isolated: 2 }));
    }

    #[test]
    fn tags_round_trip() {
        for c in [
            Classification::SplitKuratowski { kind: KuratowskiKind::K5, split: true },
            Classification::SplitKuratowski { kind: KuratowskiKind::K33, split: false },
            Classification::KuratowskiPlusIsolated { kind: KuratowskiKind::K5, isolated: 1 },
            Classification::SumOfKuratowskis { left: KuratowskiKind::K5, right: KuratowskiKind::K33 },
            Classification::LabelledType { connectivity: Connectivity::TwoConnected },
            Classification::Unclassified,
        ] {
            if c != Classification::Unclassified {
                assert_eq!(Classification::from_tag(&c.tag()), Some(c));
            }
        }
    }

    #[test]
    fn hexagon_type() {
        // 6-cycle with alternating single labels and the edge xy.
        let mut g = SimpleGraph::cycle(6);
        let x = g.add_vertex().unwrap();
        let y = g.add_vertex().unwrap();
        for v in 0..6 {
            g.add_edge(v, if v % 2 == 0 { x } else { y }).unwrap();
        }
        g.add_edge(x, y).unwrap();
        let h = t(g, x, y);
        let v = verify_obstruction(&h).unwrap();
        assert!(v.is_obstruction);
        assert_eq!(v.classification, Some(Classification::LabelledType { connectivity: Connectivity::TwoConnected }));
        let w = torus_witness(&h, &mut Budget::unlimited()).unwrap();
        assert_eq!(w.method, WitnessMethod::ThreeAlternating);
        assert!(w.verify(&h));
    }

    #[test]
    fn alt_jump_vacuous_on_torus() {
        let k5 = t(SimpleGraph::complete(5), 0, 1);
        let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 3);
        let s = xy_sum(&k5, &k33, false).unwrap();
        assert_eq!(alt_jump_check(&s, &mut Budget::unlimited()).unwrap(), AltJump::Vacuous);
    }
}
