//! Catalog of obstructions: built from Kuratowski graphs, plus the
//! labelled-type entries produced by the search and pinned in a data file.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{classify, verify_obstruction, Classification};
use crate::alternation::{to_labelled, LabelSet};
use crate::error::{parse_err, Result};
use crate::formats::{decode_graph6, encode_graph6};
use crate::graph::{cuts_of, splits_of, xy_sum, SimpleGraph, TerminalGraph};

/// Labelled-type obstructions found by the search, one per line:
/// `graph6 x y tag name [tentative]`.
pub const LABELLED_DATA: &str = include_str!("../../data/labelled_obstructions.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    /// Canonically relabelled; terminals are 0 and 1.
    pub graph6: String,
    pub x: usize,
    pub y: usize,
    pub name: String,
    /// The name is a guess from a verbal description.
    pub tentative: bool,
    pub classification: Classification,
}

impl CatalogEntry {
    /// Canonical entry with a descriptive name.
    pub fn named(g: TerminalGraph) -> CatalogEntry {
        let g = g.canonical_form().terminal_graph();
        let classification = classify(&g);
        let (name, tentative) = describe(&g, &classification);
        CatalogEntry { graph6: encode_graph6(g.graph()), x: g.x(), y: g.y(), name, tentative, classification }
    }

    pub fn terminal_graph(&self) -> Result<TerminalGraph> {
        TerminalGraph::new(decode_graph6(&self.graph6)?, self.x, self.y)
    }
}

fn is_cycle(h: &SimpleGraph) -> bool {
    h.n() >= 3 && h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
}

/// Cycle order of a cycle graph starting at vertex 0.
fn cycle_order(h: &SimpleGraph) -> Vec<usize> {
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while order.len() < h.n() {
        let nxt = h.neighbors(cur).find(|&w| w != prev).expect("cycle");
        prev = cur;
        cur = nxt;
        order.push(cur);
    }
    order
}

fn describe(g: &TerminalGraph, c: &Classification) -> (String, bool) {
    let k = |k: &crate::planarity::KuratowskiKind| match k {
        crate::planarity::KuratowskiKind::K5 => "K5",
        crate::planarity::KuratowskiKind::K33 => "K3,3",
    };
    match c {
        Classification::SplitKuratowski { kind, split } => {
            (format!("{} of {}", if *split { "split" } else { "cut" }, k(kind)), false)
        }
        Classification::KuratowskiPlusIsolated { kind, isolated } => {
            (format!("{} + {isolated} isolated terminal{}", k(kind), if *isolated == 2 { "s" } else { "" }), false)
        }
        Classification::SumOfKuratowskis { left, right } => (format!("{} + {} sum", k(left), k(right)), false),
        Classification::LabelledType { .. } => {
            let h = to_labelled(g);
            if g.has_xy() && is_cycle(&h.graph) {
                if h.n() == 5 && h.labels.iter().all(|&l| l == LabelSet::XY) {
                    return ("Pentagon".into(), false);
                }
                let order = cycle_order(&h.graph);
                let alt = |i: usize| if i.is_multiple_of(2) { LabelSet::X } else { LabelSet::Y };
                let ok = |shift: usize| (0..6).all(|i| h.labels[order[i]] == alt(i + shift));
                if h.n() == 6 && (ok(0) || ok(1)) {
                    return ("Hexagon".into(), false);
                }
            }
            (format!("labelled n={} m={}", g.n(), g.edge_count()), true)
        }
        Classification::Unclassified => ("unclassified".into(), true),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    /// False when a search stopped early.
    pub complete: bool,
}

impl Catalog {
    /// Makes names unique by numbering repeats.
    pub fn number_names(&mut self) {
        let mut count: BTreeMap<String, usize> = BTreeMap::new();
        for e in &self.entries {
            *count.entry(e.name.clone()).or_default() += 1;
        }
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        for e in &mut self.entries {
            if count[&e.name] > 1 {
                let k = seen.entry(e.name.clone()).or_default();
                *k += 1;
                e.name = format!("{} #{k}", e.name);
            }
        }
    }
}

pub fn write_catalog(c: &Catalog) -> String {
    let mut s = String::new();
    for e in &c.entries {
        s.push_str(&format!(
            "{} {} {} {} {}{}\n",
            e.graph6,
            e.x,
            e.y,
            e.classification.tag(),
            e.name.replace(' ', "_"),
            if e.tentative { " tentative" } else { "" }
        ));
    }
    s
}

pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ln = i + 1;
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() < 5 || t.len() > 6 || (t.len() == 6 && t[5] != "tentative") {
            return Err(parse_err(ln, "expected `graph6 x y tag name [tentative]`"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| parse_err(ln, format!("bad terminal `{s}`")));
        let classification = Classification::from_tag(t[3]).ok_or_else(|| parse_err(ln, format!("bad tag `{}`", t[3])))?;
        let e = CatalogEntry {
            graph6: t[0].to_string(),
            x: num(t[1])?,
            y: num(t[2])?,
            name: t[4].replace('_', " "),
            tentative: t.len() == 6,
            classification,
        };
        e.terminal_graph().map_err(|err| parse_err(ln, err.to_string()))?;
        entries.push(e);
    }
    Ok(Catalog { entries, complete: true })
}

fn kuratowski_summands() -> Vec<TerminalGraph> {
    vec![
        TerminalGraph::new(SimpleGraph::complete(5), 0, 1).expect("valid"),
        TerminalGraph::new(SimpleGraph::complete_bipartite(3, 3), 0, 1).expect("valid"),
        TerminalGraph::new(SimpleGraph::complete_bipartite(3, 3), 0, 3).expect("valid"),
    ]
}

/// The `xy`-sums of two Kuratowski graphs, one per isomorphism class.
pub fn kuratowski_sums() -> Vec<TerminalGraph> {
    let s = kuratowski_summands();
    let mut out = BTreeMap::new();
    for i in 0..s.len() {
        for j in i..s.len() {
            let g = xy_sum(&s[i], &s[j], false).expect("small");
            out.entry(g.canonical_form()).or_insert(g);
        }
    }
    out.into_values().collect()
}

/// Obstructions from Kuratowski graphs (splits, cuts, isolated terminals,
/// sums), each verified, followed by the pinned labelled-type entries.
pub fn builtin_catalog() -> Result<Catalog> {
    let mut found = BTreeMap::new();
    let mut push = |g: TerminalGraph| -> Result<()> {
        if verify_obstruction(&g)?.is_obstruction {
            found.entry(g.canonical_form()).or_insert(g);
        }
        Ok(())
    };
    for k in [SimpleGraph::complete(5), SimpleGraph::complete_bipartite(3, 3)] {
        for g in splits_of(&k, 0)?.into_iter().chain(cuts_of(&k, 0)?) {
            push(g)?;
        }
        let n = k.n();
        let one = k.disjoint_union(&SimpleGraph::new(1)?)?;
        push(TerminalGraph::new(one, 0, n)?)?;
        let two = k.disjoint_union(&SimpleGraph::new(2)?)?;
        push(TerminalGraph::new(two, n, n + 1)?)?;
    }
    for g in kuratowski_sums() {
        push(g)?;
    }
    let mut entries: Vec<CatalogEntry> = found.into_values().map(CatalogEntry::named).collect();
    entries.extend(parse_catalog(LABELLED_DATA)?.entries);
    let mut c = Catalog { entries, complete: true };
    c.number_names();
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_kuratowski_sums() {
        let s = kuratowski_sums();
        assert_eq!(s.len(), 6);
        for g in &s {
            assert!(verify_obstruction(g).unwrap().is_obstruction);
        }
    }

    #[test]
    fn catalog_text_round_trip() {
        let g = kuratowski_sums().remove(0);
        let c = Catalog { entries: vec![CatalogEntry::named(g)], complete: true };
        assert_eq!(parse_catalog(&write_catalog(&c)).unwrap(), c);
        assert!(parse_catalog("abc 0 1 nonsense name\n").is_err());
    }
}
