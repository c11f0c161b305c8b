//! Canonical forms of graphs with two terminals.
//!
//! Colour refinement followed by individualisation, keeping the
//! lexicographically least adjacency matrix over all leaves. The terminals
//! always occupy canonical positions 0 and 1, in whichever order gives the
//! least matrix, so the terminal swap counts as an isomorphism.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::graph::{bits, SimpleGraph, TerminalGraph};

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u32>,
    /// `order[i]` is the input vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// True if `y` took position 0.
    pub terminals_swapped: bool,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical edge list `(u, v)`, `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph().edges()
    }

    /// The canonically relabelled graph; terminals are 0 and 1.
    pub fn graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n).expect("size");
        for (u, &row) in self.rows.iter().enumerate() {
            for v in bits(row) {
                if u < v {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    pub fn terminal_graph(&self) -> TerminalGraph {
        TerminalGraph::new(self.graph(), 0, 1).expect("at least two vertices")
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.rows).cmp(&(other.n, &other.rows))
    }
}

/// Refines `colors` (ranks, 0-based) to the coarsest equitable partition
/// finer than it. Ranks are assigned from sorted signatures, so the result
/// is invariant under relabelling.
fn refine(g: &SimpleGraph, colors: &mut [u32]) {
    let n = g.n();
    let mut count = distinct(colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let c = rank as usize + 1;
        if c == count {
            return;
        }
        count = c;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a SimpleGraph,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) {
        let n = self.g.n();
        // First non-singleton cell in colour order.
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1);
        let Some(target) = target else {
            self.leaf(&colors);
            return;
        };
        for v in 0..n {
            if colors[v] as usize != target {
                continue;
            }
            let mut next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + (c as usize == target && u != v) as u32)
                .collect();
            refine(self.g, &mut next);
            self.descend(next);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let n = self.g.n();
        let mut order = vec![0; n];
        for v in 0..n {
            order[colors[v] as usize] = v;
        }
        let rows: Vec<u32> = order
            .iter()
            .map(|&v| {
                let mut r = 0u32;
                for w in self.g.neighbors(v) {
                    r |= 1 << colors[w];
                }
                r
            })
            .collect();
        match &self.best {
            Some((b, _)) if *b <= rows => {}
            _ => self.best = Some((rows, order)),
        }
    }
}

/// Canonical form of a terminal graph (terminal swap allowed).
pub fn canonical_form(t: &TerminalGraph) -> CanonicalForm {
    let g = t.graph();
    let n = g.n();
    let mut colors: Vec<u32> = (0..n).map(|v| (!t.is_terminal(v)) as u32).collect();
    refine(g, &mut colors);
    let mut s = Search { g, best: None };
    s.descend(colors);
    let (rows, order) = s.best.expect("at least one leaf");
    CanonicalForm { n, terminals_swapped: order[0] == t.y(), rows, order }
}

/// Canonical form of a plain graph (no terminals), returned as the relabelled graph.
pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    let mut colors = vec![0u32; g.n()];
    refine(g, &mut colors);
    let mut s = Search { g, best: None };
    s.descend(colors);
    let (_, order) = s.best.expect("leaf");
    let mut inv = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        inv[v] = i;
    }
    g.permuted(&inv)
}

pub fn graphs_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_graph(a) == canonical_graph(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    /// Brute-force isomorphism test over all permutations fixing the terminal set.
    fn brute_iso(a: &TerminalGraph, b: &TerminalGraph) -> bool {
        if a.n() != b.n() || a.edge_count() != b.edge_count() {
            return false;
        }
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(k: usize, perm: &mut Vec<usize>, a: &TerminalGraph, b: &TerminalGraph) -> bool {
            let n = perm.len();
            if k == n {
                let tx = perm[a.x()];
                let ty = perm[a.y()];
                let term_ok = (tx == b.x() && ty == b.y()) || (tx == b.y() && ty == b.x());
                return term_ok && a.edges().iter().all(|&(u, v)| b.graph().has_edge(perm[u], perm[v]));
            }
            for i in k..n {
                perm.swap(k, i);
                if rec(k + 1, perm, a, b) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        rec(0, &mut perm, a, b)
    }

    #[test]
    fn k33_terminal_placement() {
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        let same = TerminalGraph::new(k33.clone(), 0, 1).unwrap();
        let opp = TerminalGraph::new(k33, 0, 3).unwrap();
        assert!(!is_isomorphic(&same, &opp));
        assert!(!brute_iso(&same, &opp));
        assert!(is_isomorphic(&same, &same.swapped()));
    }

    #[test]
    fn c4_relabelling() {
        let a = TerminalGraph::from_edges(4, 0, 2, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = TerminalGraph::from_edges(4, 0, 2, &[(0, 3), (3, 2), (2, 1), (1, 0)]).unwrap();
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn canonical_output_has_terminals_first() {
        let g = TerminalGraph::from_edges(5, 3, 4, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let c = g.canonical_form();
        let t = c.terminal_graph();
        assert!(is_isomorphic(&g, &t));
        assert_eq!(c.order[0..2].iter().copied().collect::<std::collections::BTreeSet<_>>(), [3, 4].into());
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let a = TerminalGraph::from_edges(n, 0, 1, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            // A random relabelling, sometimes with a single edge toggled.
            let mut pg = a.graph().permuted(&perm);
            if rng.gen_bool(0.5) {
                let u = rng.gen_range(0..n);
                let v = (u + 1 + rng.gen_range(0..n - 1)) % n;
                if pg.has_edge(u, v) {
                    pg.remove_edge(u, v).unwrap();
                } else {
                    pg.add_edge(u, v).unwrap();
                }
            }
            let (bx, by) = if rng.gen_bool(0.5) { (perm[0], perm[1]) } else { (perm[1], perm[0]) };
            let b = TerminalGraph::new(pg, bx, by).unwrap();
            assert_eq!(is_isomorphic(&a, &b), brute_iso(&a, &b), "{a:?} vs {b:?}");
        }
    }
}
