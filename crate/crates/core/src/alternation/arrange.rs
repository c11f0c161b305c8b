//! Ordering the labels along a boundary so that the resulting cyclic label
//! sequence has at most four transitions.

use serde::Serialize;

use super::{transitions, LabelSequence, LabelSet};
use crate::graph::Label;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Arrangement {
    /// Label order for each input vertex (empty for unlabelled ones).
    Arranged(Vec<Vec<Label>>),
    /// Six input positions whose labels read `X, Y, X, Y, X, Y` cyclically.
    Pattern([usize; 6]),
    /// Neither: only possible with more than four doubly labelled vertices.
    Impossible,
}

impl Arrangement {
    /// Concatenated label sequence of an arrangement.
    pub fn sequence(&self) -> Option<LabelSequence> {
        match self {
            Arrangement::Arranged(per) => Some(LabelSequence(per.iter().flatten().copied().collect())),
            _ => None,
        }
    }
}

/// Six distinct positions of `r`, in cyclic order, carrying `X, Y, X, Y, X, Y`.
pub fn contains_xyxyxy(r: &[LabelSet]) -> Option<[usize; 6]> {
    let n = r.len();
    const PAT: [Label; 6] = [Label::X, Label::Y, Label::X, Label::Y, Label::X, Label::Y];
    for s in 0..n {
        let mut out = [0; 6];
        let mut k = 0;
        for i in 0..n {
            let p = (s + i) % n;
            if k < 6 && r[p].has(PAT[k]) {
                out[k] = p;
                k += 1;
            }
        }
        if k == 6 {
            return Some(out);
        }
    }
    None
}

/// Orders the labels of `r` (cyclic, labels of one vertex kept together) so
/// that at most four transitions occur, by repeatedly merging a label into
/// an equal neighbouring single label. Returns the pattern instead when one
/// exists.
pub fn arrange_2_alternating(r: &[LabelSet]) -> Arrangement {
    if let Some(p) = contains_xyxyxy(r) {
        return Arrangement::Pattern(p);
    }
    let active: Vec<usize> = (0..r.len()).filter(|&i| r[i].count() > 0).collect();
    let mut labels = r.to_vec();
    match arrange(&mut labels, active) {
        Some(mut per) => {
            per.resize(r.len(), Vec::new());
            Arrangement::Arranged(per)
        }
        None => Arrangement::Impossible,
    }
}

fn arrange(labels: &mut [LabelSet], active: Vec<usize>) -> Option<Vec<Vec<Label>>> {
    let m = active.len();
    if m >= 2 {
        for i in 0..m {
            for (ui, vi) in [(i, (i + 1) % m), ((i + 1) % m, i)] {
                let (u, v) = (active[ui], active[vi]);
                if labels[v].count() != 1 {
                    continue;
                }
                let a = if labels[v].x { Label::X } else { Label::Y };
                if !labels[u].has(a) {
                    continue;
                }
                let saved = labels[u];
                labels[u] = saved.without(a);
                let next: Vec<usize> = active.iter().copied().filter(|&w| labels[w].count() > 0).collect();
                let sub = arrange(labels, next);
                labels[u] = saved;
                let mut per = sub?;
                per.resize(per.len().max(u + 1), Vec::new());
                // u sits just before v: A goes last; just after v: A goes first.
                if (ui + 1) % m == vi {
                    per[u].push(a);
                } else {
                    per[u].insert(0, a);
                }
                return Some(per);
            }
        }
    }
    let mut per: Vec<Vec<Label>> = vec![Vec::new(); active.iter().map(|&v| v + 1).max().unwrap_or(0)];
    if active.iter().all(|&v| labels[v].count() == 2) {
        if m > 4 {
            return None;
        }
        for (k, &v) in active.iter().enumerate() {
            per[v] = if k % 2 == 0 { vec![Label::X, Label::Y] } else { vec![Label::Y, Label::X] };
        }
    } else {
        // Irreducible singles alternate; six or more would form the pattern.
        if m > 4 || active.iter().any(|&v| labels[v].count() != 1) {
            return None;
        }
        for &v in &active {
            per[v] = vec![if labels[v].x { Label::X } else { Label::Y }];
        }
    }
    let seq = LabelSequence(per.iter().flatten().copied().collect());
    (transitions(&seq) <= 4).then_some(per)
}

/// Least transition count over every per-vertex label order, by trying all
/// orders of the doubly labelled vertices. `None` if nothing is labelled.
pub fn brute_min_transitions(r: &[LabelSet]) -> Option<(usize, Vec<Vec<Label>>)> {
    if r.iter().all(|l| l.count() == 0) {
        return None;
    }
    let doubles: Vec<usize> = (0..r.len()).filter(|&i| r[i].count() == 2).collect();
    let mut best: Option<(usize, Vec<Vec<Label>>)> = None;
    for mask in 0u32..1 << doubles.len() {
        let per: Vec<Vec<Label>> = (0..r.len())
            .map(|i| match (r[i].x, r[i].y) {
                (false, false) => vec![],
                (true, false) => vec![Label::X],
                (false, true) => vec![Label::Y],
                (true, true) => {
                    let k = doubles.binary_search(&i).expect("double");
                    if mask >> k & 1 == 0 {
                        vec![Label::X, Label::Y]
                    } else {
                        vec![Label::Y, Label::X]
                    }
                }
            })
            .collect();
        let t = transitions(&LabelSequence(per.iter().flatten().copied().collect()));
        if best.as_ref().is_none_or(|(b, _)| t < *b) {
            best = Some((t, per));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Vec<LabelSet> {
        s.split_whitespace()
            .map(|t| match t {
                "-" => LabelSet::NONE,
                "X" => LabelSet::X,
                "Y" => LabelSet::Y,
                _ => LabelSet::XY,
            })
            .collect()
    }

    fn check(r: &[LabelSet]) {
        let a = arrange_2_alternating(r);
        let brute = brute_min_transitions(r).map(|(t, _)| t).unwrap_or(0);
        match &a {
            Arrangement::Arranged(per) => {
                for (i, l) in per.iter().enumerate() {
                    let got = l.iter().fold(LabelSet::NONE, |s, &x| match x {
                        Label::X => LabelSet { x: true, ..s },
                        Label::Y => LabelSet { y: true, ..s },
                    });
                    assert_eq!(got, r[i], "{r:?}");
                    assert_eq!(l.len(), r[i].count());
                }
                assert!(transitions(&a.sequence().unwrap()) <= 4, "{r:?} {a:?}");
            }
            Arrangement::Pattern(p) => {
                let pat = [Label::X, Label::Y, Label::X, Label::Y, Label::X, Label::Y];
                assert!((0..6).all(|k| r[p[k]].has(pat[k])));
                let start = p.iter().position(|&i| i == *p.iter().min().unwrap()).unwrap();
                assert!((0..5).all(|k| p[(start + k) % 6] < p[(start + k + 1) % 6]));
                assert!(brute >= 6);
            }
            Arrangement::Impossible => {
                assert!(r.iter().filter(|l| l.count() == 2).count() > 4);
                assert!(brute > 4);
            }
        }
    }

    #[test]
    fn small_examples() {
        let four = parse("XY XY XY XY");
        let Arrangement::Arranged(per) = arrange_2_alternating(&four) else { panic!() };
        assert_eq!(per[0], vec![Label::X, Label::Y]);
        assert_eq!(per[1], vec![Label::Y, Label::X]);
        assert_eq!(transitions(&arrange_2_alternating(&four).sequence().unwrap()), 4);
        let five = parse("XY XY XY XY XY");
        assert_eq!(arrange_2_alternating(&five), Arrangement::Impossible);
        assert_eq!(brute_min_transitions(&five).unwrap().0, 6);
        let xxyy = parse("X X Y Y");
        assert_eq!(transitions(&arrange_2_alternating(&xxyy).sequence().unwrap()), 2);
        assert!(matches!(arrange_2_alternating(&parse("X Y X Y X Y")), Arrangement::Pattern(_)));
    }

    #[test]
    fn exhaustive_small() {
        // Every sequence over {-, X, Y, XY} of length up to 6.
        for len in 1..=6u32 {
            for code in 0..4u32.pow(len) {
                let r: Vec<LabelSet> = (0..len)
                    .map(|i| match code / 4u32.pow(i) % 4 {
                        0 => LabelSet::NONE,
                        1 => LabelSet::X,
                        2 => LabelSet::Y,
                        _ => LabelSet::XY,
                    })
                    .collect();
                check(&r);
            }
        }
    }
}
