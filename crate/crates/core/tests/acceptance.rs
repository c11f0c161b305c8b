//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xyalt::alternation::{
    arrange_2_alternating, brute_min_transitions, check_witness, contains_xyxyxy, membership_a1, membership_oracle,
    membership_via_gstar, transitions, Arrangement, LabelSet, LabelSequence, MembershipVerdict, Witness,
};
use xyalt::embedding::{cut_along, edge_of, min_genus, surgery_reduce, AlternatingWitness, Budget, RotationEmbedding};
use xyalt::graph::{plus_xy, simple_identify, star_augment, xy_sum, Label, SimpleGraph, TerminalGraph};
use xyalt::obstruction::{
    builtin_catalog, search_obstructions, torus_witness, verify_obstruction, Classification, SearchConstraints,
};
use xyalt::planarity::{find_k_graph_disjoint, planar, planar_via_overlap};
use xyalt::Error;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn genus(g: &SimpleGraph, budget: u64) -> Result<usize, Error> {
    min_genus(&g.to_multigraph(), &mut Budget::new(budget)).map(|r| r.genus)
}

fn kuratowski_pairs() -> Vec<TerminalGraph> {
    let mut out = Vec::new();
    for g in [SimpleGraph::complete(5), SimpleGraph::complete_bipartite(3, 3)] {
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                out.push(TerminalGraph::new(g.clone(), x, y).unwrap());
            }
        }
    }
    out
}

/// Alternating witnesses collected by criterion 1 for criterion 6.
fn alternating_witnesses(vs: &[(TerminalGraph, MembershipVerdict)]) -> Vec<(TerminalGraph, AlternatingWitness)> {
    vs.iter()
        .filter_map(|(g, v)| match &v.witness {
            Witness::Alternating { component, witness } => {
                assert_eq!(component.len(), g.n(), "Kuratowski graphs are connected");
                Some((g.clone(), witness.clone()))
            }
            _ => None,
        })
        .collect()
}

fn criterion_1(witnesses: &mut Vec<(TerminalGraph, MembershipVerdict)>) -> Outcome {
    let start = Instant::now();
    let pairs = kuratowski_pairs();
    for g in &pairs {
        let a = membership_a1(g).map_err(|e| e.to_string())?;
        let o = membership_oracle(g, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
        let s = membership_via_gstar(g, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
        for v in [&a, &o, &s] {
            check_witness(g, v).map_err(|e| format!("witness {:?} at {:?}: {e}", v.decider, (g.x(), g.y())))?;
            ensure(v.member, || format!("{:?} says non-member at {:?}", v.decider, (g.x(), g.y())))?;
        }
        witnesses.push((g.clone(), o));
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:.2?}"))?;
    Ok(format!("{} terminal pairs (10 of K5, all 15 of K3,3), three deciders agree, {t:.2?}", pairs.len()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let pairs = kuratowski_pairs();
    let mut classes = BTreeSet::new();
    let mut sums = Vec::new();
    for a in &pairs {
        for b in &pairs {
            let s = xy_sum(a, b, false).unwrap();
            if classes.insert(s.canonical_form()) {
                sums.push(s);
            }
        }
    }
    ensure(sums.len() == 6, || format!("{} classes", sums.len()))?;
    for s in &sums {
        let v = verify_obstruction(s).map_err(|e| e.to_string())?;
        ensure(v.is_obstruction, || format!("sum {:?} is not an obstruction", s.edges()))?;
    }
    Ok(format!("6 classes from {} ordered pairs, all obstructions, {:.2?}", pairs.len() * pairs.len(), start.elapsed()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let c = SearchConstraints { require_xy_edge: true, ..SearchConstraints::new(8) };
    let cat = search_obstructions(&c).map_err(|e| e.to_string())?;
    ensure(cat.complete, || "search incomplete".into())?;
    let names: Vec<&str> = cat.entries.iter().map(|e| e.name.as_str()).collect();
    ensure(cat.entries.len() == 5, || format!("{} obstructions: {names:?}", cat.entries.len()))?;
    let splits = cat
        .entries
        .iter()
        .filter(|e| matches!(e.classification, Classification::SplitKuratowski { split: true, .. }))
        .count();
    let labelled: BTreeSet<&str> = cat
        .entries
        .iter()
        .filter(|e| matches!(e.classification, Classification::LabelledType { .. }))
        .map(|e| e.name.as_str())
        .collect();
    ensure(splits == 3 && labelled == BTreeSet::from(["Pentagon", "Hexagon"]), || format!("{names:?}"))?;
    for e in &cat.entries {
        let g = e.terminal_graph().unwrap();
        let mut h = g.clone();
        h.remove_edge(g.x(), g.y()).unwrap();
        ensure(planar(h.graph()), || format!("{}: G - xy is not planar", e.name))?;
    }
    Ok(format!("5 obstructions (3 splits, Pentagon, Hexagon), {:.2?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut decided, mut with_gstar, mut skipped, mut members) = (0, 0, 0, 0);
    while decided < 500 {
        let n = rng.gen_range(6..=9);
        let p = rng.gen_range(0.35..0.8);
        let g = random_graph(&mut rng, n, p);
        if !g.is_connected() {
            continue;
        }
        let t = TerminalGraph::new(g, 0, rng.gen_range(1..n)).unwrap();
        let a = membership_a1(&t).map_err(|e| e.to_string())?;
        let o = match membership_oracle(&t, &mut Budget::new(5_000_000)) {
            Err(Error::BudgetExceeded(_)) => {
                skipped += 1;
                continue;
            }
            r => r.map_err(|e| e.to_string())?,
        };
        ensure(a.member == o.member, || format!("A1 vs oracle on {:?}", t.edges()))?;
        check_witness(&t, &a).map_err(|e| e.to_string())?;
        check_witness(&t, &o).map_err(|e| e.to_string())?;
        if n <= 8 {
            match membership_via_gstar(&t, &mut Budget::new(5_000_000)) {
                Err(Error::BudgetExceeded(_)) => skipped += 1,
                r => {
                    let s = r.map_err(|e| e.to_string())?;
                    ensure(a.member == s.member, || format!("A1 vs G* on {:?}", t.edges()))?;
                    check_witness(&t, &s).map_err(|e| e.to_string())?;
                    with_gstar += 1;
                }
            }
        }
        members += a.member as usize;
        decided += 1;
    }
    Ok(format!(
        "{decided} graphs ({members} members), {with_gstar} also via G*, 0 disagreements, {skipped} over budget"
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    const B: u64 = 3_000_000;
    let (mut checked, mut skipped) = (0, 0);
    let piece = |rng: &mut ChaCha8Rng| loop {
        let n = rng.gen_range(3..=6);
        let p = rng.gen_range(0.4..0.9);
        let mut g = random_graph(rng, n, p);
        let _ = g.remove_edge(0, 1);
        if g.is_connected() {
            return TerminalGraph::new(g, 0, 1).unwrap();
        }
    };
    let eps = |g: &TerminalGraph| -> Result<usize, Error> {
        let p = plus_xy(g);
        Ok((genus(star_augment(&p)?.graph(), B)? == genus(p.graph(), B)?) as usize)
    };
    while checked < 100 {
        let (g1, g2) = (piece(&mut rng), piece(&mut rng));
        let sum = xy_sum(&g1, &g2, false).unwrap();
        let values = (|| -> Result<(usize, usize), Error> {
            let direct = genus(sum.graph(), B)?;
            let joined = genus(plus_xy(&g1).graph(), B)? + genus(plus_xy(&g2).graph(), B)? - eps(&g1)? * eps(&g2)?;
            let apart = genus(g1.graph(), B)? + genus(g2.graph(), B)? + 1;
            Ok((direct, joined.min(apart)))
        })();
        match values {
            Err(Error::BudgetExceeded(_)) => skipped += 1,
            Err(e) => return Err(e.to_string()),
            Ok((direct, formula)) => {
                ensure(direct == formula, || {
                    format!("{direct} != {formula} for {:?} and {:?}", g1.edges(), g2.edges())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} random sums match the formula, {skipped} over budget (excluded)"))
}

/// Face as a cyclic edge sequence, canonical up to rotation and reversal.
fn face_key(emb: &RotationEmbedding, face: usize) -> Vec<usize> {
    let e: Vec<usize> = emb.trace_faces()[face].darts.iter().map(|&d| edge_of(d)).collect();
    let r: Vec<usize> = e.iter().rev().copied().collect();
    let turn = |s: &[usize], i: usize| s[i..].iter().chain(&s[..i]).copied().collect::<Vec<_>>();
    (0..e.len()).flat_map(|i| [turn(&e, i), turn(&r, i)]).min().unwrap_or_default()
}

fn face_keys(emb: &RotationEmbedding) -> Vec<Vec<usize>> {
    let mut keys: Vec<Vec<usize>> = (0..emb.face_count()).map(|f| face_key(emb, f)).collect();
    keys.sort();
    keys
}

fn criterion_6(witnesses: &[(TerminalGraph, AlternatingWitness)]) -> Outcome {
    ensure(!witnesses.is_empty(), || "no witnesses from criterion 1".into())?;
    for (g, w) in witnesses {
        let tag = || format!("{} vertices, terminals {:?}", g.n(), (g.x(), g.y()));
        let (reduced, curve) = surgery_reduce(&w.embedding, w).map_err(|e| format!("{}: {e}", tag()))?;
        let before = w.embedding.euler_genus();
        ensure(reduced.euler_genus() + 1 == before, || format!("{}: genus {before} -> {}", tag(), reduced.euler_genus()))?;
        let mut old = face_keys(&w.embedding);
        let walk = face_key(&w.embedding, w.face);
        old.remove(old.binary_search(&walk).unwrap());
        let new = face_keys(&reduced);
        ensure(new.len() == old.len() + 2, || format!("{}: face count", tag()))?;
        let mut rest = new.clone();
        for f in &old {
            let i = rest.binary_search(f).map_err(|_| format!("{}: a face was not preserved", tag()))?;
            rest.remove(i);
        }
        let cut = cut_along(&reduced, &curve).map_err(|e| format!("{}: {e}", tag()))?;
        let simple = cut.embedding.host().simple().map_err(|e| e.to_string())?;
        ensure(planar(&simple) && cut.embedding.genus() == Ok(0), || format!("{}: cut not planar", tag()))?;
        let quad = [cut.x1, cut.y1, cut.x2, cut.y2];
        ensure(cut.embedding.trace_faces()[cut.face].has_cyclic_order(&quad), || format!("{}: quad", tag()))?;
    }
    Ok(format!("{} alternating witnesses: genus drops by 1, other faces kept, cut planar and interlaced", witnesses.len()))
}

fn criterion_7() -> Outcome {
    let cat = builtin_catalog().map_err(|e| e.to_string())?;
    for e in &cat.entries {
        let g = e.terminal_graph().map_err(|e| e.to_string())?;
        ensure(!planar(g.graph()), || format!("{} is planar", e.name))?;
        let w = torus_witness(&g, &mut Budget::new(20_000_000)).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(w.verify(&g) && w.embedding.genus() == Ok(1), || format!("{}: witness rejected", e.name))?;
    }
    Ok(format!("{} catalog entries, each with a checked torus embedding", cat.entries.len()))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut found = 0;
    while found < 200 {
        let n = rng.gen_range(6..=9);
        let p = rng.gen_range(0.5..0.9);
        let g = random_graph(&mut rng, n, p);
        let t = TerminalGraph::new(g, 0, rng.gen_range(1..n)).unwrap();
        if planar(t.graph()) || planar(&simple_identify(&t)) {
            continue;
        }
        let w = find_k_graph_disjoint(&t, &mut Budget::new(10_000_000)).map_err(|e| e.to_string())?;
        let w = w.ok_or_else(|| format!("no K-graph for {:?} at {:?}", t.edges(), (t.x(), t.y())))?;
        ensure(w.verify(&t), || format!("witness rejected for {:?}", t.edges()))?;
        found += 1;
    }
    Ok(format!("{found} random graphs with G and G/xy non-planar, every witness verified"))
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for len in 1..=7u32 {
        for code in 0..3u32.pow(len) {
            let r: Vec<LabelSet> = (0..len)
                .map(|i| match code / 3u32.pow(i) % 3 {
                    0 => LabelSet::X,
                    1 => LabelSet::Y,
                    _ => LabelSet::XY,
                })
                .collect();
            if r.iter().filter(|l| l.count() == 2).count() > 4 {
                continue;
            }
            count += 1;
            let (best, _) = brute_min_transitions(&r).unwrap();
            let pattern = contains_xyxyxy(&r);
            ensure((best <= 4) == pattern.is_none(), || format!("{r:?}: brute {best}, pattern {pattern:?}"))?;
            match arrange_2_alternating(&r) {
                Arrangement::Arranged(per) => {
                    ensure(pattern.is_none(), || format!("{r:?}: arranged despite a pattern"))?;
                    for (l, p) in r.iter().zip(&per) {
                        let set = LabelSet { x: p.contains(&Label::X), y: p.contains(&Label::Y) };
                        ensure(set == *l && p.len() == l.count(), || format!("{r:?}: labels changed"))?;
                    }
                    let seq = LabelSequence(per.into_iter().flatten().collect());
                    ensure(transitions(&seq) <= 4, || format!("{r:?}: {} transitions", transitions(&seq)))?;
                }
                Arrangement::Pattern(p) => {
                    ensure(best > 4, || format!("{r:?}: pattern reported but brute force arranges"))?;
                    let expect = [Label::X, Label::Y];
                    // Six distinct positions in cyclic order have exactly one descent.
                    let descents = (0..6).filter(|&i| p[i] >= p[(i + 1) % 6]).count();
                    let ok = descents == 1 && (0..6).all(|i| r[p[i]].has(expect[i % 2]));
                    ensure(ok, || format!("{r:?}: bad pattern {p:?}"))?;
                }
                Arrangement::Impossible => return Err(format!("{r:?}: neither arrangement nor pattern")),
            }
        }
    }
    Ok(format!("{count} label sequences, arrangement exists exactly when XYXYXY is absent"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut done, mut nonplanar) = (0, 0);
    while done < 1000 {
        let k = rng.gen_range(4..=8);
        let n = rng.gen_range(k..=10);
        let mut g = SimpleGraph::new(n).unwrap();
        let cycle: Vec<usize> = (0..k).collect();
        for i in 0..k {
            g.add_edge(i, (i + 1) % k).unwrap();
        }
        // Chords, and extra vertices attached to the cycle and to each other.
        for _ in 0..rng.gen_range(0..=4) {
            let (u, v) = (rng.gen_range(0..k), rng.gen_range(0..k));
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u, v).unwrap();
            }
        }
        for v in k..n {
            for _ in 0..rng.gen_range(2..=3) {
                let u = rng.gen_range(0..k);
                if !g.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
            if v > k && rng.gen_bool(0.4) {
                g.add_edge(v, rng.gen_range(k..v)).unwrap();
            }
        }
        let verdict = match planar_via_overlap(&g, &cycle) {
            Err(Error::NonPlanarBridge(_)) => continue,
            r => r.map_err(|e| e.to_string())?,
        };
        ensure(verdict.planar == planar(&g), || format!("disagree on {:?}", g.edges()))?;
        nonplanar += !verdict.planar as usize;
        done += 1;
    }
    Ok(format!("{done} instances ({nonplanar} non-planar), 0 disagreements"))
}

fn main() {
    let mut witnesses = Vec::new();
    let r1 = criterion_1(&mut witnesses);
    let alternating = alternating_witnesses(&witnesses);
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "Kuratowski alternation", r1),
        (2, "six Kuratowski sums", criterion_2()),
        (3, "five obstructions with xy", criterion_3()),
        (4, "decider equivalence", criterion_4()),
        (5, "genus of xy-sums", criterion_5()),
        (6, "surgery", criterion_6(&alternating)),
        (7, "torus embeddability", criterion_7()),
        (8, "disjoint K-graphs", criterion_8()),
        (9, "boundary arrangement", criterion_9()),
        (10, "overlap planarity", criterion_10()),
    ];
    let mut failed = 0;
    for (i, name, r) in &results {
        match r {
            Ok(detail) => println!("criterion {i:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {i:>2} FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
