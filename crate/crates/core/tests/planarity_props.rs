use std::ops::ControlFlow;

use proptest::prelude::*;
use xyalt::canon::graphs_isomorphic;
use xyalt::embedding::{enumerate_embeddings, Budget};
use xyalt::graph::SimpleGraph;
use xyalt::planarity::{cofacial_in_order, is_planar, verify_planarity, Planarity};

fn graph(min_n: usize, max_n: usize, p: f64) -> impl Strategy<Value = SimpleGraph> {
    (min_n..=max_n)
        .prop_flat_map(move |n| (Just(n), proptest::collection::vec(proptest::bool::weighted(p), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let mut g = SimpleGraph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
}

fn connect(mut g: SimpleGraph) -> SimpleGraph {
    for v in 1..g.n() {
        if g.reach(0, g.all_vertices()) >> v & 1 == 0 {
            g.add_edge(v - 1, v).unwrap();
        }
    }
    g
}

/// Planarity by searching for a genus-0 rotation system, per component.
fn exhaustive_planar(g: &SimpleGraph) -> bool {
    let comps = g.components();
    comps.iter().all(|&c| {
        let (h, _) = g.induced(c);
        let mut found = false;
        enumerate_embeddings(&h.to_multigraph(), 0, &mut Budget::unlimited(), |_, _| {
            found = true;
            ControlFlow::Break(())
        })
        .unwrap();
        found
    })
}

/// Suppresses degree-2 vertices of an edge list and drops isolated ones.
fn topological_core(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    while let Some(v) = (0..n).find(|&v| adj[v].len() == 2) {
        let (a, b) = (adj[v][0], adj[v][1]);
        adj[v].clear();
        adj[a].retain(|&w| w != v);
        adj[b].retain(|&w| w != v);
        assert!(!adj[a].contains(&b), "suppression would create a parallel edge");
        adj[a].push(b);
        adj[b].push(a);
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    let mut g = SimpleGraph::new(keep.len()).unwrap();
    for (i, &v) in keep.iter().enumerate() {
        for &w in &adj[v] {
            let j = keep.iter().position(|&k| k == w).unwrap();
            if i < j {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn planarity_matches_exhaustive_search(g in graph(4, 8, 0.45)) {
        let p = is_planar(&g);
        prop_assert_eq!(p.is_planar(), exhaustive_planar(&g));
        prop_assert!(verify_planarity(&g, &p));
    }

    #[test]
    fn kuratowski_certificates_reduce_to_k5_or_k33(g in graph(5, 9, 0.6)) {
        if let Planarity::NonPlanar(k) = is_planar(&g) {
            for &(a, b) in &k.edges {
                prop_assert!(g.has_edge(a, b));
            }
            let core = topological_core(g.n(), &k.edges);
            prop_assert!(
                graphs_isomorphic(&core, &SimpleGraph::complete(5))
                    || graphs_isomorphic(&core, &SimpleGraph::complete_bipartite(3, 3))
            );
        }
    }

    #[test]
    fn cofacial_matches_a_face_scan(g in graph(4, 7, 0.4), pick in any::<u64>()) {
        let g = connect(g);
        prop_assume!(is_planar(&g).is_planar());
        let n = g.n();
        let mut verts: Vec<usize> = (0..n).collect();
        let mut s = pick;
        for i in (1..n).rev() {
            verts.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let quad = [verts[0], verts[1], verts[2], verts[3]];
        let mut scan = false;
        enumerate_embeddings(&g.to_multigraph(), 0, &mut Budget::unlimited(), |e, _| {
            if e.trace_faces().iter().any(|f| f.has_cyclic_order(&quad)) {
                scan = true;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        prop_assert_eq!(cofacial_in_order(&g, quad).unwrap(), scan);
    }
}
