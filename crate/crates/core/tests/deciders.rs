//! The three membership deciders agree on random small graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xyalt::alternation::{check_witness, membership_a1, membership_oracle, membership_via_gstar};
use xyalt::embedding::Budget;
use xyalt::graph::{SimpleGraph, TerminalGraph};

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

#[test]
fn deciders_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut members, mut non) = (0, 0);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(5..=8);
        let p = rng.gen_range(0.45..0.85);
        let g = random_graph(&mut rng, n, p);
        if xyalt::planarity::planar(&g) {
            continue;
        }
        let t = TerminalGraph::new(g, 0, rng.gen_range(1..n)).unwrap();
        let a = membership_a1(&t).unwrap();
        let o = membership_oracle(&t, &mut Budget::new(2_000_000)).unwrap();
        let s = membership_via_gstar(&t, &mut Budget::new(2_000_000)).unwrap();
        assert_eq!(a.member, o.member, "{:?}", t.edges());
        assert_eq!(a.member, s.member, "{:?}", t.edges());
        check_witness(&t, &a).unwrap();
        check_witness(&t, &o).unwrap();
        check_witness(&t, &s).unwrap();
        if a.member {
            members += 1;
        } else {
            non += 1;
        }
        checked += 1;
    }
    assert!(members > 5 && non > 5, "{members} members, {non} non-members");
}
