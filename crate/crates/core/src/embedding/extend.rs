//! Constructions that extend an embedding of a smaller graph to a larger
//! one on the same surface, or onto the torus. All of them work on
//! orientable embeddings.

use super::{from_neighbor_rotations, RotationEmbedding};
use crate::alternation::{label_sequence_of, transitions, XYLabelledGraph};
use crate::error::{Error, Result};
use crate::graph::{plus_xy, xy_sum, Label, SimpleGraph, TerminalGraph};
use crate::planarity::planar_embedding;

fn simple_host(emb: &RotationEmbedding) -> Result<SimpleGraph> {
    let g = emb.host().simple()?;
    if g.edge_count() != emb.edge_count() {
        return Err(Error::Precondition("embedding host has parallel edges".into()));
    }
    Ok(g)
}

/// Neighbour rotation at `v` rotated to start at `first`.
fn starting_at(emb: &RotationEmbedding, v: usize, first: usize) -> Vec<usize> {
    let r = emb.neighbor_rotation(v);
    let i = r.iter().position(|&w| w == first).expect("neighbour present");
    (0..r.len()).map(|k| r[(i + k) % r.len()]).collect()
}

/// Extends an embedding of `G1⁺` (vertex ids as in `g1`) to the `xy`-sum of
/// `g1` and `g2` with the edge `xy` kept, by gluing a planar embedding of
/// `G2⁺` into a face next to `xy`. The Euler genus does not change.
pub fn extend_with_planar_patch(emb: &RotationEmbedding, g1: &TerminalGraph, g2: &TerminalGraph) -> Result<RotationEmbedding> {
    let (x, y) = (g1.x(), g1.y());
    let h1 = simple_host(emb)?;
    if h1 != *plus_xy(g1).graph() {
        return Err(Error::Precondition("embedding is not of G1 with the edge xy".into()));
    }
    let emb = emb.to_positive()?;
    let p2 = planar_embedding(plus_xy(g2).graph())?;
    let sum = xy_sum(g1, g2, true)?;
    let sum = plus_xy(&sum);
    let mut map = vec![usize::MAX; g2.n()];
    map[g2.x()] = x;
    map[g2.y()] = y;
    let mut next_id = g1.n();
    for (v, m) in map.iter_mut().enumerate() {
        if !g2.is_terminal(v) {
            *m = next_id;
            next_id += 1;
        }
    }
    let mut rots: Vec<Vec<usize>> = (0..g1.n()).map(|v| emb.neighbor_rotation(v)).collect();
    rots.resize(sum.n(), Vec::new());
    for v in 0..g2.n() {
        if !g2.is_terminal(v) {
            rots[map[v]] = p2.neighbor_rotation(v).into_iter().map(|w| map[w]).collect();
        }
    }
    // At x the patch follows xy; at y it precedes yx.
    let r2x: Vec<usize> = starting_at(&p2, g2.x(), g2.y()).into_iter().skip(1).map(|w| map[w]).collect();
    let r2y: Vec<usize> = starting_at(&p2, g2.y(), g2.x()).into_iter().skip(1).map(|w| map[w]).collect();
    let r1x = starting_at(&emb, x, y);
    let r1y = starting_at(&emb, y, x);
    rots[x] = std::iter::once(y).chain(r2x).chain(r1x.into_iter().skip(1)).collect();
    rots[y] = r1y.into_iter().chain(r2y).collect();
    from_neighbor_rotations(sum.graph(), &rots)
}

/// Adds the edge `vw` to an embedding of `G - vw`, where `u` has degree
/// three and neighbours `v` and `w`, routing it along `v, u, w`.
pub fn triangle_extend(emb: &RotationEmbedding, u: usize, v: usize, w: usize) -> Result<RotationEmbedding> {
    let g = simple_host(emb)?;
    if g.degree(u) != 3 || !g.has_edge(u, v) || !g.has_edge(u, w) || g.has_edge(v, w) || v == w {
        return Err(Error::Precondition("need deg(u) = 3, uv and uw present, vw absent".into()));
    }
    let mut emb = emb.to_positive()?;
    let dart = |a: usize, b: usize| -> usize {
        emb.rotation(a).into_iter().find(|&d| emb.head(d) == b).expect("edge present")
    };
    // Orient so that the corner at u runs from uv to uw.
    let (v, w) = if emb.next(dart(u, v)) == dart(u, w) { (v, w) } else { (w, v) };
    let at_v = emb.prev(dart(v, u));
    let at_w = dart(w, u);
    emb.insert_edge(v, Some(at_v), w, Some(at_w))?;
    Ok(emb)
}

/// Turns a plane embedding of `Ĥ` whose label sequence at the identified
/// vertex has six transitions into an embedding of the terminal graph of
/// `h` (terminals `n`, `n + 1`) in the torus. The identified vertex is
/// split into `x` and `y`; the orders of their label runs, and the place of
/// `xy` if present, are chosen by a small search checked by Euler genus.
pub fn torus_from_3_alternating(h: &XYLabelledGraph, emb: &RotationEmbedding) -> Result<RotationEmbedding> {
    let hat = h.hat()?;
    if emb.n() != hat.graph.n || emb.host().edges != hat.graph.edges {
        return Err(Error::Precondition("embedding is not of the identified graph".into()));
    }
    if emb.genus()? != 0 {
        return Err(Error::Precondition("embedding is not planar".into()));
    }
    let seq = label_sequence_of(emb, &hat);
    if transitions(&seq) != 6 {
        return Err(Error::Precondition(format!("label sequence has {} transitions, not 6", transitions(&seq))));
    }
    let t = h.to_terminal()?;
    let (n, x, y, vxy) = (h.n(), t.x(), t.y(), hat.v_xy);
    let label = |d: usize| hat.labels[super::edge_of(d)];
    let mut base: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            emb.rotation(v)
                .into_iter()
                .map(|d| {
                    let w = emb.head(d);
                    if w != vxy {
                        hat.origin[w]
                    } else if label(d) == Some(Label::X) {
                        x
                    } else {
                        y
                    }
                })
                .collect()
        })
        .collect();
    // Runs of equal labels at the identified vertex, starting at a run boundary.
    let rot = emb.rotation(vxy);
    let k = rot.len();
    let s = (0..k).find(|&i| label(rot[i]) != label(rot[(i + k - 1) % k])).expect("six transitions");
    let mut runs: Vec<(Label, Vec<usize>)> = Vec::new();
    for i in 0..k {
        let d = rot[(s + i) % k];
        let l = label(d).expect("labelled");
        let w = hat.origin[emb.head(d)];
        match runs.last_mut() {
            Some((m, r)) if *m == l => r.push(w),
            _ => runs.push((l, vec![w])),
        }
    }
    let xr: Vec<Vec<usize>> = runs.iter().filter(|r| r.0 == Label::X).map(|r| r.1.clone()).collect();
    let yr: Vec<Vec<usize>> = runs.iter().filter(|r| r.0 == Label::Y).map(|r| r.1.clone()).collect();
    let orders = [[0usize, 1, 2], [0, 2, 1]];
    base.resize(n + 2, Vec::new());
    for ox in orders {
        for oy in orders {
            let rx: Vec<usize> = ox.iter().flat_map(|&i| xr[i].clone()).collect();
            let ry: Vec<usize> = oy.iter().flat_map(|&i| yr[i].clone()).collect();
            let slots_x = if h.xy_edge { rx.len() } else { 1 };
            let slots_y = if h.xy_edge { ry.len() } else { 1 };
            for sx in 0..slots_x {
                for sy in 0..slots_y {
                    let mut rots = base.clone();
                    rots[x] = rx.clone();
                    rots[y] = ry.clone();
                    if h.xy_edge {
                        rots[x].insert(sx, y);
                        rots[y].insert(sy, x);
                    }
                    let e = from_neighbor_rotations(t.graph(), &rots)?;
                    if e.euler_genus() == 2 {
                        return Ok(e);
                    }
                }
            }
        }
    }
    Err(Error::Precondition("no toroidal completion found".into()))
}
