//! Lowering the Euler genus by one through a face on which two vertices
//! alternate, cutting along the resulting one-sided curve, and the reverse
//! construction.

use serde::Serialize;

use super::{edge_of, twin, AlternatingWitness, FaceWalk, RotationEmbedding};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// A curve through exactly two vertices `x` and `y` and the faces `w1`, `w2`.
/// `x_side` and `y_side` are the darts on one side of the curve at each
/// vertex, in rotation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Width2Curve {
    pub x: usize,
    pub y: usize,
    pub w1: usize,
    pub w2: usize,
    pub x_side: Vec<usize>,
    pub y_side: Vec<usize>,
}

/// The graph cut along a curve, with its embedding. The copies of `x` and
/// `y` carrying the curve sides are the new vertices `x2 = n` and
/// `y2 = n + 1`; `positions` index `face` at `x1, y1, x2, y2` in some
/// interlaced order.
#[derive(Clone, Debug, Serialize)]
pub struct CutEmbedding {
    pub embedding: RotationEmbedding,
    pub x1: usize,
    pub y1: usize,
    pub x2: usize,
    pub y2: usize,
    pub face: usize,
    pub positions: [usize; 4],
}

/// Corner of visit `i` on a face of an all-positive embedding: the dart
/// the walk arrives on (as seen from the vertex) and the dart it leaves by.
fn corner(f: &FaceWalk, i: usize) -> (usize, usize) {
    let k = f.darts.len();
    (twin(f.darts[(i + k - 1) % k]), f.darts[i])
}

/// Darts of the rotation at `v` strictly after `from` up to and including
/// `to`, in rotation order.
fn arc(emb: &RotationEmbedding, from: usize, to: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = emb.next(from);
    loop {
        out.push(d);
        if d == to {
            return out;
        }
        d = emb.next(d);
    }
}

/// Reverses `side` in place inside the rotation and negates its edges.
fn twist(next: &mut [usize], sign: &mut [i8], side: &[usize]) {
    let k = side.len();
    if k == 0 {
        return;
    }
    let before = (0..next.len()).find(|&d| next[d] == side[0]).expect("rotation predecessor");
    let after = next[side[k - 1]];
    let rev: Vec<usize> = side.iter().rev().copied().collect();
    if before == side[k - 1] {
        // The side is the whole rotation.
        for i in 0..k {
            next[rev[i]] = rev[(i + 1) % k];
        }
    } else {
        next[before] = rev[0];
        for i in 0..k - 1 {
            next[rev[i]] = rev[i + 1];
        }
        next[rev[k - 1]] = after;
    }
    for &d in side {
        sign[edge_of(d)] = -sign[edge_of(d)];
    }
}

/// Canonical form of a face as a cyclic sequence of edges, up to rotation
/// and reversal, so faces can be compared across signature changes.
pub(crate) fn face_key(f: &FaceWalk) -> Vec<usize> {
    if f.darts.is_empty() {
        return vec![usize::MAX, f.vertices[0]];
    }
    let es: Vec<usize> = f.darts.iter().map(|&d| edge_of(d)).collect();
    let k = es.len();
    let mut best: Option<Vec<usize>> = None;
    for rev in [false, true] {
        let seq: Vec<usize> = if rev { es.iter().rev().copied().collect() } else { es.clone() };
        for s in 0..k {
            let r: Vec<usize> = (0..k).map(|i| seq[(s + i) % k]).collect();
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        }
    }
    best.expect("nonempty")
}

/// Given an orientable embedding and a face on which `x` and `y`
/// alternate, returns an embedding of Euler genus one less in which that
/// face splits into two faces through `x` and `y`, all other faces kept,
/// together with the one-sided curve through both new faces.
pub fn surgery_reduce(emb: &RotationEmbedding, w: &AlternatingWitness) -> Result<(RotationEmbedding, Width2Curve)> {
    let base = emb.to_positive()?;
    let faces = base.trace_faces();
    let orig_faces = emb.trace_faces();
    let f = orig_faces.get(w.face).ok_or_else(|| Error::StaleWitness("face index out of range".into()))?;
    let p = w.positions;
    let walk = faces
        .iter()
        .find(|g| face_key(g) == face_key(f))
        .ok_or_else(|| Error::StaleWitness("face not found".into()))?;
    if !p.windows(2).all(|q| q[0] < q[1]) || p[3] >= f.len() {
        return Err(Error::StaleWitness("positions out of order".into()));
    }
    let (a, b) = (f.vertices[p[0]], f.vertices[p[1]]);
    if a == b || f.vertices[p[2]] != a || f.vertices[p[3]] != b {
        return Err(Error::StaleWitness("terminals do not alternate at the given positions".into()));
    }
    // Re-locate the four visits on the positive walk, keeping their order.
    let pos = relocate(walk, f, p)?;
    let (x, y) = (a, b);
    // The side at each vertex runs from one of its corners on the face to the other.
    let x_side = arc(&base, corner(walk, pos[0]).0, corner(walk, pos[2]).0);
    let y_side = arc(&base, corner(walk, pos[1]).0, corner(walk, pos[3]).0);
    let mut next: Vec<usize> = (0..2 * base.edge_count()).map(|d| base.next(d)).collect();
    let mut sign = base.signs().to_vec();
    twist(&mut next, &mut sign, &x_side);
    twist(&mut next, &mut sign, &y_side);
    let out = RotationEmbedding::from_parts(base.host().clone(), next, sign);
    let before: Vec<Vec<usize>> = faces.iter().map(face_key).collect();
    let after = out.trace_faces();
    let mut rest: Vec<Vec<usize>> = before.clone();
    let wkey = face_key(walk);
    rest.retain(|k| *k != wkey);
    let mut new_faces = Vec::new();
    let mut unmatched = rest.clone();
    for (i, g) in after.iter().enumerate() {
        let k = face_key(g);
        if let Some(j) = unmatched.iter().position(|u| *u == k) {
            unmatched.swap_remove(j);
        } else {
            new_faces.push(i);
        }
    }
    if out.euler_genus() + 1 != base.euler_genus() || !unmatched.is_empty() || new_faces.len() != 2 {
        return Err(Error::Precondition("surgery did not split the face".into()));
    }
    let (w1, w2) = (new_faces[0], new_faces[1]);
    for &i in &new_faces {
        if !after[i].contains_vertex(x) || !after[i].contains_vertex(y) {
            return Err(Error::Precondition("split face misses a terminal".into()));
        }
    }
    let curve = Width2Curve { x, y, w1, w2, x_side: twisted_order(&out, &x_side), y_side: twisted_order(&out, &y_side) };
    Ok((out, curve))
}

/// The darts of `side` in the rotation order of `emb`.
fn twisted_order(emb: &RotationEmbedding, side: &[usize]) -> Vec<usize> {
    let v = emb.origin(side[0]);
    emb.rotation(v).into_iter().filter(|d| side.contains(d)).collect()
}

/// Maps positions on `f` to positions on the same face traced as `walk`.
fn relocate(walk: &FaceWalk, f: &FaceWalk, p: [usize; 4]) -> Result<[usize; 4]> {
    if walk.darts == f.darts {
        return Ok(p);
    }
    let k = walk.len();
    let edges = |g: &FaceWalk, i: usize| edge_of(g.darts[i]);
    for s in 0..k {
        for rev in [false, true] {
            let idx = |i: usize| if rev { (s + k - i) % k } else { (s + i) % k };
            // Reversed traversal visits vertex i after edge i - 1.
            let ok = (0..k).all(|i| {
                if rev {
                    edges(walk, idx(i)) == edges(f, (i + k - 1) % k) && walk.vertices[idx(i)] == f.vertices[i]
                } else {
                    edges(walk, idx(i)) == edges(f, i) && walk.vertices[idx(i)] == f.vertices[i]
                }
            });
            if ok {
                let mut q = p.map(idx);
                let v: Vec<usize> = q.iter().map(|&i| walk.vertices[i]).collect();
                q.sort_unstable();
                let w: Vec<usize> = q.iter().map(|&i| walk.vertices[i]).collect();
                debug_assert!(w[0] != w[1] && w[0] == w[2] && w[1] == w[3], "{v:?}");
                return Ok(q);
            }
        }
    }
    Err(Error::StaleWitness("face could not be matched".into()))
}

/// Cuts `x` and `y` along the curve: the darts of each side move to a new
/// copy of the vertex. The result must be orientable.
pub fn cut_along(emb: &RotationEmbedding, c: &Width2Curve) -> Result<CutEmbedding> {
    let n = emb.n();
    let (x2, y2) = (n, n + 1);
    let moved = |d: usize| {
        if c.x_side.contains(&d) {
            Some(x2)
        } else if c.y_side.contains(&d) {
            Some(y2)
        } else {
            None
        }
    };
    let edges: Vec<(usize, usize)> = emb
        .host()
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| (moved(2 * e).unwrap_or(a), moved(2 * e + 1).unwrap_or(b)))
        .collect();
    let host = MultiGraph { n: n + 2, edges };
    let mut rots: Vec<Vec<usize>> = (0..n)
        .map(|v| emb.rotation(v).into_iter().filter(|&d| moved(d).is_none()).collect())
        .collect();
    rots.push(c.x_side.clone());
    rots.push(c.y_side.clone());
    let cut = RotationEmbedding::from_rotations(host, &rots, emb.signs().to_vec())?;
    let cut = cut.to_positive().map_err(|_| Error::Precondition("curve is not orientizing".into()))?;
    let quad = [c.x, c.y, x2, y2];
    for (i, f) in cut.trace_faces().iter().enumerate() {
        if let Some(positions) = interlaced(f, quad) {
            return Ok(CutEmbedding { embedding: cut, x1: c.x, y1: c.y, x2, y2, face: i, positions });
        }
    }
    Err(Error::Precondition("cut vertices are not interlaced on a face".into()))
}

/// Positions of `quad[0..4]` on `f` in cyclic order `x1, y1, x2, y2` or
/// `x1, y2, x2, y1`, listed in walk order.
fn interlaced(f: &FaceWalk, q: [usize; 4]) -> Option<[usize; 4]> {
    let at = |v: usize| f.vertices.iter().position(|&u| u == v);
    let mut p = [at(q[0])?, at(q[1])?, at(q[2])?, at(q[3])?];
    if !f.has_cyclic_order(&q) {
        return None;
    }
    p.sort_unstable();
    Some(p)
}

/// Reverse construction: joins `x1x2` and `y1y2` through the common face
/// (adding a handle) and contracts both edges, giving an embedding of the
/// uncut graph on which `x` and `y` alternate. Vertex ids `n`, `n + 1` of
/// the cut graph disappear.
pub fn reglue_cut(cut: &CutEmbedding) -> Result<RotationEmbedding> {
    let mut emb = cut.embedding.to_positive()?;
    let f = emb.trace_faces()[cut.face].clone();
    let corner_at = |v: usize| -> Result<Option<usize>> {
        match f.vertices.iter().position(|&u| u == v) {
            Some(i) if !f.darts.is_empty() => Ok(Some(corner(&f, i).0)),
            Some(_) => Ok(None),
            None => Err(Error::StaleWitness(format!("vertex {v} not on the face"))),
        }
    };
    let (cx1, cx2, cy1, cy2) = (corner_at(cut.x1)?, corner_at(cut.x2)?, corner_at(cut.y1)?, corner_at(cut.y2)?);
    let ex = emb.insert_edge(cut.x1, cx1, cut.x2, cx2)?;
    let ey = emb.insert_edge(cut.y1, cy1, cut.y2, cy2)?;
    // Contract the higher-numbered copy first so the other id stays valid.
    let (first, second) = if cut.y2 > cut.x2 { (ey, ex) } else { (ex, ey) };
    let emb = emb.contract_edge(first)?;
    let second = if second > first { second - 1 } else { second };
    emb.contract_edge(second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{find_alternating_embedding, Budget};
    use crate::graph::SimpleGraph;
    use crate::planarity::planar;

    fn run(g: &SimpleGraph, x: usize, y: usize) {
        let m = g.to_multigraph();
        let w = find_alternating_embedding(&m, x, y, 1, &mut Budget::unlimited()).unwrap().unwrap();
        let (low, curve) = surgery_reduce(&w.embedding, &w).unwrap();
        assert_eq!(low.euler_genus(), 1);
        assert!(!low.is_orientable());
        assert_eq!(low.face_count(), w.embedding.face_count() + 1);
        let cut = cut_along(&low, &curve).unwrap();
        assert_eq!(cut.embedding.genus().unwrap(), 0);
        let mut cg = SimpleGraph::new(cut.embedding.n()).unwrap();
        for &(a, b) in &cut.embedding.host().edges {
            cg.add_edge(a, b).unwrap();
        }
        assert!(planar(&cg));
        let back = reglue_cut(&cut).unwrap();
        assert_eq!(back.genus().unwrap(), 1);
        assert!(back.trace_faces().iter().any(|f| f.alternation(x, y).is_some()));
        let mut edges: Vec<(usize, usize)> = back.host().edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        assert_eq!(edges, g.edges());
    }

    #[test]
    fn kuratowski_pipelines() {
        for (x, y) in [(0, 1), (2, 4)] {
            run(&SimpleGraph::complete(5), x, y);
        }
        for (x, y) in [(0, 1), (0, 3)] {
            run(&SimpleGraph::complete_bipartite(3, 3), x, y);
        }
    }
}
