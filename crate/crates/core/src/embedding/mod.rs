//! Combinatorial embeddings: a rotation of darts at every vertex plus a
//! signature of ±1 on every edge.
//!
//! Edge `e = (u, v)` of the host multigraph owns darts `2e` (at `u`) and
//! `2e + 1` (at `v`); the twin of dart `d` is `d ^ 1`. Faces are traced with
//! the usual rule: arrive at a vertex along an edge, then leave along the
//! rotation successor of the arriving dart, or its predecessor once an odd
//! number of negative edges has been crossed.

mod extend;
mod io;
mod search;
mod surgery;

pub use extend::{extend_with_planar_patch, torus_from_3_alternating, triangle_extend};
pub use io::{parse_embedding, write_embedding};
pub use search::{
    enumerate_embeddings, find_alternating_embedding, has_embedding_of_genus_at_most, min_genus, min_genus_capped,
    min_genus_connected, AlternatingWitness, Budget, GenusResult,
};
pub use surgery::{cut_along, reglue_cut, surgery_reduce, CutEmbedding, Width2Curve};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, SimpleGraph};

#[inline]
pub fn twin(d: usize) -> usize {
    d ^ 1
}

#[inline]
pub fn edge_of(d: usize) -> usize {
    d >> 1
}

/// A face boundary walk. `darts[i]` is traversed from `vertices[i]`.
/// Isolated vertices form faces with no darts and a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FaceWalk {
    pub darts: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Increasing positions `i1 < i2 < i3 < i4` holding `a, b, a, b` with
    /// `{a, b} = {x, y}`, if the walk visits `x` and `y` alternately.
    /// Positions holding `x` come first when both patterns occur.
    pub fn alternation(&self, x: usize, y: usize) -> Option<[usize; 4]> {
        self.pattern(x, y).or_else(|| self.pattern(y, x))
    }

    fn pattern(&self, a: usize, b: usize) -> Option<[usize; 4]> {
        let want = [a, b, a, b];
        let mut out = [0; 4];
        let mut k = 0;
        for (i, &v) in self.vertices.iter().enumerate() {
            if v == want[k] {
                out[k] = i;
                k += 1;
                if k == 4 {
                    return Some(out);
                }
            }
        }
        None
    }

    /// True if `quad` occurs on this walk in the given cyclic order or its reverse.
    pub fn has_cyclic_order(&self, quad: &[usize]) -> bool {
        let pos: Vec<Vec<usize>> = quad
            .iter()
            .map(|q| self.vertices.iter().enumerate().filter(|(_, &v)| v == *q).map(|(i, _)| i).collect())
            .collect();
        if pos.iter().any(|p| p.is_empty()) {
            return false;
        }
        let len = self.vertices.len();
        // Choose an occurrence of quad[0] and walk forwards or backwards.
        for &start in &pos[0] {
            for dir in [1isize, -1] {
                let mut ok = true;
                let mut cur = 0usize;
                for p in pos.iter().skip(1) {
                    // Smallest positive offset from start reaching an occurrence beyond cur.
                    let best = p
                        .iter()
                        .map(|&i| {
                            let off = (i as isize - start as isize) * dir;
                            off.rem_euclid(len as isize) as usize
                        })
                        .filter(|&o| o > cur && o > 0)
                        .min();
                    match best {
                        Some(o) => cur = o,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    return true;
                }
            }
        }
        false
    }
}

/// Rotation system with edge signatures over a host multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationEmbedding {
    host: MultiGraph,
    next: Vec<usize>,
    prev: Vec<usize>,
    sign: Vec<i8>,
}

impl RotationEmbedding {
    /// Builds an embedding from per-vertex cyclic dart lists and per-edge signs.
    pub fn from_rotations(host: MultiGraph, rotations: &[Vec<usize>], sign: Vec<i8>) -> Result<Self> {
        let darts = 2 * host.edge_count();
        if rotations.len() != host.n {
            return Err(Error::MalformedEmbedding(format!(
                "{} rotations for {} vertices",
                rotations.len(),
                host.n
            )));
        }
        if sign.len() != host.edge_count() || sign.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::MalformedEmbedding("signature must be ±1 per edge".into()));
        }
        let mut next = vec![usize::MAX; darts];
        let mut prev = vec![usize::MAX; darts];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(Error::MalformedEmbedding(format!("dart {d} out of range")));
                }
                if origin(&host, d) != v {
                    return Err(Error::MalformedEmbedding(format!("dart {d} does not start at {v}")));
                }
                if next[d] != usize::MAX {
                    return Err(Error::MalformedEmbedding(format!("dart {d} repeated")));
                }
                let n = rot[(i + 1) % rot.len()];
                next[d] = n;
            }
        }
        if next.contains(&usize::MAX) {
            return Err(Error::MalformedEmbedding("some dart is missing from the rotations".into()));
        }
        for d in 0..darts {
            prev[next[d]] = d;
        }
        Ok(RotationEmbedding { host, next, prev, sign })
    }

    /// Orientable embedding from rotations.
    pub fn orientable(host: MultiGraph, rotations: &[Vec<usize>]) -> Result<Self> {
        let m = host.edge_count();
        RotationEmbedding::from_rotations(host, rotations, vec![1; m])
    }

    pub(crate) fn from_parts(host: MultiGraph, next: Vec<usize>, sign: Vec<i8>) -> Self {
        let mut prev = vec![0; next.len()];
        for (d, &n) in next.iter().enumerate() {
            prev[n] = d;
        }
        RotationEmbedding { host, next, prev, sign }
    }

    pub fn host(&self) -> &MultiGraph {
        &self.host
    }

    pub fn n(&self) -> usize {
        self.host.n
    }

    pub fn edge_count(&self) -> usize {
        self.host.edge_count()
    }

    pub fn sign(&self, e: usize) -> i8 {
        self.sign[e]
    }

    pub fn signs(&self) -> &[i8] {
        &self.sign
    }

    #[inline]
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }

    #[inline]
    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }

    #[inline]
    pub fn origin(&self, d: usize) -> usize {
        origin(&self.host, d)
    }

    #[inline]
    pub fn head(&self, d: usize) -> usize {
        origin(&self.host, twin(d))
    }

    /// Darts at `v` in rotation order, starting from the smallest.
    pub fn rotation(&self, v: usize) -> Vec<usize> {
        let Some(first) = self.first_dart(v) else { return Vec::new() };
        let mut out = vec![first];
        let mut d = self.next[first];
        while d != first {
            out.push(d);
            d = self.next[d];
        }
        out
    }

    fn first_dart(&self, v: usize) -> Option<usize> {
        self.host
            .edges
            .iter()
            .enumerate()
            .find_map(|(e, &(a, b))| if a == v { Some(2 * e) } else if b == v { Some(2 * e + 1) } else { None })
    }

    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.rotation(v)).collect()
    }

    /// Rotations of `v` expressed as neighbour vertices.
    pub fn neighbor_rotation(&self, v: usize) -> Vec<usize> {
        self.rotation(v).into_iter().map(|d| self.head(d)).collect()
    }

    /// Checks that every vertex's darts form a single rotation cycle.
    pub fn validate(&self) -> Result<()> {
        let darts = 2 * self.edge_count();
        let mut seen = vec![false; darts];
        for v in 0..self.n() {
            for d in self.rotation(v) {
                if seen[d] {
                    return Err(Error::MalformedEmbedding(format!("dart {d} in two rotations")));
                }
                seen[d] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::MalformedEmbedding("rotation at a vertex splits into several cycles".into()));
        }
        Ok(())
    }

    fn step(&self, d: usize, s: i8) -> (usize, i8) {
        let s2 = s * self.sign[edge_of(d)];
        let t = twin(d);
        (if s2 > 0 { self.next[t] } else { self.prev[t] }, s2)
    }

    /// All faces, deterministic order: by smallest starting dart, then
    /// isolated vertices.
    pub fn trace_faces(&self) -> Vec<FaceWalk> {
        let darts = 2 * self.edge_count();
        let mut seen = vec![false; 2 * darts];
        let flag = |d: usize, s: i8| 2 * d + (s < 0) as usize;
        let mut faces = Vec::new();
        // Positive starting states first, so that an embedding with all
        // signatures positive gets its faces as orbits of `next ∘ twin`.
        for s0 in [1i8, -1] {
            for d0 in 0..darts {
                if seen[flag(d0, s0)] {
                    continue;
                }
                let mut walk = FaceWalk { darts: Vec::new(), vertices: Vec::new() };
                let (mut d, mut s) = (d0, s0);
                loop {
                    seen[flag(d, s)] = true;
                    let rs = -s * self.sign[edge_of(d)];
                    seen[flag(twin(d), rs)] = true;
                    walk.darts.push(d);
                    walk.vertices.push(self.origin(d));
                    (d, s) = self.step(d, s);
                    if (d, s) == (d0, s0) {
                        break;
                    }
                }
                faces.push(walk);
            }
        }
        let mut deg = vec![0usize; self.n()];
        for &(a, b) in &self.host.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        for (v, &dv) in deg.iter().enumerate() {
            if dv == 0 {
                faces.push(FaceWalk { darts: Vec::new(), vertices: vec![v] });
            }
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.trace_faces().len()
    }

    pub fn component_count(&self) -> usize {
        self.host.components().len()
    }

    /// Euler genus `2c - |V| + |E| - |F|`.
    pub fn euler_genus(&self) -> usize {
        let chi = self.n() as isize - self.edge_count() as isize + self.face_count() as isize;
        let g = 2 * self.component_count() as isize - chi;
        debug_assert!(g >= 0);
        g as usize
    }

    /// Flips the local orientation at `v`: reverses its rotation and negates
    /// the signs of its edges. Yields an equivalent embedding.
    pub fn switch_vertex(&mut self, v: usize) {
        let rot = self.rotation(v);
        for &d in &rot {
            std::mem::swap(&mut self.next[d], &mut self.prev[d]);
        }
        for (e, &(a, b)) in self.host.edges.iter().enumerate() {
            if a == v || b == v {
                self.sign[e] = -self.sign[e];
            }
        }
    }

    /// Equivalent embedding where every spanning-forest edge is positive.
    pub fn normalized(&self) -> RotationEmbedding {
        let mut emb = self.clone();
        let n = self.n();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (e, &(a, b)) in self.host.edges.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        let mut seen = vec![false; n];
        for r in 0..n {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let mut stack = vec![r];
            while let Some(u) = stack.pop() {
                for &(w, e) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        if emb.sign[e] < 0 {
                            emb.switch_vertex(w);
                        }
                        stack.push(w);
                    }
                }
            }
        }
        emb
    }

    pub fn is_orientable(&self) -> bool {
        self.normalized().sign.iter().all(|&s| s > 0)
    }

    /// Orientable genus; errors on non-orientable embeddings.
    pub fn genus(&self) -> Result<usize> {
        if !self.is_orientable() {
            return Err(Error::NonOrientable);
        }
        Ok(self.euler_genus() / 2)
    }

    /// The same embedding with all signatures positive, if orientable.
    pub fn to_positive(&self) -> Result<RotationEmbedding> {
        let e = self.normalized();
        if e.sign.iter().all(|&s| s > 0) {
            Ok(e)
        } else {
            Err(Error::NonOrientable)
        }
    }

    /// Inserts edge `u`–`v` into an orientable embedding. The new dart at `u`
    /// goes right after `after_u` (or forms the whole rotation if `u` has no
    /// darts); likewise at `v`. Returns the new edge id.
    pub fn insert_edge(&mut self, u: usize, after_u: Option<usize>, v: usize, after_v: Option<usize>) -> Result<usize> {
        if u == v {
            return Err(Error::Loop(u));
        }
        for (w, a) in [(u, after_u), (v, after_v)] {
            match a {
                Some(a) if self.origin(a) != w => {
                    return Err(Error::MalformedEmbedding(format!("dart {a} is not at vertex {w}")))
                }
                None if self.host.degree(w) > 0 => {
                    return Err(Error::MalformedEmbedding(format!("vertex {w} needs a corner")))
                }
                _ => {}
            }
        }
        let e = self.host.edges.len();
        self.host.edges.push((u, v));
        self.sign.push(1);
        let (du, dv) = (2 * e, 2 * e + 1);
        self.next.extend([du, dv]);
        self.prev.extend([du, dv]);
        for (d, a) in [(du, after_u), (dv, after_v)] {
            if let Some(a) = a {
                let b = self.next[a];
                self.next[a] = d;
                self.prev[d] = a;
                self.next[d] = b;
                self.prev[b] = d;
            }
        }
        Ok(e)
    }

    /// Removes edge `e`; edges above `e` are renumbered down by one.
    pub fn remove_edge(&self, e: usize) -> RotationEmbedding {
        let rots: Vec<Vec<usize>> = (0..self.n())
            .map(|v| {
                self.rotation(v)
                    .into_iter()
                    .filter(|&d| edge_of(d) != e)
                    .map(|d| if edge_of(d) > e { d - 2 } else { d })
                    .collect()
            })
            .collect();
        let mut host = self.host.clone();
        host.edges.remove(e);
        let mut sign = self.sign.clone();
        sign.remove(e);
        RotationEmbedding::from_rotations(host, &rots, sign).expect("edge removal keeps rotations valid")
    }

    /// Contracts the positive edge `e = (a, b)`: the rotation of `a` after
    /// the dart of `e` is followed by the rotation of `b` after its dart.
    /// Vertex `b` disappears and higher vertex ids shift down.
    pub fn contract_edge(&self, e: usize) -> Result<RotationEmbedding> {
        if self.sign[e] < 0 {
            return Err(Error::Precondition("contracted edge must have positive signature".into()));
        }
        let (a, b) = self.host.edges[e];
        let (da, db) = (2 * e, 2 * e + 1);
        let mut merged = Vec::new();
        let mut d = self.next[da];
        while d != da {
            merged.push(d);
            d = self.next[d];
        }
        let mut d = self.next[db];
        while d != db {
            merged.push(d);
            d = self.next[d];
        }
        let shift_v = |v: usize| if v == b { a } else { v };
        let renum = |v: usize| if v > b { v - 1 } else { v };
        let edges: Vec<(usize, usize)> = self
            .host
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(p, q))| (renum(shift_v(p)), renum(shift_v(q))))
            .collect();
        if edges.iter().any(|&(p, q)| p == q) {
            return Err(Error::Precondition("contraction would create a loop".into()));
        }
        let host = MultiGraph { n: self.n() - 1, edges };
        let fix = |d: usize| if edge_of(d) > e { d - 2 } else { d };
        let mut rots = Vec::with_capacity(self.n() - 1);
        for v in 0..self.n() {
            if v == b {
                continue;
            }
            if v == a {
                rots.push(merged.iter().map(|&d| fix(d)).collect());
            } else {
                rots.push(self.rotation(v).into_iter().map(fix).collect());
            }
        }
        let mut sign = self.sign.clone();
        sign.remove(e);
        RotationEmbedding::from_rotations(host, &rots, sign)
    }

    /// Disjoint union; the other embedding's vertices and edges are shifted.
    pub fn disjoint_union(&self, other: &RotationEmbedding) -> RotationEmbedding {
        let off_v = self.n();
        let off_d = 2 * self.edge_count();
        let mut host = self.host.clone();
        host.n += other.n();
        host.edges.extend(other.host.edges.iter().map(|&(a, b)| (a + off_v, b + off_v)));
        let mut next = self.next.clone();
        next.extend(other.next.iter().map(|&d| d + off_d));
        let mut sign = self.sign.clone();
        sign.extend_from_slice(&other.sign);
        RotationEmbedding::from_parts(host, next, sign)
    }
}

/// Orientable embedding of a simple graph from neighbour rotations; the
/// host is `g.to_multigraph()`.
pub fn from_neighbor_rotations(g: &SimpleGraph, rots: &[Vec<usize>]) -> Result<RotationEmbedding> {
    let host = g.to_multigraph();
    let dart = |v: usize, w: usize| -> Result<usize> {
        let key = (v.min(w), v.max(w));
        let e = host.edges.binary_search(&key).map_err(|_| Error::MissingEdge(v, w))?;
        Ok(2 * e + (v > w) as usize)
    };
    let darts: Vec<Vec<usize>> = rots
        .iter()
        .enumerate()
        .map(|(v, r)| r.iter().map(|&w| dart(v, w)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    RotationEmbedding::orientable(host, &darts)
}

impl serde::Serialize for RotationEmbedding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RotationEmbedding", 4)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &self.host.edges)?;
        st.serialize_field("signs", &self.sign)?;
        st.serialize_field("rotations", &self.rotations())?;
        st.end()
    }
}

#[inline]
pub(crate) fn origin(host: &MultiGraph, d: usize) -> usize {
    let (a, b) = host.edges[edge_of(d)];
    if d & 1 == 0 {
        a
    } else {
        b
    }
}

/// Embedding of `host` assembled from embeddings of edge-disjoint pieces
/// that share only cut vertices. `pieces[i].1[e]` is the host edge id of
/// edge `e` of piece `i`, and `pieces[i].2[v]` the host vertex of vertex
/// `v`. At shared vertices the piece rotations are concatenated, which
/// keeps the Euler genus additive for orientable pieces.
pub fn assemble(host: &MultiGraph, pieces: &[(RotationEmbedding, Vec<usize>, Vec<usize>)]) -> Result<RotationEmbedding> {
    let mut rots: Vec<Vec<usize>> = vec![Vec::new(); host.n];
    let mut sign = vec![1i8; host.edge_count()];
    for (emb, emap, vmap) in pieces {
        for v in 0..emb.n() {
            let hv = vmap[v];
            for d in emb.rotation(v) {
                let he = emap[edge_of(d)];
                let (a, b) = host.edges[he];
                let (pa, _) = emb.host.edges[edge_of(d)];
                // Map the dart to the host end at the same vertex.
                let hd = if a == b {
                    return Err(Error::Loop(a));
                } else if (vmap[pa] == a) == (d & 1 == 0) {
                    2 * he
                } else {
                    2 * he + 1
                };
                debug_assert_eq!(origin(host, hd), hv);
                rots[hv].push(hd);
            }
        }
        for e in 0..emb.edge_count() {
            sign[emap[e]] = emb.sign[e];
        }
    }
    RotationEmbedding::from_rotations(host.clone(), &rots, sign)
}
