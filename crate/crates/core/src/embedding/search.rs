//! Exhaustive search over orientable embeddings by edge insertion.
//!
//! Edges are inserted one at a time into a growing embedding. An edge to a
//! new vertex never changes the genus; an edge between two placed vertices
//! either splits a face (both corners on one face) or merges two faces and
//! raises the genus by one. The genus of the final embedding is therefore the
//! number of merges, which gives a simple bound for pruning.

use std::ops::ControlFlow;

use super::{assemble, edge_of, RotationEmbedding};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Counter of search-node expansions shared across calls.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit: Some(limit), used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Error::BudgetExceeded(l)),
            _ => Ok(()),
        }
    }
}

struct Step {
    host_edge: usize,
    u: usize,
    v: usize,
    /// Endpoint that is new when this edge is inserted, if any.
    fresh: Option<usize>,
}

fn plan(g: &MultiGraph) -> Result<(Vec<Step>, usize)> {
    let n = g.n;
    let mut deg = vec![0usize; n];
    for &(a, b) in &g.edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let active: Vec<usize> = (0..n).filter(|&v| deg[v] > 0).collect();
    let Some(&root) = active.iter().max_by_key(|&&v| (deg[v], std::cmp::Reverse(v))) else {
        return Ok((Vec::new(), 0));
    };
    let mut placed = vec![false; n];
    placed[root] = true;
    let mut order = vec![root];
    while order.len() < active.len() {
        let mut score = vec![0usize; n];
        for &(a, b) in &g.edges {
            if placed[a] && !placed[b] {
                score[b] += 1;
            } else if placed[b] && !placed[a] {
                score[a] += 1;
            }
        }
        let best = (0..n).filter(|&v| !placed[v] && score[v] > 0).max_by_key(|&v| (score[v], std::cmp::Reverse(v)));
        let Some(v) = best else {
            return Err(Error::Precondition("embedding search needs a connected graph".into()));
        };
        placed[v] = true;
        order.push(v);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut steps = Vec::with_capacity(g.edge_count());
    for (i, &v) in order.iter().enumerate().skip(1) {
        let mut first = true;
        for (e, &(a, b)) in g.edges.iter().enumerate() {
            let other = if a == v { b } else if b == v { a } else { continue };
            if pos[other] < i {
                steps.push(Step { host_edge: e, u: a, v: b, fresh: first.then_some(v) });
                first = false;
            }
        }
    }
    Ok((steps, root))
}

struct Searcher<'a, F> {
    host: &'a MultiGraph,
    steps: Vec<Step>,
    root: usize,
    max_merges: usize,
    budget: &'a mut Budget,
    visit: F,
}

fn face_ids(emb: &RotationEmbedding) -> (Vec<usize>, Vec<u32>) {
    let faces = emb.trace_faces();
    let mut of = vec![0; 2 * emb.edge_count()];
    let mut masks = Vec::with_capacity(faces.len());
    for (i, f) in faces.iter().enumerate() {
        let mut m = 0u32;
        for (&d, &v) in f.darts.iter().zip(&f.vertices) {
            of[d] = i;
            m |= 1 << v;
        }
        masks.push(m);
    }
    (of, masks)
}

impl<F> Searcher<'_, F>
where
    F: FnMut(&RotationEmbedding, usize) -> ControlFlow<()>,
{
    fn corners(&self, emb: &RotationEmbedding, w: usize, depth: usize) -> Vec<Option<usize>> {
        let rot = emb.rotation(w);
        if rot.is_empty() {
            return vec![None];
        }
        if w == self.root && rot.len() == 2 {
            // Mirror images differ in the cyclic order of the first three
            // darts at the root; keep one of them.
            let first = (0..depth).map(|i| 2 * i + (self.steps[i].v == w) as usize).find(|&d| emb.origin(d) == w);
            return vec![first];
        }
        rot.into_iter().map(Some).collect()
    }

    fn run(&mut self, emb: &mut RotationEmbedding, depth: usize, merges: usize, placed: u32) -> Result<ControlFlow<()>> {
        self.budget.tick()?;
        if depth == self.steps.len() {
            let out = self.finish(emb);
            return Ok((self.visit)(&out, merges));
        }
        let (u, v, fresh) = (self.steps[depth].u, self.steps[depth].v, self.steps[depth].fresh);
        let (of, _) = if fresh.is_none() { face_ids(emb) } else { (Vec::new(), Vec::new()) };
        let cu = if fresh == Some(u) { vec![None] } else { self.corners(emb, u, depth) };
        let cv = if fresh == Some(v) { vec![None] } else { self.corners(emb, v, depth) };
        let placed = placed | 1 << u | 1 << v;
        for &a in &cu {
            for &b in &cv {
                let merges = match (fresh, a, b) {
                    (None, Some(a), Some(b)) if of[emb.next(a)] != of[emb.next(b)] => merges + 1,
                    _ => merges,
                };
                if merges > self.max_merges {
                    continue;
                }
                let mut child = emb.clone();
                child.insert_edge(u, a, v, b)?;
                if merges == self.max_merges && !self.rest_cofacial(&child, depth + 1, placed) {
                    continue;
                }
                if let ControlFlow::Break(()) = self.run(&mut child, depth + 1, merges, placed)? {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Every later edge between already placed vertices must lie in a face.
    fn rest_cofacial(&self, emb: &RotationEmbedding, from: usize, placed: u32) -> bool {
        let pending: Vec<&Step> = self.steps[from..]
            .iter()
            .filter(|s| placed & (1 << s.u) != 0 && placed & (1 << s.v) != 0)
            .collect();
        if pending.is_empty() {
            return true;
        }
        let (_, masks) = face_ids(emb);
        pending.iter().all(|s| {
            let want = 1u32 << s.u | 1 << s.v;
            masks.iter().any(|&m| m & want == want)
        })
    }

    /// Renumbers edges back to host ids.
    fn finish(&self, emb: &RotationEmbedding) -> RotationEmbedding {
        let map = |d: usize| 2 * self.steps[edge_of(d)].host_edge + (d & 1);
        let rots: Vec<Vec<usize>> = emb.rotations().into_iter().map(|r| r.into_iter().map(map).collect()).collect();
        RotationEmbedding::orientable(self.host.clone(), &rots).expect("search builds valid rotations")
    }
}

/// Visits every orientable embedding of genus at most `k` of a graph whose
/// non-isolated vertices are connected, up to global mirror image. The
/// visitor receives the embedding and its genus. Returns `true` if the
/// visitor stopped the search.
pub fn enumerate_embeddings<F>(g: &MultiGraph, k: usize, budget: &mut Budget, visit: F) -> Result<bool>
where
    F: FnMut(&RotationEmbedding, usize) -> ControlFlow<()>,
{
    let (steps, root) = plan(g)?;
    let mut s = Searcher { host: g, steps, root, max_merges: k, budget, visit };
    let mut emb = RotationEmbedding::orientable(MultiGraph { n: g.n, edges: Vec::new() }, &vec![Vec::new(); g.n])?;
    let placed = if g.edges.is_empty() { 0 } else { 1 << root };
    Ok(s.run(&mut emb, 0, 0, placed)?.is_break())
}

/// Minimum genus and an embedding attaining it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct GenusResult {
    pub genus: usize,
    pub embedding: RotationEmbedding,
}

fn first_of_genus(g: &MultiGraph, k: usize, budget: &mut Budget) -> Result<Option<RotationEmbedding>> {
    let mut found = None;
    enumerate_embeddings(g, k, budget, |e, _| {
        found = Some(e.clone());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Minimum genus of a connected graph by iterative deepening, stopping
/// once the genus would exceed `cap`.
pub fn min_genus_connected(g: &MultiGraph, cap: usize, budget: &mut Budget) -> Result<Option<GenusResult>> {
    let bound = (g.edge_count() + 1).saturating_sub(g.n) / 2;
    for k in 0..=bound.min(cap) {
        if let Some(embedding) = first_of_genus(g, k, budget)? {
            return Ok(Some(GenusResult { genus: k, embedding }));
        }
    }
    Ok(None)
}

/// Minimum orientable genus of any graph. The genus is additive over
/// blocks, so each block is searched separately and the block embeddings
/// are glued at cut vertices.
pub fn min_genus(g: &MultiGraph, budget: &mut Budget) -> Result<GenusResult> {
    Ok(min_genus_capped(g, usize::MAX, budget)?.expect("uncapped search always succeeds"))
}

/// Like [`min_genus`] but gives up with `None` once the genus exceeds `cap`.
pub fn min_genus_capped(g: &MultiGraph, cap: usize, budget: &mut Budget) -> Result<Option<GenusResult>> {
    let mut pieces = Vec::new();
    let mut total = 0;
    for block in g.blocks() {
        let (sub, vmap) = g.edge_induced(&block);
        let Some(r) = min_genus_connected(&sub, cap - total, budget)? else { return Ok(None) };
        total += r.genus;
        pieces.push((r.embedding, block, vmap));
    }
    let embedding = assemble(g, &pieces)?;
    debug_assert_eq!(embedding.euler_genus(), 2 * total);
    Ok(Some(GenusResult { genus: total, embedding }))
}

pub fn has_embedding_of_genus_at_most(g: &MultiGraph, k: usize, budget: &mut Budget) -> Result<bool> {
    Ok(min_genus_capped(g, k, budget)?.is_some())
}

/// An embedding together with a face on which `x` and `y` alternate.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AlternatingWitness {
    pub embedding: RotationEmbedding,
    pub face: usize,
    /// Positions on the face walk holding `x, y, x, y` or `y, x, y, x`.
    pub positions: [usize; 4],
}

/// Searches the embeddings of genus exactly `k` of a connected graph for
/// one with a face on which `x` and `y` alternate.
pub fn find_alternating_embedding(
    g: &MultiGraph,
    x: usize,
    y: usize,
    k: usize,
    budget: &mut Budget,
) -> Result<Option<AlternatingWitness>> {
    let mut found = None;
    enumerate_embeddings(g, k, budget, |e, genus| {
        if genus != k {
            return ControlFlow::Continue(());
        }
        for (i, f) in e.trace_faces().iter().enumerate() {
            if let Some(positions) = f.alternation(x, y) {
                found = Some(AlternatingWitness { embedding: e.clone(), face: i, positions });
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}
