//! Path-addition planarity test (Demoucron, Malgrange and Pertuiset) on a
//! 2-connected graph given by adjacency masks.

use crate::graph::bits;

struct Face {
    cycle: Vec<usize>,
    mask: u32,
}

impl Face {
    fn new(cycle: Vec<usize>) -> Face {
        let mask = cycle.iter().fold(0u32, |m, &v| m | 1 << v);
        Face { cycle, mask }
    }
}

struct Bridge {
    attachments: u32,
    /// A path between two distinct attachments, endpoints included.
    path: Vec<usize>,
}

fn find_cycle(adj: &[u32], s: usize) -> Vec<usize> {
    // Edge s-t plus a shortest t..s path avoiding that edge.
    let t = adj[s].trailing_zeros() as usize;
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    parent[t] = t;
    let mut queue = std::collections::VecDeque::from([t]);
    while let Some(u) = queue.pop_front() {
        for w in bits(adj[u]) {
            if (u == t && w == s) || parent[w] != usize::MAX {
                continue;
            }
            parent[w] = u;
            if w == s {
                let mut cyc = vec![s];
                let mut c = u;
                while c != t {
                    cyc.push(c);
                    c = parent[c];
                }
                cyc.push(t);
                return cyc;
            }
            queue.push_back(w);
        }
    }
    Vec::new()
}

fn bridges(adj: &[u32], hv: u32, hadj: &[u32]) -> Vec<Bridge> {
    let mut out = Vec::new();
    for u in bits(hv) {
        for w in bits(adj[u] & hv & !hadj[u]) {
            if u < w {
                out.push(Bridge { attachments: 1 << u | 1 << w, path: vec![u, w] });
            }
        }
    }
    let all: u32 = adj.iter().enumerate().filter(|(_, &m)| m != 0).fold(0, |m, (v, _)| m | 1 << v);
    let mut rest = all & !hv;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        let mut comp = 1u32 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut nf = 0;
            for v in bits(frontier) {
                nf |= adj[v] & !hv & !comp;
            }
            comp |= nf;
            frontier = nf;
        }
        rest &= !comp;
        let mut att = 0u32;
        for v in bits(comp) {
            att |= adj[v] & hv;
        }
        let path = bridge_path(adj, comp, att);
        out.push(Bridge { attachments: att, path });
    }
    out
}

/// Path from one attachment through the component to a different one.
fn bridge_path(adj: &[u32], comp: u32, att: u32) -> Vec<usize> {
    let a = att.trailing_zeros() as usize;
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for c in bits(adj[a] & comp) {
        parent[c] = a;
        queue.push_back(c);
    }
    while let Some(c) = queue.pop_front() {
        let other = adj[c] & att & !(1 << a);
        if other != 0 {
            let b = other.trailing_zeros() as usize;
            let mut path = vec![b, c];
            let mut p = parent[c];
            while p != a {
                path.push(p);
                p = parent[p];
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for w in bits(adj[c] & comp) {
            if parent[w] == usize::MAX {
                parent[w] = c;
                queue.push_back(w);
            }
        }
    }
    unreachable!("a bridge of a 2-connected graph has two attachments")
}

/// Faces of a planar embedding as consistently oriented vertex cycles, or
/// `None` if the graph is not planar. The graph must be 2-connected with at
/// least three vertices (isolated entries of `adj` are ignored).
pub(crate) fn planar_faces(adj: &[u32]) -> Option<Vec<Vec<usize>>> {
    let start = adj.iter().position(|&m| m != 0)?;
    let cyc = find_cycle(adj, start);
    debug_assert!(cyc.len() >= 3);
    let mut hadj = vec![0u32; adj.len()];
    let mut hv = 0u32;
    for i in 0..cyc.len() {
        let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
        hadj[a] |= 1 << b;
        hadj[b] |= 1 << a;
        hv |= 1 << a;
    }
    let mut rev = cyc.clone();
    rev.reverse();
    let mut faces = vec![Face::new(cyc), Face::new(rev)];
    loop {
        let bs = bridges(adj, hv, &hadj);
        if bs.is_empty() {
            return Some(faces.into_iter().map(|f| f.cycle).collect());
        }
        let mut choice = None;
        for (i, b) in bs.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&f| faces[f].mask & b.attachments == b.attachments).collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (bi, fi) = choice.expect("at least one bridge");
        let path = &bs[bi].path;
        let (u, v) = (path[0], *path.last().expect("nonempty path"));
        let interior = &path[1..path.len() - 1];
        let f = &faces[fi].cycle;
        let pu = f.iter().position(|&w| w == u).expect("attachment on face");
        let pv = f.iter().position(|&w| w == v).expect("attachment on face");
        let len = f.len();
        // f = [u, a.., v, b..] after rotating to start at u.
        let rot: Vec<usize> = (0..len).map(|i| f[(pu + i) % len]).collect();
        let k = (pv + len - pu) % len;
        let mut f1: Vec<usize> = rot[..=k].to_vec();
        f1.extend(interior.iter().rev());
        let mut f2: Vec<usize> = rot[k..].to_vec();
        f2.push(u);
        f2.extend(interior.iter());
        faces[fi] = Face::new(f1);
        faces.push(Face::new(f2));
        for w in path.windows(2) {
            hadj[w[0]] |= 1 << w[1];
            hadj[w[1]] |= 1 << w[0];
        }
        for &w in path {
            hv |= 1 << w;
        }
    }
}

/// Neighbour rotations from consistently oriented faces: for consecutive
/// face vertices `a, b, c`, the neighbour after `a` at `b` is `c`.
pub(crate) fn rotations_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let (a, b, c) = (f[i], f[(i + 1) % len], f[(i + 2) % len]);
            succ[b].push((a, c));
        }
    }
    succ.into_iter()
        .map(|pairs| {
            if pairs.is_empty() {
                return Vec::new();
            }
            let mut rot = vec![pairs[0].0];
            let mut cur = pairs[0].0;
            loop {
                let nxt = pairs.iter().find(|p| p.0 == cur).expect("successor defined").1;
                if nxt == rot[0] {
                    break;
                }
                rot.push(nxt);
                cur = nxt;
            }
            debug_assert_eq!(rot.len(), pairs.len());
            rot
        })
        .collect()
}
