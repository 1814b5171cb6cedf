use serde::{Deserialize, Serialize};

use crate::embedding::{EmbeddedGraph, FacialWalk, UNREACHABLE};
use crate::{Error, Result};

/// A non-adjacent pair on a common face whose distance is at least `ell - 1`:
/// the edge `u v` could be drawn inside `face` without a short cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddablePair {
    pub u: usize,
    pub v: usize,
    pub face: usize,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityReport {
    pub ell: usize,
    pub girth: Option<usize>,
    pub girth_ok: bool,
    pub addable_pairs: Vec<AddablePair>,
    pub is_maximal: bool,
    pub max_face_length: usize,
    pub genus: usize,
    pub two_connected: bool,
}

/// Checks that `g` has girth at least `ell` and that no edge can be added
/// inside a face of this embedding without closing a cycle shorter than
/// `ell`.
pub fn verify_maximal(g: &EmbeddedGraph, ell: usize) -> Result<MaximalityReport> {
    if ell < 3 {
        return Err(Error::InvalidArgument(format!("ell = {ell}, need ell >= 3")));
    }
    let faces = g.trace_faces()?;
    let genus = g.euler_genus()?;
    let dist = g.all_pairs_distances();
    let girth = g.girth();
    let girth_ok = girth.map_or(true, |x| x >= ell);
    let addable_pairs = addable_pairs(&faces, &dist, ell);
    Ok(MaximalityReport {
        ell,
        girth,
        girth_ok,
        is_maximal: girth_ok && addable_pairs.is_empty(),
        addable_pairs,
        max_face_length: faces.iter().map(FacialWalk::len).max().unwrap_or(0),
        genus,
        two_connected: is_two_connected(g),
    })
}

pub(crate) fn addable_pairs(
    faces: &[FacialWalk],
    dist: &[Vec<usize>],
    ell: usize,
) -> Vec<AddablePair> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (fi, face) in faces.iter().enumerate() {
        let mut vs = face.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        for (a, &u) in vs.iter().enumerate() {
            for &v in &vs[a + 1..] {
                let d = dist[u][v];
                if d != UNREACHABLE && d + 1 >= ell && d >= 2 && seen.insert((u, v)) {
                    out.push(AddablePair { u, v, face: fi, distance: d });
                }
            }
        }
    }
    out
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &EmbeddedGraph) -> bool {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() {
        return false;
    }
    (0..n).all(|cut| {
        let start = if cut == 0 { 1 } else { 0 };
        let mut seen = vec![false; n];
        seen[cut] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n - 1
    })
}

/// Replaces every edge `e = (u, v)` by the path `u - m_e - v` with
/// `m_e = V + e`. New edge `2e` is `(u, m_e)`, `2e + 1` is `(m_e, v)`, so the
/// rotation at every old vertex keeps its order.
pub fn subdivide_even(g: &EmbeddedGraph) -> EmbeddedGraph {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((n + e, v));
    }
    let mut rotation: Vec<Vec<usize>> = (0..n)
        .map(|v| g.rotation(v).iter().map(|&d| subdivided_dart(d)).collect())
        .collect();
    for e in 0..g.edge_count() {
        rotation.push(vec![4 * e + 1, 4 * e + 2]);
    }
    EmbeddedGraph::new(n + g.edge_count(), edges, rotation).expect("subdivision keeps the rotation valid")
}

/// Image of dart `d` of the original graph: the half of its subdivided edge
/// leaving the same old vertex.
pub fn subdivided_dart(d: usize) -> usize {
    let e = d / 2;
    if d % 2 == 0 {
        4 * e
    } else {
        4 * e + 3
    }
}
