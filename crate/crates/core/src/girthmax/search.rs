use std::collections::{HashSet, VecDeque};
use std::rc::Rc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::maximal::addable_pairs;
use crate::embedding::{EmbeddedGraph, FacialWalk};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub ell: usize,
    pub n_max: usize,
    /// States expanded per root cycle length.
    pub node_budget: u64,
    /// Maximal graphs kept per root cycle length, in discovery order.
    pub witnesses_per_root: usize,
}

impl SearchConfig {
    pub fn new(ell: usize, n_max: usize, node_budget: u64) -> Self {
        SearchConfig { ell, n_max, node_budget, witnesses_per_root: 4 }
    }
}

/// A maximal graph found by the search together with a longest face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalWitness {
    pub graph: EmbeddedGraph,
    pub face: FacialWalk,
}

impl MaximalWitness {
    pub fn face_length(&self) -> usize {
        self.face.len()
    }
}

/// One line of the search log, one per root cycle length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLogRow {
    pub root_length: usize,
    pub nodes_expanded: u64,
    pub distinct_states: usize,
    pub maximal_found: usize,
    pub best_face: usize,
    pub best_so_far: usize,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FmaxSearch {
    pub config: SearchConfig,
    /// Longest face over all maximal graphs found; a lower bound on the
    /// true maximum, and "no larger value within n_max" when `exhaustive`.
    pub best_face_length: usize,
    pub best: Option<MaximalWitness>,
    pub witnesses: Vec<MaximalWitness>,
    pub log: Vec<SearchLogRow>,
    pub exhaustive: bool,
}

impl FmaxSearch {
    pub const LOG_HEADER: &'static str =
        "root_length,nodes_expanded,distinct_states,maximal_found,best_face,best_so_far,exhaustive";

    pub fn log_csv(&self) -> String {
        let mut out = String::from(Self::LOG_HEADER);
        out.push('\n');
        for r in &self.log {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.root_length, r.nodes_expanded, r.distinct_states, r.maximal_found, r.best_face, r.best_so_far, r.exhaustive
            ));
        }
        out
    }
}

/// Searches 2-connected maximal plane graphs of girth at least `ell` on at
/// most `n_max` vertices for long faces.
///
/// Every 2-connected plane graph with a face bounded by a cycle `C` arises
/// from `C` by repeatedly drawing an ear (a new path between two distinct
/// vertices of one face) inside a face other than the one kept as `C`'s
/// outside. The search runs this growth breadth-first from every cycle
/// length `ell..=n_max`, rejecting isomorphic states by a canonical code of
/// the map rooted on the kept face. Root lengths are searched in parallel and
/// merged in order, so the result does not depend on the thread count.
pub fn search_fmax(config: SearchConfig) -> Result<FmaxSearch> {
    if config.ell < 3 {
        return Err(Error::InvalidArgument(format!("ell = {}, need ell >= 3", config.ell)));
    }
    if config.n_max > 250 {
        return Err(Error::InvalidArgument("n_max above 250 is not supported".into()));
    }
    let roots: Vec<usize> = (config.ell..=config.n_max).collect();
    let per_root: Vec<RootResult> = roots.par_iter().map(|&k| search_root(&config, k)).collect();

    let mut log = Vec::new();
    let mut witnesses = Vec::new();
    let mut best: Option<MaximalWitness> = None;
    let mut best_so_far = 0;
    let mut exhaustive = true;
    for (k, r) in roots.iter().zip(per_root) {
        exhaustive &= r.exhaustive;
        for w in &r.witnesses {
            if best.as_ref().map_or(true, |b| w.face_length() > b.face_length()) {
                best = Some(w.clone());
            }
        }
        best_so_far = best_so_far.max(r.best_face);
        log.push(SearchLogRow {
            root_length: *k,
            nodes_expanded: r.nodes,
            distinct_states: r.distinct,
            maximal_found: r.maximal_found,
            best_face: r.best_face,
            best_so_far,
            exhaustive: r.exhaustive,
        });
        witnesses.extend(r.witnesses);
    }
    Ok(FmaxSearch { config, best_face_length: best_so_far, best, witnesses, log, exhaustive })
}

struct RootResult {
    nodes: u64,
    distinct: usize,
    maximal_found: usize,
    best_face: usize,
    witnesses: Vec<MaximalWitness>,
    exhaustive: bool,
}

/// Growth state: neighbour lists in rotation order plus one dart `(u, v)`
/// of the kept face.
#[derive(Clone)]
struct State {
    nbrs: Vec<Vec<usize>>,
    root: (usize, usize),
}

fn search_root(config: &SearchConfig, k: usize) -> RootResult {
    let ell = config.ell;
    let start = State {
        nbrs: (0..k).map(|i| vec![(i + 1) % k, (i + k - 1) % k]).collect(),
        root: (0, 1),
    };
    // queued states are kept as their canonical codes only
    let start: Rc<[u8]> = canonical_code(&start).into();
    let mut seen: HashSet<Rc<[u8]>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut result =
        RootResult { nodes: 0, distinct: 1, maximal_found: 0, best_face: 0, witnesses: Vec::new(), exhaustive: true };

    while let Some(code) = queue.pop_front() {
        if result.nodes >= config.node_budget {
            result.exhaustive = false;
            break;
        }
        result.nodes += 1;
        let state = decode(&code);
        let g = EmbeddedGraph::from_neighbor_order(&state.nbrs).expect("growth keeps the rotation valid");
        let faces = g.faces_unchecked();
        let dist = g.all_pairs_distances();
        let root_dart = dart_id(&g, state.root.0, state.root.1);
        let kept = faces.iter().position(|f| f.darts.contains(&root_dart)).expect("kept face exists");

        if addable_pairs(&faces, &dist, ell).is_empty() {
            result.maximal_found += 1;
            let longest = faces.iter().max_by_key(|f| f.len()).expect("at least two faces");
            result.best_face = result.best_face.max(longest.len());
            if result.witnesses.len() < config.witnesses_per_root {
                result.witnesses.push(MaximalWitness { graph: g.clone(), face: longest.clone() });
            }
        }

        let n = state.nbrs.len();
        for (fi, face) in faces.iter().enumerate() {
            if fi == kept {
                continue;
            }
            let vs = &face.vertices;
            let len = vs.len();
            for i in 0..len {
                for j in i + 1..len {
                    let (a, b) = (vs[i], vs[j]);
                    let d = dist[a][b];
                    let min_ear = ell.saturating_sub(d).max(if d == 1 { 2 } else { 1 });
                    for ear in min_ear..=(config.n_max + 1 - n) {
                        let child = add_ear(&state, vs[(i + len - 1) % len], a, vs[(j + len - 1) % len], b, ear);
                        let child: Rc<[u8]> = canonical_code(&child).into();
                        if seen.insert(child.clone()) {
                            queue.push_back(child);
                        }
                    }
                }
            }
        }
    }
    result.distinct = seen.len();
    result
}

/// Inverse of [`bfs_code`]: vertex labels in code order, neighbours in
/// rotation order, rooted on the first dart of vertex 0.
fn decode(code: &[u8]) -> State {
    let nbrs: Vec<Vec<usize>> = code
        .split(|&c| c == SEP)
        .take_while(|chunk| !chunk.is_empty())
        .map(|chunk| chunk.iter().map(|&c| c as usize).collect())
        .collect();
    let root = (0, nbrs[0][0]);
    State { nbrs, root }
}

/// Draws a path of `ear` edges from `a` to `b` through the face whose
/// boundary reaches `a` from `pa` and `b` from `pb`.
fn add_ear(state: &State, pa: usize, a: usize, pb: usize, b: usize, ear: usize) -> State {
    let mut nbrs = state.nbrs.clone();
    let n = nbrs.len();
    let path: Vec<usize> = std::iter::once(a).chain(n..n + ear - 1).chain(std::iter::once(b)).collect();
    for w in path.windows(3) {
        nbrs.push(vec![w[0], w[2]]);
    }
    insert_after(&mut nbrs[a], pa, path[1]);
    insert_after(&mut nbrs[b], pb, path[ear - 1]);
    State { nbrs, root: state.root }
}

fn insert_after(list: &mut Vec<usize>, after: usize, new: usize) {
    let pos = list.iter().position(|&x| x == after).expect("face predecessor is a neighbour");
    list.insert(pos + 1, new);
}

fn dart_id(g: &EmbeddedGraph, u: usize, v: usize) -> usize {
    g.rotation(u).iter().copied().find(|&d| g.head(d) == v).expect("dart exists")
}

/// Smallest breadth-first code of the map over all darts of the kept face
/// (and their twins in the mirror image).
fn canonical_code(state: &State) -> Vec<u8> {
    let mut roots = Vec::new();
    let (mut u, mut v) = state.root;
    loop {
        roots.push((u, v));
        // face successor of u -> v: the neighbour after u in v's rotation
        let rot = &state.nbrs[v];
        let p = rot.iter().position(|&x| x == u).expect("twin listed");
        let w = rot[(p + 1) % rot.len()];
        u = v;
        v = w;
        if (u, v) == state.root {
            break;
        }
    }
    let mut best: Option<Vec<u8>> = None;
    for &(u, v) in &roots {
        for (a, b, mirror) in [(u, v, false), (v, u, true)] {
            let code = bfs_code(&state.nbrs, a, b, mirror);
            if best.as_ref().map_or(true, |cur| code < *cur) {
                best = Some(code);
            }
        }
    }
    best.expect("kept face is nonempty")
}

const SEP: u8 = u8::MAX;

fn bfs_code(nbrs: &[Vec<usize>], root: usize, first: usize, mirror: bool) -> Vec<u8> {
    let n = nbrs.len();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![usize::MAX; n];
    let mut order = vec![root];
    label[root] = 0;
    entry[root] = first;
    let mut code = Vec::with_capacity(n + nbrs.iter().map(Vec::len).sum::<usize>());
    let mut idx = 0;
    while idx < order.len() {
        let x = order[idx];
        idx += 1;
        let rot = &nbrs[x];
        let deg = rot.len();
        let p = rot.iter().position(|&y| y == entry[x]).expect("entry neighbour listed");
        for step in 0..deg {
            let y = if mirror { rot[(p + deg - step) % deg] } else { rot[(p + step) % deg] };
            if label[y] == usize::MAX {
                label[y] = order.len();
                entry[y] = x;
                order.push(y);
            }
            code.push(label[y] as u8);
        }
        code.push(SEP);
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_images_share_a_code() {
        // a square with a pendant ear on one side drawn two ways
        let s = State { nbrs: vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], root: (0, 1) };
        let left = add_ear(&s, 3, 0, 1, 2, 2);
        let right = add_ear(&s, 0, 1, 2, 3, 2);
        assert_eq!(canonical_code(&left), canonical_code(&right));
    }

    #[test]
    fn decoding_round_trips_the_code() {
        let s = State { nbrs: vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], root: (0, 1) };
        let s = add_ear(&s, 3, 0, 1, 2, 3);
        let code = canonical_code(&s);
        assert_eq!(canonical_code(&decode(&code)), code);
    }

    #[test]
    fn triangles_only_for_ell_three() {
        let r = search_fmax(SearchConfig::new(3, 6, 1_000_000)).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.best_face_length, 3);
        assert!(r.witnesses.iter().all(|w| w.face_length() == 3));
    }

    #[test]
    fn four_vertices_cannot_hold_a_pentagon() {
        let r = search_fmax(SearchConfig::new(4, 4, 1_000_000)).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.best_face_length, 4);
    }

    #[test]
    fn pentagon_is_found_for_ell_four() {
        let r = search_fmax(SearchConfig::new(4, 7, 200_000)).unwrap();
        assert_eq!(r.best_face_length, 5);
        let again = search_fmax(SearchConfig::new(4, 7, 200_000)).unwrap();
        assert_eq!(r, again);
    }
}
