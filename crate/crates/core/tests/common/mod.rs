//! Brute-force oracles and instance generators shared by the integration
//! tests. Nothing here calls the solvers under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use piercing_core::embedding::EmbeddedGraph;
use piercing_core::setsystem::SetFamily;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_family(seed: u64, max_sets: usize, max_universe: usize) -> SetFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = rng.gen_range(1..=max_universe);
    let n = rng.gen_range(1..=max_sets);
    let density = rng.gen_range(0.1..0.6);
    let sets = (0..n)
        .map(|_| {
            let mut s: Vec<usize> = (0..u).filter(|_| rng.gen_bool(density)).collect();
            if s.is_empty() {
                s.push(rng.gen_range(0..u));
            }
            s
        })
        .collect();
    SetFamily::new(u, sets).unwrap()
}

fn sets_as_masks(f: &SetFamily) -> Vec<u64> {
    f.sets().iter().map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x)).collect()
}

/// Largest number of pairwise disjoint sets, by trying every subfamily.
pub fn brute_nu(f: &SetFamily) -> usize {
    let masks = sets_as_masks(f);
    let n = masks.len();
    let mut best = 0;
    for sub in 0u32..(1 << n) {
        let k = sub.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut used = 0u64;
        let ok = (0..n).filter(|&i| sub >> i & 1 == 1).all(|i| {
            let free = used & masks[i] == 0;
            used |= masks[i];
            free
        });
        if ok {
            best = k;
        }
    }
    best
}

/// Smallest element subset meeting every set, by trying every subset.
pub fn brute_tau(f: &SetFamily) -> usize {
    let masks = sets_as_masks(f);
    let u = f.universe_size();
    (0u64..(1 << u))
        .filter(|pts| masks.iter().all(|m| m & pts != 0))
        .map(|pts| pts.count_ones() as usize)
        .min()
        .unwrap()
}

/// VC dimension of `rows` (each a bitmask over `ground` items): the largest
/// item subset on which the rows realise every pattern.
pub fn brute_vc(ground: usize, rows: &[u64]) -> usize {
    let mut best = 0;
    for sub in 0u64..(1 << ground) {
        let k = sub.count_ones() as usize;
        if k <= best {
            continue;
        }
        let patterns: BTreeSet<u64> = rows.iter().map(|r| r & sub).collect();
        if patterns.len() == 1 << k {
            best = k;
        }
    }
    best
}

pub fn brute_primal_vc(f: &SetFamily) -> usize {
    brute_vc(f.universe_size(), &sets_as_masks(f))
}

/// Dual dimension: the transpose has the sets as ground and one row per element.
pub fn brute_dual_vc(f: &SetFamily) -> usize {
    let rows: Vec<u64> = (0..f.universe_size())
        .map(|x| (0..f.len()).filter(|&i| f.set(i).contains(&x)).fold(0u64, |m, i| m | 1 << i))
        .collect();
    brute_vc(f.len(), &rows)
}

/// Pairs of sets sharing an element that lies in no third set.
pub fn brute_delaunay(f: &SetFamily) -> Vec<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for x in 0..f.universe_size() {
        let holders: Vec<usize> = (0..f.len()).filter(|&i| f.set(i).contains(&x)).collect();
        if let [a, b] = holders[..] {
            edges.insert((a, b));
        }
    }
    edges.into_iter().collect()
}

/// Every p-subfamily has q members with a common element.
pub fn brute_pq(f: &SetFamily, p: usize, q: usize) -> bool {
    let n = f.len();
    if n < p {
        return true;
    }
    let masks = sets_as_masks(f);
    (0u32..(1 << n)).filter(|s| s.count_ones() as usize == p).all(|sub| {
        (0..f.universe_size()).any(|x| (0..n).filter(|&i| sub >> i & 1 == 1 && masks[i] >> x & 1 == 1).count() >= q)
    })
}

pub const INF: usize = usize::MAX;

pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Shortest cycle: for every edge, the shortest detour avoiding it, plus one.
pub fn brute_girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut best = None;
    for (i, &(u, v)) in edges.iter().enumerate() {
        let rest: Vec<(usize, usize)> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        let d = floyd_warshall(n, &rest)[u][v];
        if d != INF {
            best = Some(best.map_or(d + 1, |b: usize| b.min(d + 1)));
        }
    }
    best
}

/// Planarity by Wagner's theorem: search every assignment of vertices to
/// branch sets (or deletion) for a K5 or K3,3 minor. Exponential; n <= 8.
pub fn brute_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 8);
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    !has_minor(n, edges, 5, &k5) && !has_minor(n, edges, 6, &k33)
}

fn has_minor(n: usize, edges: &[(usize, usize)], k: usize, pattern: &[(usize, usize)]) -> bool {
    if n < k {
        return false;
    }
    // branch[v] in 0..k, or k for deleted
    let mut branch = vec![0usize; n];
    loop {
        if minor_fits(n, edges, k, pattern, &branch) {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            branch[v] += 1;
            if branch[v] <= k {
                break;
            }
            branch[v] = 0;
            v += 1;
        }
    }
}

fn minor_fits(n: usize, edges: &[(usize, usize)], k: usize, pattern: &[(usize, usize)], branch: &[usize]) -> bool {
    let mut linked = vec![vec![false; k]; k];
    for &(u, v) in edges {
        let (a, b) = (branch[u], branch[v]);
        if a < k && b < k && a != b {
            linked[a][b] = true;
            linked[b][a] = true;
        }
    }
    if !pattern.iter().all(|&(a, b)| linked[a][b]) {
        return false;
    }
    (0..k).all(|c| {
        let verts: Vec<usize> = (0..n).filter(|&v| branch[v] == c).collect();
        let Some(&start) = verts.first() else { return false };
        let mut reached = vec![start];
        let mut i = 0;
        while i < reached.len() {
            let v = reached[i];
            i += 1;
            for &(a, b) in edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && branch[y] == c && !reached.contains(&y) {
                        reached.push(y);
                    }
                }
            }
        }
        reached.len() == verts.len()
    })
}

/// Random connected graph on `n` vertices: a random tree plus extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Vec<(usize, usize)> {
    let mut set = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        set.insert((u, v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            set.insert((u.min(v), u.max(v)));
        }
    }
    set.into_iter().collect()
}

/// The same graph with a random rotation system (any genus).
pub fn random_embedding(rng: &mut ChaCha8Rng, n: usize, edges: &[(usize, usize)]) -> EmbeddedGraph {
    let mut nbrs = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    for ns in nbrs.iter_mut() {
        for i in (1..ns.len()).rev() {
            let j = rng.gen_range(0..=i);
            ns.swap(i, j);
        }
    }
    EmbeddedGraph::from_neighbor_order(&nbrs).unwrap()
}

/// Neighbour lists in rotation order.
pub fn rotation_lists(g: &EmbeddedGraph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.rotation(v).iter().map(|&d| g.head(d)).collect()).collect()
}

/// Isomorphism class of a connected map, reflections included: the least
/// breadth-first relabelling over every starting dart and both orientations.
pub fn map_class(g: &EmbeddedGraph) -> Vec<usize> {
    let rot = rotation_lists(g);
    let mut best: Option<Vec<usize>> = None;
    for u in 0..rot.len() {
        for &v in &rot[u] {
            for reflect in [false, true] {
                let code = relabel_code(&rot, u, v, reflect);
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap_or_default()
}

fn relabel_code(rot: &[Vec<usize>], root: usize, first: usize, reflect: bool) -> Vec<usize> {
    let n = rot.len();
    let mut label = vec![usize::MAX; n];
    let mut start = vec![usize::MAX; n];
    label[root] = 0;
    start[root] = first;
    let mut order = vec![root];
    let mut code = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        let r = &rot[v];
        let deg = r.len();
        let p = r.iter().position(|&x| x == start[v]).unwrap();
        code.push(usize::MAX);
        for k in 0..deg {
            let w = if reflect { r[(p + deg - k) % deg] } else { r[(p + k) % deg] };
            if label[w] == usize::MAX {
                label[w] = order.len();
                start[w] = v;
                order.push(w);
            }
            code.push(label[w]);
        }
    }
    code
}
