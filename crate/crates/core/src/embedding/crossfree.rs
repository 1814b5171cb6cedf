use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::EmbeddedGraph;
use crate::{Error, Result};

/// A host embedding plus a list of vertex sets, each inducing a connected
/// subgraph of the host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphSystem {
    pub host: EmbeddedGraph,
    pub members: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

/// Members `first` and `second` cross at `vertex` (the lowest vertex of the
/// contracted common part).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub first: usize,
    pub second: usize,
    pub vertex: usize,
}

impl SubgraphSystem {
    pub fn new(host: EmbeddedGraph, members: Vec<Vec<usize>>) -> Result<Self> {
        let n = host.vertex_count();
        let mut normalised = Vec::with_capacity(members.len());
        for (i, mut m) in members.into_iter().enumerate() {
            m.sort_unstable();
            m.dedup();
            if m.is_empty() {
                return Err(Error::InvalidArgument(format!("member {i} is empty")));
            }
            if m.iter().any(|&v| v >= n) {
                return Err(Error::InvalidArgument(format!("member {i} has a vertex outside the host")));
            }
            let mask = mask_of(n, &m);
            if !induces_connected(&host, &mask, &m) {
                return Err(Error::InvalidArgument(format!("member {i} does not induce a connected subgraph")));
            }
            normalised.push(m);
        }
        Ok(SubgraphSystem { host, members: normalised, labels: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_mask(&self, i: usize) -> Vec<bool> {
        mask_of(self.host.vertex_count(), &self.members[i])
    }
}

pub(crate) fn mask_of(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    vertices.iter().for_each(|&v| mask[v] = true);
    mask
}

/// Whether `vertices` (all with `mask` set) induce a connected subgraph.
/// The empty set counts as connected.
pub(crate) fn induces_connected(host: &EmbeddedGraph, mask: &[bool], vertices: &[usize]) -> bool {
    let Some(&start) = vertices.first() else {
        return true;
    };
    let mut seen = vec![false; host.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for w in host.neighbors(u) {
            if mask[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == vertices.len()
}

/// Scans every pair of members for a crossing in their reduced graph.
///
/// For a pair (A, B) the edges with both ends in A ∩ B are contracted along a
/// BFS spanning forest of each component of the common part; the remaining
/// internal edges stay as loops. The rotation at a contracted vertex is the
/// walk around its tree. A and B cross there when the A-only and B-only edge
/// ends alternate A, B, A, B in that rotation. Loops belong to both members
/// and never witness a crossing.
pub fn cross_free_check(sys: &SubgraphSystem) -> Option<Crossing> {
    let masks: Vec<Vec<bool>> = (0..sys.len()).map(|i| sys.member_mask(i)).collect();
    for i in 0..sys.len() {
        for j in i + 1..sys.len() {
            if let Some(vertex) = pair_crossing(&sys.host, &masks[i], &masks[j]) {
                return Some(Crossing { first: i, second: j, vertex });
            }
        }
    }
    None
}

/// Vertex at which the members given by `a` and `b` cross, if any.
pub(crate) fn pair_crossing(host: &EmbeddedGraph, a: &[bool], b: &[bool]) -> Option<usize> {
    let n = host.vertex_count();
    let common: Vec<bool> = (0..n).map(|v| a[v] && b[v]).collect();
    let mut tree_edge = vec![false; host.edge_count()];
    let mut visited = vec![false; n];
    let mut components = Vec::new();
    for root in 0..n {
        if !common[root] || visited[root] {
            continue;
        }
        visited[root] = true;
        components.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &d in host.rotation(u) {
                let w = host.head(d);
                if common[w] && !visited[w] {
                    visited[w] = true;
                    tree_edge[d / 2] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    for root in components {
        let Some(&start) = host.rotation(root).first() else {
            continue;
        };
        // labels: +1 for A-only edge ends, -1 for B-only
        let mut labels: Vec<i8> = Vec::new();
        let mut d = start;
        loop {
            if tree_edge[d / 2] {
                d = host.rot_next(d ^ 1);
            } else {
                let (x, y) = (host.tail(d), host.head(d));
                let in_a = a[x] && a[y];
                let in_b = b[x] && b[y];
                if in_a && !in_b {
                    labels.push(1);
                } else if in_b && !in_a {
                    labels.push(-1);
                }
                d = host.rot_next(d);
            }
            if d == start {
                break;
            }
        }
        if cyclic_alternations(&labels) >= 4 {
            return Some(root);
        }
    }
    None
}

/// Number of positions where the cyclic sequence changes value.
pub(crate) fn cyclic_alternations(labels: &[i8]) -> usize {
    let k = labels.len();
    (0..k).filter(|&i| labels[i] != labels[(i + 1) % k]).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star4() -> EmbeddedGraph {
        EmbeddedGraph::from_neighbor_order(&[vec![1, 2, 3, 4], vec![0], vec![0], vec![0], vec![0]]).unwrap()
    }

    #[test]
    fn disjoint_members_are_cross_free() {
        let sys = SubgraphSystem::new(EmbeddedGraph::path(4), vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(cross_free_check(&sys), None);
    }

    #[test]
    fn alternating_star_crosses_at_center() {
        let sys = SubgraphSystem::new(star4(), vec![vec![0, 1, 3], vec![0, 2, 4]]).unwrap();
        assert_eq!(cross_free_check(&sys), Some(Crossing { first: 0, second: 1, vertex: 0 }));
        let nested = SubgraphSystem::new(star4(), vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        assert_eq!(cross_free_check(&nested), None);
    }

    #[test]
    fn crossing_survives_contraction() {
        // a path 0-1 shared by both members, with A-leaves and B-leaves
        // attached alternately around the contracted vertex
        // rotation at 0: 1, 2(A), 3(B); at 1: 0, 4(A), 5(B)
        let g = EmbeddedGraph::from_neighbor_order(&[
            vec![1, 2, 3],
            vec![0, 4, 5],
            vec![0],
            vec![0],
            vec![1],
            vec![1],
        ])
        .unwrap();
        // merged rotation: 2, 3, 4, 5 -> A B A B
        let sys = SubgraphSystem::new(g.clone(), vec![vec![0, 1, 2, 4], vec![0, 1, 3, 5]]).unwrap();
        assert_eq!(cross_free_check(&sys), Some(Crossing { first: 0, second: 1, vertex: 0 }));
        // A B B A around the merged vertex does not cross
        let sys = SubgraphSystem::new(g, vec![vec![0, 1, 2, 5], vec![0, 1, 3, 4]]).unwrap();
        assert_eq!(cross_free_check(&sys), None);
    }

    #[test]
    fn rejects_disconnected_members() {
        assert!(SubgraphSystem::new(EmbeddedGraph::path(3), vec![vec![0, 2]]).is_err());
        assert!(SubgraphSystem::new(EmbeddedGraph::path(3), vec![vec![]]).is_err());
    }

    #[test]
    fn alternation_counts() {
        assert_eq!(cyclic_alternations(&[1, -1, 1, -1]), 4);
        assert_eq!(cyclic_alternations(&[1, 1, -1, -1]), 2);
        assert_eq!(cyclic_alternations(&[]), 0);
    }
}
