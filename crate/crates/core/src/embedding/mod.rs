//! Graphs with a rotation system: the cyclic order of edge-ends at every
//! vertex, which fixes an embedding on an orientable surface.
//!
//! Edge `e = (u, v)` owns two half-edges ("darts"): `2e` leaves `u` and
//! `2e + 1` leaves `v`. The JSON `rotation` lists dart ids.

mod crossfree;
mod faces;
mod metric;
pub mod planarity;

use serde::{Deserialize, Serialize};

use crate::{Error, Result, SimpleGraph};

pub use crossfree::{cross_free_check, Crossing, SubgraphSystem};
pub(crate) use crossfree::{induces_connected, mask_of};
pub use faces::FacialWalk;
pub use metric::UNREACHABLE;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEmbedding", into = "RawEmbedding")]
pub struct EmbeddedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
    /// Position of every dart within the rotation of its tail.
    position: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawEmbedding {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
}

impl TryFrom<RawEmbedding> for EmbeddedGraph {
    type Error = Error;

    fn try_from(raw: RawEmbedding) -> Result<Self> {
        EmbeddedGraph::new(raw.vertices, raw.edges, raw.rotation)
    }
}

impl From<EmbeddedGraph> for RawEmbedding {
    fn from(g: EmbeddedGraph) -> Self {
        RawEmbedding { vertices: g.vertex_count, edges: g.edges, rotation: g.rotation }
    }
}

impl EmbeddedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != vertex_count {
            return Err(Error::InconsistentEmbedding(format!(
                "{} rotation lists for {vertex_count} vertices",
                rotation.len()
            )));
        }
        let mut seen_edges = std::collections::HashSet::new();
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen_edges.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("parallel edge ({u},{v})")));
            }
        }
        let darts = 2 * edges.len();
        let mut position = vec![usize::MAX; darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(Error::InconsistentEmbedding(format!("dart {d} out of range at vertex {v}")));
                }
                let tail = if d % 2 == 0 { edges[d / 2].0 } else { edges[d / 2].1 };
                if tail != v {
                    return Err(Error::InconsistentEmbedding(format!("dart {d} listed at {v} but leaves {tail}")));
                }
                if position[d] != usize::MAX {
                    return Err(Error::InconsistentEmbedding(format!("dart {d} listed twice")));
                }
                position[d] = i;
            }
        }
        if let Some(d) = position.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InconsistentEmbedding(format!("dart {d} missing from its rotation")));
        }
        Ok(EmbeddedGraph { vertex_count, edges, rotation, position })
    }

    /// Builds from neighbour lists given in cyclic order. Edges are numbered
    /// in lexicographic order of `(min, max)` endpoints.
    pub fn from_neighbor_order(neighbors: &[Vec<usize>]) -> Result<Self> {
        let n = neighbors.len();
        let mut edges: Vec<(usize, usize)> = neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        edges.sort_unstable();
        let id = |u: usize, v: usize| -> Result<usize> {
            let key = (u.min(v), u.max(v));
            let e = edges
                .binary_search(&key)
                .map_err(|_| Error::InconsistentEmbedding(format!("neighbour lists not symmetric at ({u},{v})")))?;
            Ok(if u < v { 2 * e } else { 2 * e + 1 })
        };
        let rotation = neighbors
            .iter()
            .enumerate()
            .map(|(u, ns)| ns.iter().map(|&v| id(u, v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        EmbeddedGraph::new(n, edges, rotation)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0` embedded in the plane.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let nbrs: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        Self::from_neighbor_order(&nbrs).expect("cycle embedding is valid")
    }

    /// A path (a tree), trivially embedded.
    pub fn path(n: usize) -> Self {
        let nbrs: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut v = Vec::new();
                if i + 1 < n {
                    v.push(i + 1);
                }
                if i > 0 {
                    v.push(i - 1);
                }
                v
            })
            .collect();
        Self::from_neighbor_order(&nbrs).expect("path embedding is valid")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("embedding serialises")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn tail(&self, d: usize) -> usize {
        let (u, v) = self.edges[d / 2];
        if d % 2 == 0 {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(d ^ 1)
    }

    pub fn twin(d: usize) -> usize {
        d ^ 1
    }

    /// The dart following `d` in the rotation at its tail.
    pub fn rot_next(&self, d: usize) -> usize {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.position[d] + 1) % rot.len()]
    }

    pub fn rot_prev(&self, d: usize) -> usize {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.position[d] + rot.len() - 1) % rot.len()]
    }

    /// Neighbours of `v` in rotation order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().map(move |&d| self.head(d))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).any(|w| w == v)
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::from_dedup(self.vertex_count, self.edges.iter().copied())
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn rejects_inconsistent_rotations() {
        assert!(EmbeddedGraph::new(2, vec![(0, 1)], vec![vec![0], vec![0]]).is_err());
        assert!(EmbeddedGraph::new(2, vec![(0, 1)], vec![vec![0], vec![]]).is_err());
        assert!(EmbeddedGraph::new(2, vec![(0, 1)], vec![vec![0, 0], vec![1]]).is_err());
        assert!(EmbeddedGraph::new(2, vec![(0, 1)], vec![vec![0]]).is_err());
        assert!(EmbeddedGraph::from_neighbor_order(&[vec![1], vec![]]).is_err());
    }

    #[test]
    fn json_format() {
        let g = EmbeddedGraph::path(2);
        assert_eq!(g.to_json(), r#"{"vertices":2,"edges":[[0,1]],"rotation":[[0],[1]]}"#);
        assert_eq!(EmbeddedGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn dart_navigation() {
        let g = k4_planar();
        for d in 0..g.dart_count() {
            assert_eq!(g.head(d), g.tail(EmbeddedGraph::twin(d)));
            assert_eq!(g.rot_prev(g.rot_next(d)), d);
        }
        assert!(g.is_connected());
        assert!(!EmbeddedGraph::from_neighbor_order(&[vec![], vec![]]).unwrap().is_connected());
    }
}
