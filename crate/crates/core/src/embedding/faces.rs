use serde::{Deserialize, Serialize};

use super::EmbeddedGraph;
use crate::{Error, Result};

/// Closed boundary walk of one face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacialWalk {
    pub darts: Vec<usize>,
    /// Tail of every dart, in walk order. A lone vertex has one face whose
    /// walk is that vertex with no darts.
    pub vertices: Vec<usize>,
}

impl FacialWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// True when the walk is a cycle: length at least 3, no vertex repeated.
    pub fn is_cycle(&self) -> bool {
        if self.vertices.len() < 3 {
            return false;
        }
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v.dedup();
        v.len() == self.vertices.len()
    }
}

impl EmbeddedGraph {
    /// Successor of `d` along its face: the dart after `twin(d)` at the head.
    pub fn face_next(&self, d: usize) -> usize {
        self.rot_next(d ^ 1)
    }

    /// Partitions the darts into facial walks, each started from the lowest
    /// dart not yet visited.
    pub fn trace_faces(&self) -> Result<Vec<FacialWalk>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.edge_count() == 0 {
            return Ok(vec![FacialWalk { darts: Vec::new(), vertices: vec![0] }]);
        }
        Ok(self.faces_unchecked())
    }

    pub(crate) fn faces_unchecked(&self) -> Vec<FacialWalk> {
        let mut visited = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if visited[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            while !visited[d] {
                visited[d] = true;
                darts.push(d);
                d = self.face_next(d);
            }
            let vertices = darts.iter().map(|&d| self.tail(d)).collect();
            faces.push(FacialWalk { darts, vertices });
        }
        faces
    }

    /// Orientable genus of this embedding, from V − E + F = 2 − 2g.
    pub fn euler_genus(&self) -> Result<usize> {
        let faces = self.trace_faces()?.len() as i64;
        let twice = 2 - self.vertex_count() as i64 + self.edge_count() as i64 - faces;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::InconsistentEmbedding(format!("Euler characteristic gives genus {twice}/2")));
        }
        Ok((twice / 2) as usize)
    }
}
