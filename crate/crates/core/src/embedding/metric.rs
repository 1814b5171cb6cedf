use std::collections::VecDeque;

use super::EmbeddedGraph;

/// Distance value for vertices in another component.
pub const UNREACHABLE: usize = usize::MAX;

impl EmbeddedGraph {
    /// BFS distances from `src`; [`UNREACHABLE`] outside its component.
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::from([src]);
        dist[src] = 0;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.bfs(v)).collect()
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        Some(self.bfs(u)[v]).filter(|&d| d != UNREACHABLE)
    }

    /// d(u, e) = max(d(u, a), d(u, b)) for the edge `e = ab`.
    pub fn edge_distance(&self, u: usize, edge: usize) -> Option<usize> {
        let (a, b) = self.edges()[edge];
        let dist = self.bfs(u);
        (dist[a] != UNREACHABLE && dist[b] != UNREACHABLE).then(|| dist[a].max(dist[b]))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = UNREACHABLE);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Sorted vertices within distance `r` of `u`.
    pub fn r_neighborhood(&self, u: usize, r: usize) -> Vec<usize> {
        self.bfs(u).iter().enumerate().filter(|&(_, &d)| d <= r).map(|(v, _)| v).collect()
    }
}
