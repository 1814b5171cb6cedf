use super::SetFamily;
use crate::SimpleGraph;

/// Graph on the sets of `family`, with an edge between every two sets that
/// share an element.
pub fn intersection_graph(family: &SetFamily) -> SimpleGraph {
    let n = family.len();
    let edges = (0..n).flat_map(|i| (i + 1..n).filter(move |&j| family.intersects(i, j)).map(move |j| (i, j)));
    SimpleGraph::from_dedup(n, edges)
}

/// Delaunay graph: sets `i` and `j` are adjacent when some element lies in
/// exactly those two sets.
pub fn delaunay_graph(family: &SetFamily) -> SimpleGraph {
    let edges = family.traces().iter().filter_map(|trace| {
        let mut ones = trace.ones();
        match (ones.next(), ones.next(), ones.next()) {
            (Some(i), Some(j), None) => Some((i, j)),
            _ => None,
        }
    });
    SimpleGraph::from_dedup(family.len(), edges)
}
