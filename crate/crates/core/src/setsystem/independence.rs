use fixedbitset::FixedBitSet;

use super::SetFamily;
use crate::limits::NodeCounter;
use crate::{Limits, Result};

/// ν: the largest number of pairwise-disjoint sets.
pub fn independence_number(family: &SetFamily, limits: &Limits) -> Result<usize> {
    Ok(max_disjoint_subfamily(family, limits)?.len())
}

/// A largest pairwise-disjoint subfamily, as sorted set indices.
///
/// Branch and bound over the disjointness graph: a greedy packing seeds the
/// incumbent, and greedy colouring of the candidates (a clique cover of the
/// intersection graph) bounds every branch.
pub fn max_disjoint_subfamily(family: &SetFamily, limits: &Limits) -> Result<Vec<usize>> {
    let n = family.len();
    let mut disjoint = vec![FixedBitSet::with_capacity(n); n];
    for i in 0..n {
        for j in i + 1..n {
            if !family.intersects(i, j) {
                disjoint[i].insert(j);
                disjoint[j].insert(i);
            }
        }
    }
    let limit = (n > limits.max_sets).then_some(limits.node_budget);
    let mut counter = NodeCounter::new("independence number", limit);
    let mut best = greedy_clique(&disjoint);
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..n).collect();
    expand(&disjoint, candidates, &mut current, &mut best, &mut counter)?;
    best.sort_unstable();
    Ok(best)
}

fn greedy_clique(adj: &[FixedBitSet]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones(..)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| adj[u].contains(v)) {
            clique.push(v);
        }
    }
    clique
}

/// Colours `candidates` greedily; returns them ordered by colour together with
/// the colour number (1-based) of each, so that `colour[k]` bounds the clique
/// size within `order[..=k]`.
fn colour_sort(adj: &[FixedBitSet], candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match classes.iter_mut().find(|class| class.iter().all(|&u| !adj[u].contains(v))) {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut colour = Vec::with_capacity(candidates.len());
    for (c, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            colour.push(c + 1);
        }
    }
    (order, colour)
}

fn expand(
    adj: &[FixedBitSet],
    candidates: Vec<usize>,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    counter: &mut NodeCounter,
) -> Result<()> {
    counter.tick()?;
    let (order, colour) = colour_sort(adj, &candidates);
    let mut remaining: Vec<usize> = order.clone();
    for k in (0..order.len()).rev() {
        if current.len() + colour[k] <= best.len() {
            return Ok(());
        }
        let v = order[k];
        remaining.pop();
        current.push(v);
        let next: Vec<usize> = remaining.iter().copied().filter(|&u| adj[v].contains(u)).collect();
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, next, current, best, counter)?;
        }
        current.pop();
    }
    Ok(())
}
