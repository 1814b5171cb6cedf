use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::SetFamily;
use crate::limits::NodeCounter;
use crate::{Limits, Result};

/// VC dimension of the family as a range space over its universe.
pub fn vc_dimension(family: &SetFamily, limits: &Limits) -> Result<usize> {
    let rows: Vec<FixedBitSet> = (0..family.len()).map(|i| family.members(i).clone()).collect();
    vc_dimension_of_rows(family.universe_size(), &rows, limits)
}

/// VC dimension of the dual family: ground = sets, one range per element
/// (the sets containing it).
pub fn dual_vc_dimension(family: &SetFamily, limits: &Limits) -> Result<usize> {
    vc_dimension_of_rows(family.len(), family.traces(), limits)
}

/// VC dimension of the ranges `rows`, each a subset of `0..ground`.
///
/// Shattering is hereditary, so shattered sets of size k+1 are grown from
/// shattered sets of size k. Only one element per distinct trace is a
/// candidate, and growth stops once 2^(k+1) exceeds the number of distinct
/// ranges. An empty range system has dimension 0.
pub fn vc_dimension_of_rows(ground: usize, rows: &[FixedBitSet], limits: &Limits) -> Result<usize> {
    let m = rows.len();
    let mut seen = HashSet::new();
    let mut traces: Vec<FixedBitSet> = Vec::new();
    for e in 0..ground {
        let mut t = FixedBitSet::with_capacity(m);
        for (r, row) in rows.iter().enumerate() {
            if row.contains(e) {
                t.insert(r);
            }
        }
        let ones = t.count_ones(..);
        if ones == 0 || ones == m {
            continue; // cannot be in any nonempty shattered set
        }
        if seen.insert(t.ones().collect::<Vec<_>>()) {
            traces.push(t);
        }
    }
    let distinct_rows = rows
        .iter()
        .map(|r| r.ones().filter(|&e| e < ground).collect::<Vec<_>>())
        .collect::<HashSet<_>>()
        .len();
    let limit = (traces.len() > limits.max_vc_candidates).then_some(limits.node_budget);
    let mut counter = NodeCounter::new("VC dimension", limit);

    let mut level: Vec<Vec<usize>> = (0..traces.len()).map(|c| vec![c]).collect();
    let mut dim = 0;
    while !level.is_empty() {
        dim = level[0].len();
        if 1usize << (dim + 1) > distinct_rows {
            break;
        }
        let shattered: HashSet<&Vec<usize>> = level.iter().collect();
        let mut next = Vec::new();
        for x in &level {
            let last = *x.last().expect("nonempty");
            for c in last + 1..traces.len() {
                let mut y = x.clone();
                y.push(c);
                // every k-subset of a shattered set is shattered
                let subsets_ok = (0..y.len() - 1).all(|skip| {
                    let sub: Vec<usize> = y.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    shattered.contains(&sub)
                });
                if !subsets_ok {
                    continue;
                }
                counter.tick()?;
                if is_shattered(&traces, &y, m) {
                    next.push(y);
                }
            }
        }
        level = next;
    }
    Ok(dim)
}

fn is_shattered(traces: &[FixedBitSet], x: &[usize], rows: usize) -> bool {
    let k = x.len();
    let mut patterns = FixedBitSet::with_capacity(1 << k);
    for r in 0..rows {
        let pat = x.iter().enumerate().fold(0usize, |acc, (i, &c)| acc | (usize::from(traces[c].contains(r)) << i));
        patterns.insert(pat);
    }
    patterns.count_ones(..) == 1 << k
}
