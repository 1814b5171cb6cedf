use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::SetFamily;
use crate::limits::NodeCounter;
use crate::{Error, Limits, Result};

/// A hitting set together with, for every set, the point that hits it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiercingCertificate {
    pub points: Vec<usize>,
    pub covered: Vec<usize>,
    pub optimal: bool,
}

impl PiercingCertificate {
    /// Builds a certificate from sorted `points`, assigning each set its
    /// lowest-index hitting point.
    pub fn from_points(family: &SetFamily, mut points: Vec<usize>, optimal: bool) -> Result<Self> {
        points.sort_unstable();
        points.dedup();
        let mut covered = Vec::with_capacity(family.len());
        for i in 0..family.len() {
            match points.iter().find(|&&p| p < family.universe_size() && family.contains(i, p)) {
                Some(&p) => covered.push(p),
                None => return Err(Error::InvalidArgument(format!("set {i} is not hit by the given points"))),
            }
        }
        Ok(PiercingCertificate { points, covered, optimal })
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Every set is hit by its recorded witness, and every witness is one of
    /// the points.
    pub fn validate(&self, family: &SetFamily) -> bool {
        self.covered.len() == family.len()
            && self
                .covered
                .iter()
                .enumerate()
                .all(|(i, &p)| p < family.universe_size() && family.contains(i, p) && self.points.binary_search(&p).is_ok())
    }
}

/// τ with an optimal certificate, by branch and bound over the dominant
/// elements of the universe.
///
/// The search branches on the uncovered set with the fewest candidate
/// points; candidates are tried by decreasing coverage, ties to the lowest
/// index, and each tried candidate is excluded from the later siblings.
pub fn min_piercing(family: &SetFamily, limits: &Limits) -> Result<PiercingCertificate> {
    let candidates = family.dominant_elements();
    let n = family.len();
    let over_cap = n > limits.max_sets || candidates.len() > limits.max_universe;
    let mut search = Search {
        family,
        traces: candidates.iter().map(|&e| family.trace(e).clone()).collect(),
        hitting: (0..n)
            .map(|s| (0..candidates.len()).filter(|&c| family.contains(s, candidates[c])).collect())
            .collect(),
        best: greedy(family, &candidates),
        chosen: Vec::new(),
        counter: NodeCounter::new("minimum piercing", over_cap.then_some(limits.node_budget)),
    };
    let uncovered = {
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        all
    };
    let excluded = FixedBitSet::with_capacity(candidates.len());
    search.run(uncovered, excluded)?;
    let points = search.best.iter().map(|&c| candidates[c]).collect();
    PiercingCertificate::from_points(family, points, true)
}

/// Greedy cover over candidate positions (max new coverage, lowest index on ties).
fn greedy(family: &SetFamily, candidates: &[usize]) -> Vec<usize> {
    let mut uncovered = FixedBitSet::with_capacity(family.len());
    uncovered.insert_range(..);
    let mut picked = Vec::new();
    while !uncovered.is_clear() {
        let (c, _) = candidates
            .iter()
            .enumerate()
            .map(|(c, &e)| (c, family.trace(e).intersection_count(&uncovered)))
            .fold((usize::MAX, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        picked.push(c);
        uncovered.difference_with(family.trace(candidates[c]));
    }
    picked
}

struct Search<'a> {
    family: &'a SetFamily,
    /// Per candidate position: sets it hits.
    traces: Vec<FixedBitSet>,
    /// Per set: candidate positions hitting it.
    hitting: Vec<Vec<usize>>,
    best: Vec<usize>,
    chosen: Vec<usize>,
    counter: NodeCounter,
}

impl Search<'_> {
    fn run(&mut self, uncovered: FixedBitSet, excluded: FixedBitSet) -> Result<()> {
        self.counter.tick()?;
        if uncovered.is_clear() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + 1 >= self.best.len() {
            return Ok(()); // at least one more point is needed
        }
        let Some((branch_set, lower)) = self.branch_set_and_bound(&uncovered, &excluded) else {
            return Ok(()); // some uncovered set has no admissible candidate left
        };
        if self.chosen.len() + lower >= self.best.len() {
            return Ok(());
        }
        let mut options: Vec<usize> =
            self.hitting[branch_set].iter().copied().filter(|&c| !excluded.contains(c)).collect();
        options.sort_by_key(|&c| (std::cmp::Reverse(self.traces[c].intersection_count(&uncovered)), c));
        let mut excluded = excluded;
        for c in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.traces[c]);
            self.chosen.push(c);
            self.run(next, excluded.clone())?;
            self.chosen.pop();
            excluded.insert(c);
        }
        Ok(())
    }

    /// Picks the uncovered set with the fewest admissible candidates and a
    /// packing lower bound: uncovered sets no single admissible candidate can
    /// hit together each need their own point.
    fn branch_set_and_bound(&self, uncovered: &FixedBitSet, excluded: &FixedBitSet) -> Option<(usize, usize)> {
        let mut options: Vec<(usize, usize)> = Vec::new();
        for s in uncovered.ones() {
            let k = self.hitting[s].iter().filter(|&&c| !excluded.contains(c)).count();
            if k == 0 {
                return None;
            }
            options.push((k, s));
        }
        options.sort_unstable();
        let mut blocked = FixedBitSet::with_capacity(self.family.len());
        let mut lower = 0;
        for &(_, s) in &options {
            if blocked.contains(s) {
                continue;
            }
            lower += 1;
            for &c in &self.hitting[s] {
                if !excluded.contains(c) {
                    blocked.union_with(&self.traces[c]);
                }
            }
        }
        Some((options[0].1, lower))
    }
}
