//! Finite set families over an explicit universe of witness points.

mod delaunay;
mod independence;
mod piercing;
mod pq;
mod vc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use delaunay::{delaunay_graph, intersection_graph};
pub use independence::{independence_number, max_disjoint_subfamily};
pub use piercing::{min_piercing, PiercingCertificate};
pub use pq::{has_pq_property, PqMode, PqVerdict};
pub use vc::{dual_vc_dimension, vc_dimension, vc_dimension_of_rows};

/// A family of nonempty subsets of `{0, .., universe_size - 1}`.
///
/// Set order is part of the identity of the family: every report refers to
/// sets by their position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct SetFamily {
    universe_size: usize,
    sets: Vec<Vec<usize>>,
    labels: Vec<String>,
    /// `members[i]` is set `i` as a bitset over the universe.
    members: Vec<FixedBitSet>,
    /// `traces[e]` is the set of family indices containing element `e`.
    traces: Vec<FixedBitSet>,
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    universe: usize,
    sets: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Vec<String>,
}

impl TryFrom<RawFamily> for SetFamily {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        SetFamily::new(raw.universe, raw.sets)?.with_labels(raw.labels)
    }
}

impl From<SetFamily> for RawFamily {
    fn from(f: SetFamily) -> Self {
        RawFamily { universe: f.universe_size, sets: f.sets, labels: f.labels }
    }
}

impl SetFamily {
    /// Sets are sorted and deduplicated; empty sets and out-of-range elements
    /// are rejected.
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalised = Vec::with_capacity(sets.len());
        let mut members = Vec::with_capacity(sets.len());
        let mut traces = vec![FixedBitSet::with_capacity(sets.len()); universe_size];
        for (i, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::InvalidFamily(format!("set {i} is empty")));
            }
            if let Some(&e) = set.iter().find(|&&e| e >= universe_size) {
                return Err(Error::InvalidFamily(format!(
                    "set {i} contains element {e} outside universe of size {universe_size}"
                )));
            }
            let mut bits = FixedBitSet::with_capacity(universe_size);
            for &e in &set {
                bits.insert(e);
                traces[e].insert(i);
            }
            members.push(bits);
            normalised.push(set);
        }
        Ok(SetFamily { universe_size, sets: normalised, labels: Vec::new(), members, traces })
    }

    /// Attaches per-set labels. An empty vector clears them.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if !labels.is_empty() && labels.len() != self.sets.len() {
            return Err(Error::InvalidFamily(format!(
                "{} labels for {} sets",
                labels.len(),
                self.sets.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("set family serialises")
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn members(&self, i: usize) -> &FixedBitSet {
        &self.members[i]
    }

    pub fn contains(&self, set: usize, element: usize) -> bool {
        self.members[set].contains(element)
    }

    /// Indices of the sets containing `element`.
    pub fn trace(&self, element: usize) -> &FixedBitSet {
        &self.traces[element]
    }

    pub fn traces(&self) -> &[FixedBitSet] {
        &self.traces
    }

    /// Number of sets containing `element`.
    pub fn depth(&self, element: usize) -> usize {
        self.traces[element].count_ones(..)
    }

    pub fn intersects(&self, i: usize, j: usize) -> bool {
        !self.members[i].is_disjoint(&self.members[j])
    }

    /// The family restricted to the sets at `indices`, in that order, over the
    /// same universe.
    pub fn subfamily(&self, indices: &[usize]) -> Result<SetFamily> {
        let sets = indices.iter().map(|&i| self.sets[i].clone()).collect();
        let fam = SetFamily::new(self.universe_size, sets)?;
        if self.labels.is_empty() {
            Ok(fam)
        } else {
            fam.with_labels(indices.iter().map(|&i| self.labels[i].clone()).collect())
        }
    }

    /// Elements whose trace is maximal under inclusion, one representative
    /// (the lowest index) per distinct trace. Elements lying in no set are
    /// dropped. Every hitting set can be rewritten over these elements.
    pub fn dominant_elements(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = Vec::new();
        let mut seen: std::collections::HashSet<Vec<usize>> = Default::default();
        for e in 0..self.universe_size {
            if self.traces[e].is_clear() {
                continue;
            }
            if seen.insert(self.traces[e].ones().collect()) {
                reps.push(e);
            }
        }
        reps.iter()
            .copied()
            .filter(|&e| {
                !reps.iter().any(|&f| {
                    f != e
                        && self.traces[e].is_subset(&self.traces[f])
                        && self.traces[e] != self.traces[f]
                })
            })
            .collect()
    }
}
