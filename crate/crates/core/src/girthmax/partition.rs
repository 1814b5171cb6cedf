use serde::{Deserialize, Serialize};

use crate::dsseq::find_alternation;
use crate::embedding::{EmbeddedGraph, FacialWalk, UNREACHABLE};
use crate::{Error, Result};

/// A maximal stretch of consecutive cycle positions in one class. `start`
/// is a cycle position; a run may wrap past the end of the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Run {
    pub class: usize,
    pub start: usize,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub cycle: FacialWalk,
    pub ell: usize,
    pub pierce_set: Vec<usize>,
    /// Class of each cycle position: index into `pierce_set`.
    pub classes: Vec<usize>,
    /// Distance from each cycle vertex to the pierce vertex of its class.
    pub distances: Vec<usize>,
    pub runs: Vec<Run>,
    /// Every cycle vertex within `ell / 2 - 1` of some pierce vertex.
    pub pierces: bool,
    pub run_length_ok: bool,
    pub unimodal_ok: bool,
    pub alternation_b: usize,
    pub alternation_ok: bool,
    pub cycle_length: usize,
    /// `(2 |Z| - 1)(ell - 1)`.
    pub bound_value: usize,
}

impl PartitionReport {
    pub fn bound_holds(&self) -> bool {
        self.cycle_length <= self.bound_value
    }
}

/// Assigns every vertex of `cycle` to the lowest-index closest vertex of `z`
/// and runs the run-length, unimodality and alternation checks. The
/// alternation parameter is 2 on a plane embedding and `4g + 3` on genus `g`.
pub fn partition_cycle(g: &EmbeddedGraph, cycle: &FacialWalk, z: &[usize], ell: usize) -> Result<PartitionReport> {
    if z.is_empty() {
        return Err(Error::InvalidArgument("pierce set is empty".into()));
    }
    if ell < 2 {
        return Err(Error::InvalidArgument(format!("ell = {ell}, need ell >= 2")));
    }
    if let Some(&v) = z.iter().chain(&cycle.vertices).find(|&&v| v >= g.vertex_count()) {
        return Err(Error::InvalidArgument(format!("vertex {v} outside the graph")));
    }
    let from_z: Vec<Vec<usize>> = z.iter().map(|&zj| g.bfs(zj)).collect();
    let radius = ell / 2 - 1;
    let mut classes = Vec::with_capacity(cycle.vertices.len());
    let mut distances = Vec::with_capacity(cycle.vertices.len());
    for &v in &cycle.vertices {
        // strict comparison keeps the lowest index among the closest
        let mut best = 0;
        for j in 1..z.len() {
            if from_z[j][v] < from_z[best][v] {
                best = j;
            }
        }
        classes.push(best);
        distances.push(from_z[best][v]);
    }
    let pierces = distances.iter().all(|&d| d != UNREACHABLE && d <= radius);
    let runs = cyclic_runs(&classes);
    let genus = g.euler_genus().unwrap_or(0);
    let alternation_b = if genus == 0 { 2 } else { 4 * genus + 3 };
    let mut report = PartitionReport {
        cycle: cycle.clone(),
        ell,
        pierce_set: z.to_vec(),
        cycle_length: classes.len(),
        classes,
        distances,
        runs,
        pierces,
        run_length_ok: false,
        unimodal_ok: false,
        alternation_b,
        alternation_ok: false,
        bound_value: (2 * z.len() - 1) * (ell - 1),
    };
    let (run_length_ok, unimodal_ok) = check_runs(&report, g, ell);
    report.run_length_ok = run_length_ok;
    report.unimodal_ok = unimodal_ok;
    report.alternation_ok = check_alternation(&report, alternation_b);
    Ok(report)
}

/// Maximal constant stretches of a cyclic sequence, listed from the first
/// position that starts a run. A constant sequence is one run from 0.
pub fn cyclic_runs(classes: &[usize]) -> Vec<Run> {
    let m = classes.len();
    if m == 0 {
        return Vec::new();
    }
    let Some(first) = (0..m).find(|&i| classes[i] != classes[(i + m - 1) % m]) else {
        return vec![Run { class: classes[0], start: 0, length: m }];
    };
    let mut runs = Vec::new();
    let mut start = first;
    let mut length = 1;
    for step in 1..m {
        let i = (first + step) % m;
        if classes[i] == classes[start] {
            length += 1;
        } else {
            runs.push(Run { class: classes[start], start, length });
            start = i;
            length = 1;
        }
    }
    runs.push(Run { class: classes[start], start, length });
    runs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileCheck {
    /// Neighbouring distances differ by exactly one.
    pub unit_steps: bool,
    /// No interior position is a strict local maximum.
    pub no_interior_peak: bool,
}

impl ProfileCheck {
    pub fn unimodal(&self) -> bool {
        self.unit_steps && self.no_interior_peak
    }
}

/// Checks a run's distance profile to its pierce vertex: the negated
/// distance must be strictly unimodal, i.e. the profile falls and then rises.
pub fn check_distance_profile(d: &[usize]) -> ProfileCheck {
    let unit_steps = d.windows(2).all(|w| w[0].abs_diff(w[1]) == 1);
    let no_interior_peak = d.windows(3).all(|w| !(w[0] < w[1] && w[1] > w[2]));
    ProfileCheck { unit_steps, no_interior_peak }
}

/// `(run_length_ok, unimodal_ok)` with distances recomputed in `g`: every
/// run has at most `ell - 1` vertices and a unimodal distance profile.
pub fn check_runs(report: &PartitionReport, g: &EmbeddedGraph, ell: usize) -> (bool, bool) {
    let m = report.classes.len();
    let from_z: Vec<Vec<usize>> = report.pierce_set.iter().map(|&zj| g.bfs(zj)).collect();
    let mut run_length_ok = true;
    let mut unimodal_ok = true;
    for run in &report.runs {
        run_length_ok &= run.length + 1 <= ell;
        let profile: Vec<usize> =
            (0..run.length).map(|s| from_z[run.class][report.cycle.vertices[(run.start + s) % m]]).collect();
        unimodal_ok &= check_distance_profile(&profile).unimodal();
    }
    (run_length_ok, unimodal_ok)
}

/// True when no two classes alternate `b` times each along the cycle, read
/// linearly from position 0.
pub fn check_alternation(report: &PartitionReport, b: usize) -> bool {
    find_alternation(&report.classes, b).is_none()
}
