use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::setsystem::{independence_number, SetFamily};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentStats {
    pub p: usize,
    pub nu: usize,
    pub q: usize,
    pub trials: usize,
    pub seed: u64,
    pub genus: usize,
    pub survivors: Vec<usize>,
    pub edges: Vec<usize>,
    pub mean_survivors: f64,
    pub mean_edges: f64,
    pub std_error_edges: f64,
    /// `(1/e) p (p - 1) / ((ν + 1) ν q^2)`.
    pub lower_bound: f64,
    /// Edge cap at the mean survivor count: `3 s` in the plane,
    /// `3 s - 6 + 6 g` on genus `g`.
    pub upper_bound: f64,
    /// Mean edge count at least the lower bound minus three standard errors.
    pub mean_above_lower: bool,
    pub mean_below_upper: bool,
    /// Every trial within its own edge cap.
    pub trials_within_cap: bool,
}

impl ExperimentStats {
    pub const CSV_HEADER: &'static str = "trial,survivors,edges";

    pub fn trials_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for (t, (s, e)) in self.survivors.iter().zip(&self.edges).enumerate() {
            out.push_str(&format!("{t},{s},{e}\n"));
        }
        out
    }
}

/// Edge cap for a Delaunay graph on `s` sets over a genus-`g` host.
pub fn edge_cap(s: usize, genus: usize) -> usize {
    if genus == 0 {
        3 * s
    } else {
        3 * s + 6 * genus - 6
    }
}

/// Random-deletion experiment: each trial keeps every set independently
/// with probability `1/q` and counts the Delaunay edges among the survivors.
/// Trial `i` draws from its own stream of the seeded generator, so results
/// do not depend on scheduling.
pub fn clarkson_shor_experiment(
    family: &SetFamily,
    q: usize,
    trials: usize,
    seed: u64,
    genus: usize,
    limits: &Limits,
) -> Result<ExperimentStats> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("q = {q}, need q >= 2")));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    let p = family.len();
    let nu = independence_number(family, limits)?;
    let traces: Vec<Vec<usize>> =
        (0..family.universe_size()).map(|x| family.trace(x).ones().collect()).filter(|t: &Vec<usize>| t.len() >= 2).collect();

    let results: Vec<(usize, usize)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let keep: Vec<bool> = (0..p).map(|_| rng.gen_range(0..q) == 0).collect();
            let survivors = keep.iter().filter(|&&k| k).count();
            (survivors, surviving_delaunay_edges(&traces, &keep))
        })
        .collect();
    let survivors: Vec<usize> = results.iter().map(|r| r.0).collect();
    let edges: Vec<usize> = results.iter().map(|r| r.1).collect();

    let n = trials as f64;
    let mean_survivors = survivors.iter().sum::<usize>() as f64 / n;
    let mean_edges = edges.iter().sum::<usize>() as f64 / n;
    let var = if trials > 1 {
        edges.iter().map(|&e| (e as f64 - mean_edges).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    let std_error_edges = (var / n).sqrt();
    let lower_bound = if nu == 0 {
        0.0
    } else {
        (p * p.saturating_sub(1)) as f64 / (std::f64::consts::E * ((nu + 1) * nu * q * q) as f64)
    };
    let upper_bound = if genus == 0 { 3.0 * mean_survivors } else { 3.0 * mean_survivors + 6.0 * genus as f64 - 6.0 };
    let trials_within_cap = survivors.iter().zip(&edges).all(|(&s, &e)| e <= edge_cap(s, genus));
    Ok(ExperimentStats {
        p,
        nu,
        q,
        trials,
        seed,
        genus,
        mean_above_lower: mean_edges >= lower_bound - 3.0 * std_error_edges,
        mean_below_upper: mean_edges <= upper_bound,
        survivors,
        edges,
        mean_survivors,
        mean_edges,
        std_error_edges,
        lower_bound,
        upper_bound,
        trials_within_cap,
    })
}

/// Pairs of surviving sets that share an element lying in no other
/// surviving set. `traces` lists the sets through each element.
fn surviving_delaunay_edges(traces: &[Vec<usize>], keep: &[bool]) -> usize {
    let p = keep.len();
    let mut seen = vec![false; p * p];
    let mut count = 0;
    for tr in traces {
        let mut alive = tr.iter().copied().filter(|&s| keep[s]);
        let (Some(a), Some(b), None) = (alive.next(), alive.next(), alive.next()) else {
            continue;
        };
        if !seen[a * p + b] {
            seen[a * p + b] = true;
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_sets_never_have_edges() {
        let fam = SetFamily::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        let s = clarkson_shor_experiment(&fam, 2, 50, 1, 0, &Limits::default()).unwrap();
        assert!(s.edges.iter().all(|&e| e == 0));
        assert!(s.trials_within_cap);
    }

    #[test]
    fn same_seed_same_stats() {
        let fam = SetFamily::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let a = clarkson_shor_experiment(&fam, 3, 100, 9, 0, &Limits::default()).unwrap();
        let b = clarkson_shor_experiment(&fam, 3, 100, 9, 0, &Limits::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_q_below_two() {
        let fam = SetFamily::new(1, vec![vec![0]]).unwrap();
        assert!(clarkson_shor_experiment(&fam, 1, 10, 0, 0, &Limits::default()).is_err());
    }
}
