use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::lp::{fractional_piercing, set_weights};
use crate::setsystem::{PiercingCertificate, SetFamily};
use crate::{Error, Result};

const WEIGHT_TOL: f64 = 1e-9;
const SAMPLE_ATTEMPTS: u64 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NetMethod {
    Greedy,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpsilonNet {
    pub points: Vec<usize>,
    /// Sets carrying at least ε of the total weight.
    pub heavy_sets: Vec<usize>,
    pub method: NetMethod,
}

impl EpsilonNet {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// Element subset meeting every set whose weight is at least `eps` times
/// the total. Built greedily (most uncovered heavy sets first, ties to the
/// heavier then the lower element); a seeded random sample drawn from the
/// weights replaces it when it is a verified net and strictly smaller.
pub fn epsilon_net(family: &SetFamily, weights: &[f64], eps: f64, seed: u64) -> Result<EpsilonNet> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::InvalidArgument(format!("eps = {eps} must lie in (0, 1]")));
    }
    if weights.len() != family.universe_size() || weights.iter().any(|&w| !(w >= 0.0)) {
        return Err(Error::InvalidArgument("need one nonnegative weight per element".into()));
    }
    let total: f64 = weights.iter().sum();
    let heavy_sets: Vec<usize> = set_weights(family, weights)
        .iter()
        .enumerate()
        .filter(|&(_, &w)| total > 0.0 && w >= eps * total - WEIGHT_TOL)
        .map(|(i, _)| i)
        .collect();

    let greedy = greedy_net(family, weights, &heavy_sets);
    let mut net = EpsilonNet { points: greedy, heavy_sets, method: NetMethod::Greedy };
    if let Some(sample) = sampled_net(family, weights, eps, seed, &net.heavy_sets) {
        if sample.len() < net.points.len() {
            net.points = sample;
            net.method = NetMethod::Sampled;
        }
    }
    debug_assert!(is_net(family, &net.points, &net.heavy_sets));
    Ok(net)
}

fn greedy_net(family: &SetFamily, weights: &[f64], heavy: &[usize]) -> Vec<usize> {
    let mut uncovered = vec![false; family.len()];
    heavy.iter().for_each(|&s| uncovered[s] = true);
    let mut left = heavy.len();
    let mut points = Vec::new();
    while left > 0 {
        let mut best: Option<(usize, usize)> = None;
        for x in 0..family.universe_size() {
            let gain = family.trace(x).ones().filter(|&s| uncovered[s]).count();
            if gain == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((b, bg)) => gain > bg || (gain == bg && weights[x] > weights[b]),
            };
            if better {
                best = Some((x, gain));
            }
        }
        let (x, gain) = best.expect("every heavy set is nonempty");
        for s in family.trace(x).ones() {
            uncovered[s] = false;
        }
        left -= gain;
        points.push(x);
    }
    points.sort_unstable();
    points
}

/// A random sample of the standard ε-net size, drawn from the weights,
/// returned only when it passes the exhaustive heavy-set check.
fn sampled_net(family: &SetFamily, weights: &[f64], eps: f64, seed: u64, heavy: &[usize]) -> Option<Vec<usize>> {
    let dist = WeightedIndex::new(weights).ok()?;
    let size = ((2.0 / eps) * (2.0 / eps).ln().max(1.0)).ceil() as usize;
    let size = size.min(family.universe_size());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let mut pts: Vec<usize> = (0..size).map(|_| dist.sample(&mut rng)).collect();
        pts.sort_unstable();
        pts.dedup();
        if is_net(family, &pts, heavy) {
            return Some(pts);
        }
    }
    None
}

pub(crate) fn is_net(family: &SetFamily, points: &[usize], heavy: &[usize]) -> bool {
    heavy.iter().all(|&s| points.iter().any(|&x| family.contains(s, x)))
}

/// Hitting set from the fractional solution: an ε-net with ε = 1/(2τ*)
/// meets every set (each carries weight at least 1 = 2ε τ*); rounds repeat
/// on whatever is left uncovered. The certificate is not claimed optimal.
pub fn pq_hitting_set(family: &SetFamily) -> Result<PiercingCertificate> {
    let mut points: Vec<usize> = Vec::new();
    let mut uncovered: Vec<usize> = (0..family.len()).collect();
    let mut round = 0u64;
    while !uncovered.is_empty() {
        let sub = family.subfamily(&uncovered)?;
        let frac = fractional_piercing(&sub, 1e-6)?;
        let eps = (1.0 / (2.0 * frac.value)).min(1.0);
        let net = epsilon_net(&sub, &frac.weights, eps, round)?;
        points.extend(&net.points);
        points.sort_unstable();
        points.dedup();
        uncovered.retain(|&s| !points.iter().any(|&x| family.contains(s, x)));
        round += 1;
    }
    PiercingCertificate::from_points(family, points, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_heavy_set_needs_one_point() {
        let fam = SetFamily::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let net = epsilon_net(&fam, &[0.5, 0.5, 0.0], 1.0, 0).unwrap();
        assert_eq!(net.heavy_sets, vec![0]);
        assert_eq!(net.size(), 1);
    }

    #[test]
    fn small_eps_gives_a_hitting_set() {
        let fam = SetFamily::new(4, vec![vec![0], vec![1, 2], vec![2, 3], vec![3]]).unwrap();
        let net = epsilon_net(&fam, &[1.0; 4], 0.01, 3).unwrap();
        assert_eq!(net.heavy_sets.len(), 4);
        assert!(is_net(&fam, &net.points, &[0, 1, 2, 3]));
    }

    #[test]
    fn disjoint_sets_get_one_point_each() {
        let fam = SetFamily::new(5, vec![vec![0, 1], vec![2], vec![3, 4]]).unwrap();
        let cert = pq_hitting_set(&fam).unwrap();
        assert!(!cert.optimal);
        assert!(cert.validate(&fam));
        assert_eq!(cert.size(), 3);
    }

    #[test]
    fn rejects_bad_eps() {
        let fam = SetFamily::new(1, vec![vec![0]]).unwrap();
        assert!(epsilon_net(&fam, &[1.0], 0.0, 0).is_err());
        assert!(epsilon_net(&fam, &[1.0], 1.5, 0).is_err());
    }
}
