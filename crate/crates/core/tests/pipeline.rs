mod common;

use common::*;
use piercing_core::pipeline::*;
use piercing_core::regions::{disks_to_set_system, random_disk_family, DiskMode};
use piercing_core::setsystem::{min_piercing, SetFamily};
use piercing_core::Limits;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn arcs(n: usize, k: usize) -> SetFamily {
    SetFamily::new(n, (0..n).map(|i| (0..k).map(|j| (i + j) % n).collect()).collect()).unwrap()
}

#[test]
fn cyclic_arcs_and_fano_plane() {
    // every element lies in k of the n arcs, so uniform 1/k weights and a
    // uniform 1/k packing certify n/k
    for (n, k, frac) in [(5, 2, "5/2"), (7, 3, "7/3"), (9, 4, "9/4"), (6, 3, "2")] {
        let f = fractional_piercing(&arcs(n, k), 1e-9).unwrap();
        assert!(f.exact);
        assert_eq!(f.exact_value.as_deref(), Some(frac));
    }
    let fano = SetFamily::new(
        7,
        vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6], vec![1, 3, 5], vec![1, 4, 6], vec![2, 3, 6], vec![2, 4, 5]],
    )
    .unwrap();
    let f = fractional_piercing(&fano, 1e-9).unwrap();
    assert_eq!(f.exact_value.as_deref(), Some("7/3"));
}

#[test]
fn exact_solutions_are_feasible_and_sandwiched() {
    for seed in 0..200u64 {
        let fam = random_family(seed, 9, 9);
        let f = fractional_piercing(&fam, 1e-9).unwrap();
        assert!(f.exact);
        assert!(f.weights.iter().all(|&w| w >= 0.0));
        assert!(set_weights(&fam, &f.weights).iter().all(|&w| w >= 1.0 - TOL), "seed {seed}");
        assert!((f.value - f.dual_value).abs() < TOL);
        let (nu, tau) = (brute_nu(&fam) as f64, brute_tau(&fam) as f64);
        assert!(nu - TOL <= f.value && f.value <= tau + TOL, "seed {seed}: {nu} {} {tau}", f.value);
    }
}

#[test]
fn multiplicative_weights_brackets_the_exact_value() {
    // more dominant elements than the exact limit forces the iterative solver
    let n = 2 * EXACT_LIMIT + 11;
    for k in [2, 3, 5] {
        let f = fractional_piercing(&arcs(n, k), 0.02).unwrap();
        assert!(!f.exact);
        let exact = n as f64 / k as f64;
        assert!(f.dual_value <= exact + TOL && exact <= f.value + TOL, "k {k}");
        assert!(set_weights(&arcs(n, k), &f.weights).iter().all(|&w| w >= 1.0 - TOL));
        if f.precision_reached {
            assert!(f.value - f.dual_value <= 0.02 * f.dual_value + TOL);
        }
    }
}

#[test]
fn nets_meet_every_heavy_set() {
    for seed in 0..150u64 {
        let fam = random_family(seed, 10, 12);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        let weights: Vec<f64> = (0..fam.universe_size()).map(|_| rng.gen_range(0.0..1.0)).collect();
        let total: f64 = weights.iter().sum();
        for eps in [0.05, 0.2, 0.5, 1.0] {
            let net = epsilon_net(&fam, &weights, eps, seed).unwrap();
            let sw = set_weights(&fam, &weights);
            for s in 0..fam.len() {
                let heavy = sw[s] >= eps * total - TOL;
                assert_eq!(net.heavy_sets.contains(&s), heavy);
                if heavy {
                    assert!(net.points.iter().any(|&x| fam.contains(s, x)), "seed {seed}, eps {eps}");
                }
            }
        }
    }
}

#[test]
fn hitting_sets_are_valid_and_never_beat_tau() {
    let limits = Limits::default();
    for seed in 0..120u64 {
        let fam = random_family(seed, 10, 10);
        let cert = pq_hitting_set(&fam).unwrap();
        assert!(cert.validate(&fam));
        assert!(cert.size() >= brute_tau(&fam));
    }
    for seed in 0..20u64 {
        let fam = random_disk_family(12, seed, DiskMode::PairwiseIntersecting).unwrap();
        let f = disks_to_set_system(&fam).unwrap().family;
        let cert = pq_hitting_set(&f).unwrap();
        assert!(cert.validate(&f));
        assert!(cert.size() >= min_piercing(&f, &limits).unwrap().size());
    }
}

/// Replays the random deletions trial by trial and counts edges with the
/// brute-force Delaunay oracle on the surviving subfamily.
fn replay(fam: &SetFamily, q: usize, trials: usize, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let mut survivors = Vec::new();
    let mut edges = Vec::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let kept: Vec<usize> = (0..fam.len()).filter(|_| rng.gen_range(0..q) == 0).collect();
        survivors.push(kept.len());
        let e = if kept.is_empty() { 0 } else { brute_delaunay(&fam.subfamily(&kept).unwrap()).len() };
        edges.push(e);
    }
    (survivors, edges)
}

#[test]
fn experiment_matches_a_trialwise_replay() {
    let limits = Limits::default();
    for seed in 0..12u64 {
        let fam = random_family(seed, 12, 10);
        let q = 2 + seed as usize % 3;
        let stats = clarkson_shor_experiment(&fam, q, 40, seed, 0, &limits).unwrap();
        let (s, e) = replay(&fam, q, 40, seed);
        assert_eq!(stats.survivors, s, "seed {seed}");
        assert_eq!(stats.edges, e, "seed {seed}");
        assert_eq!(stats.nu, brute_nu(&fam));
    }
}

#[test]
fn experiment_on_disks_respects_the_cap() {
    let limits = Limits::default();
    let fam = random_disk_family(25, 11, DiskMode::General).unwrap();
    let f = disks_to_set_system(&fam).unwrap().family;
    let stats = clarkson_shor_experiment(&f, 2, 300, 5, 0, &limits).unwrap();
    assert!(stats.trials_within_cap);
    assert!(stats.mean_below_upper);
    for (&s, &e) in stats.survivors.iter().zip(&stats.edges) {
        assert!(e <= edge_cap(s, 0));
    }
    assert_eq!(stats.trials_csv().lines().count(), 301);
}

#[test]
fn experiment_rejects_degenerate_arguments() {
    let fam = arcs(5, 2);
    let limits = Limits::default();
    assert!(clarkson_shor_experiment(&fam, 1, 10, 0, 0, &limits).is_err());
    assert!(clarkson_shor_experiment(&fam, 2, 0, 0, 0, &limits).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn experiment_is_deterministic(seed in any::<u64>(), fseed in 0u64..1000) {
        let fam = random_family(fseed, 10, 10);
        let limits = Limits::default();
        let a = clarkson_shor_experiment(&fam, 3, 30, seed, 0, &limits).unwrap();
        let b = clarkson_shor_experiment(&fam, 3, 30, seed, 0, &limits).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn nets_are_deterministic(fseed in 0u64..1000, seed in any::<u64>()) {
        let fam = random_family(fseed, 8, 8);
        let w = vec![1.0; fam.universe_size()];
        prop_assert_eq!(epsilon_net(&fam, &w, 0.25, seed).unwrap(), epsilon_net(&fam, &w, 0.25, seed).unwrap());
    }
}
