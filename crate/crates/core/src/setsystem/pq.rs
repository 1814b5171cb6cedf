use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::SetFamily;
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PqMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PqVerdict {
    /// In sampled mode `true` only means no counterexample was found.
    pub holds: bool,
    pub exhaustive: bool,
    /// A p-subfamily (sorted set indices) in which no q sets share a point.
    pub witness: Option<Vec<usize>>,
    pub subsets_checked: u64,
}

/// Checks that among every `p` sets some `q` share an element.
pub fn has_pq_property(family: &SetFamily, p: usize, q: usize, mode: PqMode, limits: &Limits) -> Result<PqVerdict> {
    if q == 0 || p < q {
        return Err(Error::InvalidArgument(format!("need p >= q >= 1, got p={p}, q={q}")));
    }
    let n = family.len();
    let exhaustive = matches!(mode, PqMode::Exhaustive);
    if n < p {
        return Ok(PqVerdict { holds: true, exhaustive, witness: None, subsets_checked: 0 });
    }
    let elements = family.dominant_elements();
    let traces: Vec<&FixedBitSet> = elements.iter().map(|&e| family.trace(e)).collect();
    let has_q_common = |subset: &[usize]| {
        let mut bits = FixedBitSet::with_capacity(n);
        subset.iter().for_each(|&i| bits.insert(i));
        traces.iter().any(|t| t.intersection_count(&bits) >= q)
    };

    match mode {
        PqMode::Exhaustive => {
            let total = binomial(n, p);
            if total > limits.pq_budget {
                return Err(Error::BudgetExhausted { what: "exhaustive (p,q) check", budget: limits.pq_budget });
            }
            let mut subset: Vec<usize> = (0..p).collect();
            let mut checked = 0;
            loop {
                checked += 1;
                if !has_q_common(&subset) {
                    return Ok(PqVerdict { holds: false, exhaustive, witness: Some(subset), subsets_checked: checked });
                }
                if !next_combination(&mut subset, n) {
                    break;
                }
            }
            Ok(PqVerdict { holds: true, exhaustive, witness: None, subsets_checked: checked })
        }
        PqMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for t in 0..trials {
                let mut subset = rand::seq::index::sample(&mut rng, n, p).into_vec();
                subset.sort_unstable();
                if !has_q_common(&subset) {
                    return Ok(PqVerdict { holds: false, exhaustive, witness: Some(subset), subsets_checked: t + 1 });
                }
            }
            Ok(PqVerdict { holds: true, exhaustive, witness: None, subsets_checked: trials })
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Advances `c` to the next k-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
