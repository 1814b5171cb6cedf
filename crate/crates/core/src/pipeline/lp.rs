use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::setsystem::SetFamily;
use crate::{Error, Result};

/// Largest reduced universe and family solved with exact rationals.
pub const EXACT_LIMIT: usize = 200;

/// Iteration cap of the multiplicative-weights solver.
const MWU_ITERATIONS: usize = 200_000;

/// Optimal (or certified near-optimal) fractional piercing: nonnegative
/// element weights putting total weight at least 1 into every set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FractionalPiercing {
    pub weights: Vec<f64>,
    /// Total weight, τ*.
    pub value: f64,
    /// Value of a feasible fractional packing of the sets, a lower bound on
    /// τ* (equal to it when exact).
    pub dual_value: f64,
    pub exact: bool,
    /// τ* as a reduced fraction when solved exactly.
    pub exact_value: Option<String>,
    /// `value - dual_value <= precision * dual_value`.
    pub precision_reached: bool,
}

/// Solves the fractional piercing LP. Exact rational simplex when the
/// dominant elements and the sets number at most [`EXACT_LIMIT`], otherwise
/// multiplicative weights with a certified primal/dual gap.
pub fn fractional_piercing(family: &SetFamily, precision: f64) -> Result<FractionalPiercing> {
    if !(precision > 0.0) {
        return Err(Error::InvalidArgument(format!("precision {precision} must be positive")));
    }
    if family.is_empty() {
        return Ok(FractionalPiercing {
            weights: vec![0.0; family.universe_size()],
            value: 0.0,
            dual_value: 0.0,
            exact: true,
            exact_value: Some("0".into()),
            precision_reached: true,
        });
    }
    let rows = family.dominant_elements();
    if rows.len() <= EXACT_LIMIT && family.len() <= EXACT_LIMIT {
        Ok(exact_lp(family, &rows))
    } else {
        Ok(multiplicative_weights(family, &rows, precision))
    }
}

/// Dual packing LP `max sum y_S` with `sum_{S ∋ x} y_S <= 1` per dominant
/// element `x`, by a dense tableau simplex with Bland's rule. The slack basis
/// is feasible, so no first phase is needed. Element weights are the optimal
/// duals of the packing constraints.
fn exact_lp(family: &SetFamily, rows: &[usize]) -> FractionalPiercing {
    let n = family.len();
    let m = rows.len();
    let cols = n + m;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut t: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let mut row = vec![zero.clone(); cols + 1];
            for s in family.trace(x).ones() {
                row[s] = one.clone();
            }
            row[n + i] = one.clone();
            row[cols] = one.clone();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..cols).collect();
    // reduced costs; the last entry is minus the objective value
    let mut obj: Vec<BigRational> = (0..=cols).map(|j| if j < n { one.clone() } else { zero.clone() }).collect();

    while let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let lhs = &t[i][cols] * &t[l][enter];
                    let rhs = &t[l][cols] * &t[i][enter];
                    if lhs < rhs || (lhs == rhs && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let r = leave.expect("packing LP is bounded");
        let piv = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        let f = obj[enter].clone();
        for (v, p) in obj.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
        basis[r] = enter;
    }

    let value = -obj[cols].clone();
    let mut weights = vec![0.0; family.universe_size()];
    for (i, &x) in rows.iter().enumerate() {
        weights[x] = (-obj[n + i].clone()).to_f64().unwrap_or(0.0);
    }
    let v = value.to_f64().unwrap_or(f64::NAN);
    FractionalPiercing {
        weights,
        value: v,
        dual_value: v,
        exact: true,
        exact_value: Some(value.to_string()),
        precision_reached: true,
    }
}

/// Multiplicative weights over the sets: repeatedly buy the element carrying
/// the most set weight and shrink the weight of the sets it covers. The
/// scaled purchase counts are feasible weights; the set weights, scaled by
/// the heaviest element load, are a feasible packing.
fn multiplicative_weights(family: &SetFamily, rows: &[usize], precision: f64) -> FractionalPiercing {
    let n = family.len();
    let eta = (precision / 2.0).clamp(1e-3, 0.1);
    let traces: Vec<Vec<usize>> = rows.iter().map(|&x| family.trace(x).ones().collect()).collect();
    let mut hits = vec![0u32; n];
    let mut bought = vec![0u64; rows.len()];
    let mut best_dual = 0.0f64;
    let mut best_primal = f64::INFINITY;
    let mut best_weights = vec![0.0; family.universe_size()];
    let mut precision_reached = false;
    let min_hits = |hits: &[u32]| hits.iter().copied().min().unwrap_or(0);
    for iter in 0..MWU_ITERATIONS {
        let base = min_hits(&hits);
        let p: Vec<f64> = hits.iter().map(|&h| (1.0 - eta).powi((h - base) as i32)).collect();
        let loads: Vec<f64> = traces.iter().map(|tr| tr.iter().map(|&s| p[s]).sum()).collect();
        let (arg, max_load) = loads
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::MIN), |acc, (i, l)| if l > acc.1 { (i, l) } else { acc });
        best_dual = best_dual.max(p.iter().sum::<f64>() / max_load);
        bought[arg] += 1;
        for &s in &traces[arg] {
            hits[s] += 1;
        }
        let covered = min_hits(&hits);
        if covered > 0 {
            let primal = bought.iter().sum::<u64>() as f64 / covered as f64;
            if primal < best_primal {
                best_primal = primal;
                best_weights.iter_mut().for_each(|w| *w = 0.0);
                for (i, &x) in rows.iter().enumerate() {
                    best_weights[x] = bought[i] as f64 / covered as f64;
                }
            }
        }
        if iter % 64 == 0 && best_primal - best_dual <= precision * best_dual {
            precision_reached = true;
            break;
        }
    }
    precision_reached |= best_primal - best_dual <= precision * best_dual;
    FractionalPiercing {
        value: best_weights.iter().sum(),
        weights: best_weights,
        dual_value: best_dual,
        exact: false,
        exact_value: None,
        precision_reached,
    }
}

/// Total weight inside every set.
pub fn set_weights(family: &SetFamily, weights: &[f64]) -> Vec<f64> {
    family.sets().iter().map(|s| s.iter().map(|&x| weights[x]).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_sets_need_one_each() {
        let fam = SetFamily::new(4, vec![vec![0], vec![1, 2], vec![3]]).unwrap();
        let f = fractional_piercing(&fam, 1e-9).unwrap();
        assert!(f.exact);
        assert_eq!(f.exact_value.as_deref(), Some("3"));
    }

    #[test]
    fn triangle_without_common_point_is_three_halves() {
        let fam = SetFamily::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let f = fractional_piercing(&fam, 1e-9).unwrap();
        assert_eq!(f.exact_value.as_deref(), Some("3/2"));
        assert_eq!(f.weights, vec![0.5, 0.5, 0.5]);
        assert!(set_weights(&fam, &f.weights).iter().all(|&w| w >= 1.0 - 1e-12));
    }

    #[test]
    fn multiplicative_weights_brackets_the_optimum() {
        let fam = SetFamily::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let rows = fam.dominant_elements();
        let f = multiplicative_weights(&fam, &rows, 0.01);
        assert!(f.dual_value <= 1.5 + 1e-9 && f.value >= 1.5 - 1e-9);
        assert!(f.precision_reached);
        assert!(set_weights(&fam, &f.weights).iter().all(|&w| w >= 1.0 - 1e-12));
    }
}
