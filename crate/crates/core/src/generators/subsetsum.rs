use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A SubsetSum instance: is there a sub-multiset of `weights` summing to
/// exactly `target`?
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetSumInstance {
    pub weights: Vec<u64>,
    pub target: u64,
}

fn ceil_log2(x: u128) -> u32 {
    if x <= 1 {
        0
    } else {
        128 - (x - 1).leading_zeros()
    }
}

impl SubsetSumInstance {
    pub fn new(weights: Vec<u64>, target: u64) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidInstance("weights must be positive".into()));
        }
        Ok(SubsetSumInstance { weights, target })
    }

    pub fn total(&self) -> u128 {
        self.weights.iter().map(|&w| w as u128).sum()
    }

    /// `Some(reason)` if the instance lacks one of the properties the
    /// hardness reductions rely on: `T = 2^k` with `k >= 3`, every weight in
    /// `[2, T/2)`, and every weight at distance at least 2 from each power
    /// of two.
    pub fn normal_form_violation(&self) -> Option<String> {
        let t = self.target;
        if !t.is_power_of_two() || t < 8 {
            return Some(format!("target {t} is not a power of two >= 8"));
        }
        for &w in &self.weights {
            if w < 2 || w >= t / 2 {
                return Some(format!("weight {w} outside [2, {})", t / 2));
            }
            if let Some(p) = (0..64).map(|k| 1u64 << k).find(|&p| p.abs_diff(w) < 2) {
                return Some(format!("weight {w} is within 1 of the power of two {p}"));
            }
        }
        None
    }

    pub fn is_normal_form(&self) -> bool {
        self.normal_form_violation().is_none()
    }
}

/// Equivalent instance with the structural properties above: scale by 6,
/// pick `T'' = 2^σ` with `σ = ⌈log₂(T' + ΣW')⌉ + 2` and add the two weights
/// `⌊(T''−T')/2⌋` and `⌈(T''−T')/2⌉`, which every solution must use.
pub fn normalize_subsetsum(weights: &[u64], target: u64) -> Result<SubsetSumInstance> {
    if weights.contains(&0) {
        return Err(Error::Precondition("weights must be positive".into()));
    }
    let total: u128 = weights.iter().map(|&w| w as u128).sum();
    if target == 0 || target as u128 > total {
        return Err(Error::Precondition(format!(
            "target must lie in [1, {total}], got {target}"
        )));
    }
    let t1 = 6 * target as u128;
    let sigma = ceil_log2(t1 + 6 * total) + 2;
    if sigma >= 64 {
        return Err(Error::Budget {
            what: "the normalized target",
            unit: "bits",
            required: sigma as u128 + 1,
            limit: 64,
        });
    }
    let t2 = 1u128 << sigma;
    let gap = t2 - t1;
    let mut out: Vec<u64> = weights.iter().map(|&w| 6 * w).collect();
    out.push((gap / 2) as u64);
    out.push(gap.div_ceil(2) as u64);
    Ok(SubsetSumInstance {
        weights: out,
        target: t2 as u64,
    })
}

/// Reachable-sums dynamic program. Returns the indices of a solving subset,
/// or `None` when the target is unreachable.
pub fn subsetsum_dp(s: &SubsetSumInstance, memory_budget: u128) -> Result<Option<Vec<usize>>> {
    let t = s.target as u128;
    if t > s.total() {
        return Ok(None);
    }
    let cells = t + 1;
    let bytes = cells + (s.weights.len() as u128) * cells.div_ceil(8);
    if bytes > memory_budget {
        return Err(Error::Budget {
            what: "the subset-sum table",
            unit: "bytes",
            required: bytes,
            limit: memory_budget,
        });
    }
    let cells = cells as usize;
    let mut reach = vec![false; cells];
    reach[0] = true;
    // bit c of row i: sum c first became reachable when weight i was added
    let mut first_by: Vec<Vec<u64>> = Vec::with_capacity(s.weights.len());
    for &w in &s.weights {
        let mut row = vec![0u64; cells.div_ceil(64)];
        let w = w as usize;
        if w < cells {
            for c in (w..cells).rev() {
                if !reach[c] && reach[c - w] {
                    reach[c] = true;
                    row[c / 64] |= 1 << (c % 64);
                }
            }
        }
        first_by.push(row);
    }
    if !reach[cells - 1] {
        return Ok(None);
    }
    let mut c = cells - 1;
    let mut witness = Vec::new();
    for i in (0..s.weights.len()).rev() {
        if c > 0 && first_by[i][c / 64] >> (c % 64) & 1 == 1 {
            witness.push(i);
            c -= s.weights[i] as usize;
        }
    }
    debug_assert_eq!(c, 0);
    witness.reverse();
    Ok(Some(witness))
}
