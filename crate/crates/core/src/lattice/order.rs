//! Meet and join in `L_B(n)` through prefix-sum profiles.

use crate::error::PartitionError;
use crate::partition::{check_weights, Partition};

fn profile(s: &Partition, len: usize) -> Vec<u64> {
    let mut acc = 0;
    let mut out = Vec::with_capacity(len + 1);
    out.push(0);
    for j in 1..=len {
        acc += u64::from(s.part(j));
        out.push(acc);
    }
    out
}

fn from_profile(profile: &[u64]) -> Partition {
    let parts: Vec<u32> = profile
        .windows(2)
        .map(|w| (w[1] - w[0]) as u32)
        .collect();
    Partition::new(parts).expect("profile is concave")
}

/// Greatest lower bound: the partition whose prefix sums are the minima of
/// those of `s` and `t`.
pub fn meet(s: &Partition, t: &Partition) -> Result<Partition, PartitionError> {
    check_weights(s, t)?;
    let len = s.len().max(t.len());
    let (a, b) = (profile(s, len), profile(t, len));
    let low: Vec<u64> = a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect();
    Ok(from_profile(&low))
}

/// Least upper bound.
///
/// Starts from the prefix-sum maxima and raises the profile until it is
/// concave: each point is lifted to the ceiling of the mean of its
/// neighbours. A concave integer profile above the maxima stays above every
/// lifted value, so the fixpoint is the smallest one.
pub fn join(s: &Partition, t: &Partition) -> Result<Partition, PartitionError> {
    check_weights(s, t)?;
    let len = s.len().max(t.len());
    let (a, b) = (profile(s, len), profile(t, len));
    let mut high: Vec<u64> = a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for j in 1..len {
            let floor = (high[j - 1] + high[j + 1]).div_ceil(2);
            if high[j] < floor {
                high[j] = floor;
                changed = true;
            }
        }
    }
    Ok(from_profile(&high))
}
