//! Brute-force reference implementations.
//!
//! Nothing here goes through the transition rules, the diagram store or the
//! counting recurrence: orders come straight from prefix sums and covers from
//! a triple scan. Everything is deliberately quadratic or cubic in p(n).

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{OracleError, PartitionError};
use crate::partition::Partition;

/// All partitions of `n`, each once, in lexicographically decreasing order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).expect("generated nonincreasing"));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            go(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn prefix_sums(s: &Partition, len: usize) -> Vec<u64> {
    let mut acc = 0u64;
    (0..len)
        .map(|i| {
            acc += u64::from(s.parts().get(i).copied().unwrap_or(0));
            acc
        })
        .collect()
}

/// `s ≤ t` in dominance order, straight from the definition.
pub fn dominates(t: &Partition, s: &Partition) -> bool {
    let len = s.len().max(t.len());
    prefix_sums(s, len)
        .iter()
        .zip(prefix_sums(t, len))
        .all(|(a, b)| *a <= b)
}

/// The full dominance relation on partitions of one weight.
#[derive(Debug, Clone)]
pub struct OrderRelation {
    pub weight: u32,
    pub elements: Vec<Partition>,
    leq: Vec<bool>,
}

impl OrderRelation {
    /// Builds the relation and checks it is a partial order.
    pub fn new(n: u32) -> Result<Self, OracleError> {
        let elements = enumerate_partitions(n);
        let m = elements.len();
        let mut leq = vec![false; m * m];
        for (i, s) in elements.iter().enumerate() {
            for (j, t) in elements.iter().enumerate() {
                leq[i * m + j] = dominates(t, s);
            }
        }
        let rel = OrderRelation {
            weight: n,
            elements,
            leq,
        };
        rel.check_partial_order()?;
        Ok(rel)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `elements[i] ≤ elements[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn index_of(&self, s: &Partition) -> Option<usize> {
        self.elements.iter().position(|e| e == s)
    }

    fn check_partial_order(&self) -> Result<(), OracleError> {
        let m = self.len();
        let fail = |detail: String| OracleError::NotPartialOrder {
            n: self.weight,
            detail,
        };
        for i in 0..m {
            if !self.leq(i, i) {
                return Err(fail(format!("{} not reflexive", self.elements[i])));
            }
            for j in 0..m {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(fail(format!(
                        "{} and {} not antisymmetric",
                        self.elements[i], self.elements[j]
                    )));
                }
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..m {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(fail(format!(
                            "{} ≤ {} ≤ {} not transitive",
                            self.elements[i], self.elements[j], self.elements[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Pairs `(s, t)` where `s` covers `t`.
    pub fn covers(&self) -> BTreeSet<(Partition, Partition)> {
        let m = self.len();
        let mut out = BTreeSet::new();
        for s in 0..m {
            for t in 0..m {
                if s == t || !self.leq(t, s) {
                    continue;
                }
                let between = (0..m).any(|u| u != s && u != t && self.leq(u, s) && self.leq(t, u));
                if !between {
                    out.insert((self.elements[s].clone(), self.elements[t].clone()));
                }
            }
        }
        out
    }

    /// Index of the unique maximal common lower bound of `i` and `j`.
    pub fn meet(&self, i: usize, j: usize) -> Result<usize, OracleError> {
        let bounds: Vec<usize> = (0..self.len())
            .filter(|&u| self.leq(u, i) && self.leq(u, j))
            .collect();
        let maximal: Vec<usize> = bounds
            .iter()
            .copied()
            .filter(|&u| !bounds.iter().any(|&v| v != u && self.leq(u, v)))
            .collect();
        self.unique("meet", i, j, maximal)
    }

    /// Index of the unique minimal common upper bound of `i` and `j`.
    pub fn join(&self, i: usize, j: usize) -> Result<usize, OracleError> {
        let bounds: Vec<usize> = (0..self.len())
            .filter(|&u| self.leq(i, u) && self.leq(j, u))
            .collect();
        let minimal: Vec<usize> = bounds
            .iter()
            .copied()
            .filter(|&u| !bounds.iter().any(|&v| v != u && self.leq(v, u)))
            .collect();
        self.unique("join", i, j, minimal)
    }

    fn unique(
        &self,
        kind: &'static str,
        i: usize,
        j: usize,
        found: Vec<usize>,
    ) -> Result<usize, OracleError> {
        match found.as_slice() {
            [one] => Ok(*one),
            _ => Err(OracleError::NoUniqueExtremum {
                kind,
                left: self.elements[i].to_string(),
                right: self.elements[j].to_string(),
                candidates: found.iter().map(|&u| self.elements[u].to_string()).collect(),
            }),
        }
    }
}

/// Cover pairs `(s, t)` of the dominance order on partitions of `n`.
pub fn covers_bruteforce(n: u32) -> Result<BTreeSet<(Partition, Partition)>, OracleError> {
    Ok(OrderRelation::new(n)?.covers())
}

fn same_weight_pair(s: &Partition, t: &Partition) -> Result<(OrderRelation, usize, usize), OracleError> {
    if s.weight() != t.weight() {
        return Err(PartitionError::WeightMismatch {
            left: s.weight(),
            right: t.weight(),
        }
        .into());
    }
    let rel = OrderRelation::new(s.weight())?;
    let i = rel.index_of(s).expect("enumeration is complete");
    let j = rel.index_of(t).expect("enumeration is complete");
    Ok((rel, i, j))
}

/// Greatest common lower bound found by scanning every partition of the weight.
pub fn meet_bruteforce(s: &Partition, t: &Partition) -> Result<Partition, OracleError> {
    let (rel, i, j) = same_weight_pair(s, t)?;
    Ok(rel.elements[rel.meet(i, j)?].clone())
}

/// Least common upper bound found by scanning every partition of the weight.
pub fn join_bruteforce(s: &Partition, t: &Partition) -> Result<Partition, OracleError> {
    let (rel, i, j) = same_weight_pair(s, t)?;
    Ok(rel.elements[rel.join(i, j)?].clone())
}

/// p(n) by the bounded-largest-part recurrence over a coin table.
pub fn partition_count_dp(n: u32) -> BigUint {
    let n = n as usize;
    let mut table = vec![BigUint::from(0u32); n + 1];
    table[0] = BigUint::from(1u32);
    for part in 1..=n {
        for total in part..=n {
            let add = table[total - part].clone();
            table[total] += add;
        }
    }
    table.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(0), vec![p(&[])]);
        assert_eq!(enumerate_partitions(8).len(), 22);
    }

    #[test]
    fn enumeration_matches_dp() {
        for n in 0..=40 {
            let dp = partition_count_dp(n);
            if n <= 30 {
                assert_eq!(BigUint::from(enumerate_partitions(n).len()), dp, "n = {n}");
            }
        }
        assert_eq!(partition_count_dp(7), BigUint::from(15u32));
        assert_eq!(partition_count_dp(0), BigUint::from(1u32));
        assert_eq!(partition_count_dp(20), BigUint::from(627u32));
        assert_eq!(partition_count_dp(100).to_string(), "190569292");
    }

    #[test]
    fn small_covers() {
        let c3 = covers_bruteforce(3).unwrap();
        let want: BTreeSet<_> = [(p(&[3]), p(&[2, 1])), (p(&[2, 1]), p(&[1, 1, 1]))].into();
        assert_eq!(c3, want);
        assert!(covers_bruteforce(1).unwrap().is_empty());
        let c6 = covers_bruteforce(6).unwrap();
        assert!(c6.contains(&(p(&[3, 1, 1, 1]), p(&[2, 2, 1, 1]))));
        assert!(!c6.contains(&(p(&[3, 1, 1, 1]), p(&[2, 2, 2]))));
    }

    #[test]
    fn meet_and_join_scan() {
        let a = p(&[3, 1, 1, 1]);
        let b = p(&[2, 2, 2]);
        assert_eq!(meet_bruteforce(&a, &b).unwrap(), p(&[2, 2, 1, 1]));
        assert_eq!(join_bruteforce(&a, &b).unwrap(), p(&[3, 2, 1]));
        assert_eq!(meet_bruteforce(&a, &a).unwrap(), a);
        assert!(meet_bruteforce(&a, &p(&[5])).is_err());
    }

    #[test]
    fn every_pair_has_unique_bounds() {
        for n in 0..=10 {
            let rel = OrderRelation::new(n).unwrap();
            for i in 0..rel.len() {
                for j in 0..rel.len() {
                    rel.meet(i, j).unwrap();
                    rel.join(i, j).unwrap();
                }
            }
        }
    }
}
