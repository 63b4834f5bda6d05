//! The lattice `L_B(∞)` of configurations reachable from one infinite column.
//!
//! An element `(∞, s_2, ..., s_k)` is stored as its tail `(s_2, ..., s_k)`;
//! the infinite column is never materialized. The order compares suffix
//! sums: `s ≥ t` iff every suffix sum of `s` from column 2 on is at most the
//! matching suffix sum of `t`.

use std::fmt;
use std::str::FromStr;

use crate::error::{LatticeError, PartitionError};
use crate::lattice::{LatticeDiagram, DiagramKind, NodeId};
use crate::partition::{move_grain, moves, Partition};
use crate::tree;

/// An element of `L_B(∞)`, identified by the columns after the infinite one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct InfPartition {
    tail: Partition,
}

impl InfPartition {
    pub fn new(tail: Partition) -> Self {
        InfPartition { tail }
    }

    /// `(∞)`, the top element.
    pub fn top() -> Self {
        Self::default()
    }

    pub fn tail(&self) -> &Partition {
        &self.tail
    }

    /// Grains outside the infinite column.
    pub fn tail_weight(&self) -> u32 {
        self.tail.weight()
    }

    /// Suffix sums of the tail, starting at the first tail column, padded
    /// with zeros to `len`.
    fn suffix_sums(&self, len: usize) -> Vec<u64> {
        let mut out = vec![0u64; len + 1];
        for i in (0..len).rev() {
            out[i] = out[i + 1] + u64::from(self.tail.part(i + 1));
        }
        out.truncate(len);
        out
    }
}

impl fmt::Display for InfPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf:{}", self.tail)
    }
}

impl FromStr for InfPartition {
    type Err = PartitionError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let body = text.trim().strip_prefix("inf:").ok_or_else(|| PartitionError::Parse {
            text: text.to_string(),
            reason: "expected prefix \"inf:\"".into(),
        })?;
        Ok(InfPartition::new(body.parse()?))
    }
}

/// `s ≤ t` in `L_B(∞)`.
pub fn inf_leq(s: &InfPartition, t: &InfPartition) -> bool {
    let len = s.tail.len().max(t.tail.len());
    let (a, b) = (s.suffix_sums(len), t.suffix_sums(len));
    a.iter().zip(&b).all(|(x, y)| y <= x)
}

/// Greatest lower bound: suffix sums are the maxima of those of `s` and `t`,
/// computed from the last column backwards.
pub fn inf_meet(s: &InfPartition, t: &InfPartition) -> InfPartition {
    let len = s.tail.len().max(t.tail.len());
    let (a, b) = (s.suffix_sums(len), t.suffix_sums(len));
    let mut parts = vec![0u32; len];
    let mut later = 0u64;
    for i in (0..len).rev() {
        let part = a[i].max(b[i]) - later;
        parts[i] = part as u32;
        later += part;
    }
    InfPartition::new(Partition::new(parts).expect("suffix maxima give a partition"))
}

/// Least upper bound: the meet of all common upper bounds. Every upper bound
/// carries at most as many grains as either argument, so the search is over
/// tails of weight up to the smaller tail weight.
pub fn inf_join(s: &InfPartition, t: &InfPartition) -> InfPartition {
    let bound = s.tail_weight().min(t.tail_weight());
    let mut best: Option<InfPartition> = None;
    for w in 0..=bound {
        for tail in tree::level(w) {
            let u = InfPartition::new(tail);
            if inf_leq(s, &u) && inf_leq(t, &u) {
                best = Some(match best {
                    Some(b) => inf_meet(&b, &u),
                    None => u,
                });
            }
        }
    }
    let sup = best.expect("(∞) bounds everything");
    debug_assert!(inf_leq(s, &sup) && inf_leq(t, &sup));
    sup
}

/// `π`: drop the first column of a nonempty partition.
pub fn pi_embed(s: &Partition) -> Result<InfPartition, PartitionError> {
    if s.is_empty() {
        return Err(PartitionError::Empty("first column to replace"));
    }
    Ok(InfPartition::new(Partition::new(s.parts()[1..].to_vec())?))
}

/// `χ`: put an infinite column in front of `s`.
pub fn chi(s: &Partition) -> InfPartition {
    InfPartition::new(s.clone())
}

pub fn chi_inverse(x: &InfPartition) -> Partition {
    x.tail.clone()
}

/// Transitions out of `x`, labeled by column (the infinite column is 1).
///
/// Rules only look at a column and those to its right, so they are read off
/// a finite stand-in whose first column is high enough to be a cliff that
/// never starts a step.
pub fn inf_transitions(x: &InfPartition) -> Vec<(usize, InfPartition)> {
    let mut padded = vec![x.tail.part(1) + 2];
    padded.extend_from_slice(x.tail.parts());
    moves(&padded)
        .map(|(from, to)| {
            let target = move_grain(&padded, from, to);
            let tail = Partition::new(target[1..].to_vec()).expect("rules keep partitions");
            (from, InfPartition::new(tail))
        })
        .collect()
}

/// Cover edges out of `s` in the union of all `L_B(n)`: its transitions
/// plus the 0-labeled link to `s↓1`.
pub fn union_transitions(s: &Partition) -> Vec<(usize, Partition)> {
    let mut out = vec![(0, s.with_grain(1).expect("first column can always grow"))];
    out.extend(s.transitions().into_iter().map(|t| (t.label, t.target)));
    out
}

/// The diagram of `L_B(≤n)`: all levels up to `n`, each with its own cover
/// edges, plus `s -0-> s↓1` between consecutive levels.
pub fn build_l_leq(n: u32) -> Result<LatticeDiagram, LatticeError> {
    let mut out = LatticeDiagram::empty(DiagramKind::Filter, n);
    let mut level = LatticeDiagram::level_zero();
    let mut previous: Vec<(NodeId, Partition)> = Vec::new();
    for w in 0..=n {
        if w > 0 {
            level.grow()?;
        }
        let mut map = vec![None; level.node_count()];
        let mut current = Vec::with_capacity(level.node_count());
        for id in level.node_ids() {
            let s = level.partition(id);
            let new = out.insert(&s)?.0;
            map[id.index()] = Some(new);
            current.push((new, s));
        }
        for (s, label, t) in level.edges() {
            let (s, t) = (map[s.index()].unwrap(), map[t.index()].unwrap());
            out.add_edge(s, label, t)?;
        }
        for (id, s) in &previous {
            let up = out
                .find(&s.with_grain(1).expect("first column can always grow"))
                .ok_or_else(|| LatticeError::Malformed(format!("{s}↓1 missing")))?;
            out.add_edge(*id, 0, up)?;
        }
        previous = current;
    }
    Ok(out)
}

/// Reflexive-transitive closure of a diagram's edges.
#[derive(Debug, Clone)]
pub struct Reachability {
    below: Vec<Vec<bool>>,
}

impl Reachability {
    /// `below[a][b]` iff `b` is reachable from `a`.
    pub fn new(d: &LatticeDiagram) -> Self {
        let m = d.node_count();
        let mut below = vec![vec![false; m]; m];
        for a in d.node_ids() {
            let row = &mut below[a.index()];
            let mut stack = vec![a];
            row[a.index()] = true;
            while let Some(x) = stack.pop() {
                for e in d.out_edges(x) {
                    if !row[e.target.index()] {
                        row[e.target.index()] = true;
                        stack.push(e.target);
                    }
                }
            }
        }
        Reachability { below }
    }

    pub fn leq(&self, a: NodeId, b: NodeId) -> bool {
        self.below[b.index()][a.index()]
    }

    /// Greatest common lower bound inside the diagram, if there is one.
    pub fn meet(&self, a: NodeId, b: NodeId) -> Option<NodeId> {
        let m = self.below.len();
        let common: Vec<usize> = (0..m)
            .filter(|&x| self.below[a.index()][x] && self.below[b.index()][x])
            .collect();
        common
            .iter()
            .copied()
            .find(|&g| common.iter().all(|&x| self.below[g][x]))
            .map(NodeId::from_index)
    }

    /// Least common upper bound inside the diagram, if there is one.
    pub fn join(&self, a: NodeId, b: NodeId) -> Option<NodeId> {
        let m = self.below.len();
        let common: Vec<usize> = (0..m)
            .filter(|&x| self.below[x][a.index()] && self.below[x][b.index()])
            .collect();
        common
            .iter()
            .copied()
            .find(|&g| common.iter().all(|&x| self.below[x][g]))
            .map(NodeId::from_index)
    }
}
