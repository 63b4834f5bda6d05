//! Construction of `L_B(n)`: by reachability from `(n)`, and level by level
//! from `L_B(n)` to `L_B(n+1)`.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::error::LatticeError;
use crate::lattice::diagram::{DiagramKind, LatticeDiagram, NodeId};
use crate::partition::{move_grain, moves, shape_at, ColumnShape, Partition};

/// Closure of the transitions from `(n)`.
pub fn build_naive(n: u32) -> LatticeDiagram {
    let mut d = LatticeDiagram::empty(DiagramKind::Level, n);
    let top = d.insert_tail(n, Vec::new()).0;
    let mut queue = VecDeque::from([top]);
    let mut parts = Vec::new();
    while let Some(id) = queue.pop_front() {
        d.parts_into(id, &mut parts);
        let found: Vec<(usize, Vec<u32>)> = moves(&parts)
            .map(|(from, to)| (from, move_grain(&parts, from, to)))
            .collect();
        for (label, target) in found {
            let (t, fresh) = d.insert_tail(n, target[1..].to_vec());
            if fresh {
                queue.push_back(t);
            }
            d.add_edge(id, label as u32, t)
                .expect("transitions from one partition have distinct targets");
        }
    }
    d
}

/// The partitions of `n` whose first column is a slippery step (`S`), a
/// non-slippery step (`T`), or a slippery plateau of each length (`U_l`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrontierSets {
    pub slippery_steps: Vec<NodeId>,
    pub non_slippery_steps: Vec<NodeId>,
    pub plateaus: BTreeMap<usize, Vec<NodeId>>,
}

impl FrontierSets {
    pub fn len(&self) -> usize {
        self.slippery_steps.len()
            + self.non_slippery_steps.len()
            + self.plateaus.values().map(Vec::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn push(&mut self, id: NodeId, class: FrontierClass) {
        match class {
            FrontierClass::SlipperyStep => self.slippery_steps.push(id),
            FrontierClass::NonSlipperyStep => self.non_slippery_steps.push(id),
            FrontierClass::Plateau(len) => self.plateaus.entry(len).or_default().push(id),
        }
    }

    fn sort(&mut self) {
        self.slippery_steps.sort_unstable();
        self.non_slippery_steps.sort_unstable();
        for v in self.plateaus.values_mut() {
            v.sort_unstable();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FrontierClass {
    SlipperyStep,
    NonSlipperyStep,
    Plateau(usize),
}

fn classify(parts: &[u32]) -> Option<FrontierClass> {
    match shape_at(parts, 1) {
        ColumnShape::SlipperyStep(_) => Some(FrontierClass::SlipperyStep),
        ColumnShape::NonSlipperyStep(_) => Some(FrontierClass::NonSlipperyStep),
        ColumnShape::SlipperyPlateau(len) => Some(FrontierClass::Plateau(len)),
        _ => None,
    }
}

fn greedy_fill(out: &mut Vec<u32>, mut rest: u32, max: u32) -> bool {
    if rest > 0 && max == 0 {
        return false;
    }
    while rest > 0 {
        let x = rest.min(max);
        out.push(x);
        rest -= x;
    }
    true
}

/// Greatest elements of the frontier region of `L_B(n)`: for every `p`,
/// `(p+1, p, ..., p, r)` for the steps at 1, and for every plateau length
/// `l`, `(p, ..., p, p-1, ...)` with `l` leading `p`s and the rest filled
/// greedily with parts at most `p-1`.
pub(crate) fn seed_partitions(n: u32) -> Vec<Vec<u32>> {
    let mut seeds = Vec::new();
    for p in 1..=n {
        if let Some(rest) = n.checked_sub(2 * p + 1) {
            let mut s = vec![p + 1, p];
            greedy_fill(&mut s, rest, p);
            seeds.push(s);
        }
        for len in 1..=n / p {
            let Some(rest) = n.checked_sub(len * p + (p - 1)) else {
                break;
            };
            let mut s = vec![p; len as usize];
            if p > 1 {
                s.push(p - 1);
            }
            if greedy_fill(&mut s, rest, p - 1) {
                seeds.push(s);
            }
        }
    }
    seeds
}

fn seed_handles(d: &LatticeDiagram) -> Result<Vec<NodeId>, LatticeError> {
    seed_partitions(d.bound())
        .into_iter()
        .map(|s| {
            d.find_tail(d.bound(), &s[1..]).ok_or_else(|| {
                LatticeError::Malformed(format!(
                    "frontier seed {} missing",
                    Partition::from_canonical(s)
                ))
            })
        })
        .collect()
}

/// `S`, `T` and the `U_l` of a complete `L_B(n)` diagram.
///
/// With retained seed handles the sets are found by a search that starts at
/// the seeds and never leaves the frontier region; otherwise every node is
/// classified.
pub fn find_frontier_sets(d: &LatticeDiagram) -> Result<FrontierSets, LatticeError> {
    if d.kind() != DiagramKind::Level {
        return Err(LatticeError::Malformed(
            "frontier sets are defined on a single level".into(),
        ));
    }
    match d.frontier_handles() {
        Some(seeds) => Ok(frontier_from_seeds(d, seeds)),
        None => Ok(frontier_by_scan(d)),
    }
}

pub(crate) fn frontier_by_scan(d: &LatticeDiagram) -> FrontierSets {
    let mut sets = FrontierSets::default();
    let mut parts = Vec::new();
    for id in d.node_ids() {
        d.parts_into(id, &mut parts);
        if let Some(class) = classify(&parts) {
            sets.push(id, class);
        }
    }
    sets.sort();
    sets
}

pub(crate) fn frontier_from_seeds(d: &LatticeDiagram, seeds: &[NodeId]) -> FrontierSets {
    let mut sets = FrontierSets::default();
    let mut seen: HashSet<NodeId> = HashSet::with_capacity(seeds.len() * 4);
    let mut stack: Vec<(NodeId, FrontierClass)> = Vec::new();
    let mut parts = Vec::new();
    for &id in seeds {
        d.parts_into(id, &mut parts);
        if let Some(class) = classify(&parts) {
            if seen.insert(id) {
                stack.push((id, class));
            }
        }
    }
    while let Some((id, class)) = stack.pop() {
        sets.push(id, class);
        for e in d.out_edges(id) {
            if seen.contains(&e.target) {
                continue;
            }
            d.parts_into(e.target, &mut parts);
            if let Some(class) = classify(&parts) {
                seen.insert(e.target);
                stack.push((e.target, class));
            }
        }
    }
    sets.sort();
    sets
}

/// Counts for one `L_B(n) → L_B(n+1)` step.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StepStats {
    pub added_nodes: usize,
    pub inserted_edges: usize,
    pub removed_edges: usize,
}

impl StepStats {
    /// Added elements plus inserted transitions.
    pub fn added_items(&self) -> usize {
        self.added_nodes + self.inserted_edges
    }
}

struct Addition {
    source: NodeId,
    column: usize,
    /// Edges out of the new element fixed by the construction: label,
    /// an element `t` of `L_B(n)` and the column `c` with target `t↓c`.
    fixed: Vec<(u32, NodeId, usize)>,
    cut_first_column: bool,
}

fn raised_tail(tail: &[u32], column: usize) -> Vec<u32> {
    debug_assert!(column >= 2);
    let mut out = tail.to_vec();
    let i = column - 2;
    if i == out.len() {
        out.push(1);
    } else {
        out[i] += 1;
    }
    out
}

impl LatticeDiagram {
    /// `L_B(0)`, with its (empty) seed list retained.
    pub fn level_zero() -> Self {
        let mut d = LatticeDiagram::empty(DiagramKind::Level, 0);
        d.insert_tail(0, Vec::new());
        d.frontier = Some(Vec::new());
        d
    }

    /// Turns this `L_B(n)` diagram into `L_B(n+1)` in place.
    ///
    /// Every node gets one grain on its first column, then the elements
    /// `S↓2`, `T↓2` and `U_l↓(l+1)` are added with their edges, and the edge
    /// `s↓1 -1-> t↓1` is replaced by `s↓1 -1-> s↓2 -2-> t↓1` for `s` in `S`.
    pub fn grow(&mut self) -> Result<StepStats, LatticeError> {
        if self.kind() != DiagramKind::Level {
            return Err(LatticeError::Malformed(
                "incremental construction needs a level diagram".into(),
            ));
        }
        let n = self.bound();
        if self.top().is_none() {
            return Err(LatticeError::Malformed(format!("top element ({n}) missing")));
        }
        let sets = find_frontier_sets(self)?;
        let plan = self.plan_additions(&sets)?;
        let edges_before = self.edge_count();

        self.shift_first_column();
        let mut stats = StepStats::default();

        let mut added = Vec::with_capacity(plan.len());
        for a in &plan {
            let tail = raised_tail(self.tail(a.source), a.column);
            let (id, fresh) = self.insert_tail(n + 1, tail);
            if !fresh {
                return Err(LatticeError::Malformed(format!(
                    "{} is added twice",
                    self.partition(id)
                )));
            }
            added.push(id);
        }
        stats.added_nodes = added.len();

        for (a, &new) in plan.iter().zip(&added) {
            if a.cut_first_column {
                self.remove_edge(a.source, 1)
                    .ok_or_else(|| LatticeError::Malformed("missing edge out of column 1".into()))?;
                stats.removed_edges += 1;
            }
            self.add_edge(a.source, 1, new)?;
            for &(label, t, column) in &a.fixed {
                let target = if column == 1 {
                    Some(t)
                } else {
                    self.find_tail(n + 1, &raised_tail(self.tail(t), column))
                };
                let target = target.ok_or_else(|| {
                    LatticeError::Malformed(format!("target of {} -{label}-> missing", self.partition(new)))
                })?;
                self.add_edge(new, label, target)?;
            }
        }

        // Remaining edges out of the added elements follow from the rules.
        let mut parts = Vec::new();
        for &new in &added {
            self.parts_into(new, &mut parts);
            let found: Vec<(usize, Vec<u32>)> = moves(&parts)
                .map(|(from, to)| (from, move_grain(&parts, from, to)))
                .collect();
            for (label, target) in found {
                let t = self.find_tail(n + 1, &target[1..]).ok_or_else(|| {
                    LatticeError::Malformed(format!(
                        "{} is reachable but not constructed",
                        Partition::from_canonical(target.clone())
                    ))
                })?;
                self.add_edge(new, label as u32, t)?;
            }
        }

        stats.inserted_edges = self.edge_count() + stats.removed_edges - edges_before;
        self.frontier = Some(seed_handles(self)?);
        Ok(stats)
    }

    fn plan_additions(&self, sets: &FrontierSets) -> Result<Vec<Addition>, LatticeError> {
        let missing = |id: NodeId, label: usize| {
            LatticeError::Malformed(format!(
                "{} lacks its transition from column {label}",
                self.partition(id)
            ))
        };
        let mut plan = Vec::with_capacity(sets.len());
        for &s in &sets.slippery_steps {
            let t = self.edge_target(s, 1).ok_or_else(|| missing(s, 1))?;
            plan.push(Addition {
                source: s,
                column: 2,
                fixed: vec![(2, t, 1)],
                cut_first_column: true,
            });
        }
        for &s in &sets.non_slippery_steps {
            plan.push(Addition {
                source: s,
                column: 2,
                fixed: Vec::new(),
                cut_first_column: false,
            });
        }
        let mut parts = Vec::new();
        for (&len, members) in &sets.plateaus {
            for &s in members {
                self.parts_into(s, &mut parts);
                let mut fixed = Vec::new();
                if shape_at(&parts, len + 1) == ColumnShape::Cliff {
                    let t = self
                        .edge_target(s, len as u32 + 1)
                        .ok_or_else(|| missing(s, len + 1))?;
                    fixed.push((len as u32 + 1, t, len + 1));
                }
                if matches!(shape_at(&parts, len), ColumnShape::SlipperyStep(_)) {
                    let t = self.edge_target(s, len as u32).ok_or_else(|| missing(s, len))?;
                    fixed.push((len as u32 + 1, t, len));
                }
                plan.push(Addition {
                    source: s,
                    column: len + 1,
                    fixed,
                    cut_first_column: false,
                });
            }
        }
        Ok(plan)
    }
}

/// `L_B(n+1)` from `L_B(n)`.
pub fn build_incremental(mut d: LatticeDiagram) -> Result<LatticeDiagram, LatticeError> {
    d.grow()?;
    Ok(d)
}

/// `L_B(n)` by iterating the incremental step from `L_B(0)`.
pub fn build_incremental_to(n: u32) -> LatticeDiagram {
    let mut d = LatticeDiagram::level_zero();
    for _ in 0..n {
        d.grow()
            .expect("incremental step on a diagram it built itself");
    }
    d
}
