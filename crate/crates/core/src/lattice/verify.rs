use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::infinite::{chi, inf_transitions, union_transitions, InfPartition};
use crate::lattice::build::build_naive;
use crate::lattice::diagram::{DiagramKind, LatticeDiagram};
use crate::lattice::format::to_edge_list;
use crate::lattice::order::{join, meet};
use crate::oracle::{partition_count_dp, OrderRelation};
use crate::partition::Partition;
use crate::tree::{self, CountTable};

/// Plateau-length convention used by the shape tests and the rules.
pub const LENGTH_CONVENTION: &str =
    "plateau/step length = number of equal-height columns; a slip from column i lands on column i+length";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of a batch of named checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}", c.name)?;
            } else {
                writeln!(f, "{tag} {} ({})", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

fn first_difference<T: Ord + Clone + fmt::Debug>(got: &BTreeSet<T>, want: &BTreeSet<T>) -> String {
    if let Some(x) = got.difference(want).next() {
        return format!("unexpected {x:?}");
    }
    if let Some(x) = want.difference(got).next() {
        return format!("missing {x:?}");
    }
    String::new()
}

/// Checks a level diagram against the brute-force dominance order.
///
/// The oracle is cubic in p(n); callers should keep `n` small.
pub fn verify_lattice(d: &LatticeDiagram) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = d.bound();
    let tag = |s: &str| format!("L_B({n}) {s}");
    if d.kind() != DiagramKind::Level {
        report.record(tag("is a single level"), false, "filter diagram");
        return report;
    }
    let rel = match OrderRelation::new(n) {
        Ok(rel) => rel,
        Err(e) => {
            report.record(tag("oracle order"), false, e.to_string());
            return report;
        }
    };

    let nodes: BTreeSet<Partition> = d.sorted_partitions().into_iter().collect();
    let want: BTreeSet<Partition> = rel.elements.iter().cloned().collect();
    report.record(
        tag("node count"),
        d.node_count() == rel.len() && nodes.len() == rel.len(),
        format!("{} nodes, p({n}) = {}", d.node_count(), rel.len()),
    );
    report.record(tag("node set"), nodes == want, first_difference(&nodes, &want));

    let sources: Vec<Partition> = d.sources().into_iter().map(|id| d.partition(id)).collect();
    let sinks: Vec<Partition> = d.sinks().into_iter().map(|id| d.partition(id)).collect();
    report.record(
        tag("unique top and bottom"),
        sources == [Partition::single(n)] && sinks == [Partition::ones(n as usize)],
        format!(
            "top {:?}, bottom {:?}",
            sources.iter().map(ToString::to_string).collect::<Vec<_>>(),
            sinks.iter().map(ToString::to_string).collect::<Vec<_>>()
        ),
    );

    let mut labels: BTreeMap<(Partition, Partition), BTreeSet<u32>> = BTreeMap::new();
    for (s, l, t) in d.sorted_edges() {
        labels.entry((s, t)).or_default().insert(l);
    }
    let doubled = labels.iter().find(|(_, ls)| ls.len() > 1);
    report.record(
        tag("one label per edge"),
        doubled.is_none(),
        doubled.map(|(k, ls)| format!("{} -> {} has {ls:?}", k.0, k.1)).unwrap_or_default(),
    );

    let edges: BTreeSet<(Partition, usize, Partition)> = d
        .sorted_edges()
        .into_iter()
        .map(|(s, l, t)| (s, l as usize, t))
        .collect();
    let rules: BTreeSet<(Partition, usize, Partition)> = nodes
        .iter()
        .flat_map(|s| s.transitions())
        .map(|t| (t.source, t.label, t.target))
        .collect();
    report.record(tag("edges are the transitions"), edges == rules, first_difference(&edges, &rules));

    let unlabeled: BTreeSet<(Partition, Partition)> =
        edges.iter().map(|(s, _, t)| (s.clone(), t.clone())).collect();
    let covers = rel.covers();
    report.record(
        tag("cover exactness vs oracle"),
        unlabeled == covers,
        first_difference(&unlabeled, &covers),
    );

    let mut bad = None;
    'pairs: for i in 0..rel.len() {
        for j in i..rel.len() {
            let (s, t) = (&rel.elements[i], &rel.elements[j]);
            let m = meet(s, t).ok();
            let jn = join(s, t).ok();
            let want_m = rel.meet(i, j).ok().map(|k| rel.elements[k].clone());
            let want_j = rel.join(i, j).ok().map(|k| rel.elements[k].clone());
            let inside = m.as_ref().is_some_and(|x| d.contains(x)) && jn.as_ref().is_some_and(|x| d.contains(x));
            if m != want_m || jn != want_j || !inside {
                bad = Some(format!("{s} and {t}"));
                break 'pairs;
            }
        }
    }
    report.record(tag("meet/join vs oracle"), bad.is_none(), bad.unwrap_or_default());
    report
}

/// Every cross-module check at each weight up to `n`: the level diagram
/// against the oracle, both constructions against each other, the tree
/// level, the path count and the label shift into `L_B(∞)`.
pub fn verify_up_to(n: u32) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut counts = CountTable::new();
    let mut grown = LatticeDiagram::level_zero();
    for m in 0..=n {
        if m > 0 {
            if let Err(e) = grown.grow() {
                report.record(format!("L_B({m}) incremental step"), false, e.to_string());
                return report;
            }
        }
        report.extend(verify_lattice(&grown));

        let naive = build_naive(m);
        report.record(
            format!("L_B({m}) incremental = naive"),
            to_edge_list(&naive) == to_edge_list(&grown),
            "",
        );

        let level: BTreeSet<Partition> = tree::level(m).into_iter().collect();
        let nodes: BTreeSet<Partition> = naive.sorted_partitions().into_iter().collect();
        report.record(format!("tree level {m} = L_B({m})"), level == nodes, first_difference(&level, &nodes));

        let c = counts.partition_count(u64::from(m));
        let p = partition_count_dp(m);
        report.record(format!("c({m},{m}) = p({m})"), c == p, format!("{c} vs {p}"));

        let bad = nodes.iter().find(|s| {
            let shifted: BTreeSet<(usize, InfPartition)> = union_transitions(s)
                .into_iter()
                .map(|(i, t)| (i + 1, chi(&t)))
                .collect();
            let direct: BTreeSet<(usize, InfPartition)> = inf_transitions(&chi(s)).into_iter().collect();
            shifted != direct
        });
        report.record(
            format!("L_B({m}) label shift into L_B(inf)"),
            bad.is_none(),
            bad.map(ToString::to_string).unwrap_or_default(),
        );
    }
    report
}
