//! The binary tree on all partitions whose level `n` is `L_B(n)`.
//!
//! Every partition `s` has a left son `s↓1` and, when it starts with a
//! slippery plateau of length `l`, a right son `s↓(l+1)`. Each partition has
//! exactly one parent, so the levels are disjoint and cover every partition.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{PartitionError, TreeError};
use crate::partition::{ColumnShape, Partition};

/// Sons of `s`, labeled by the column that gained a grain.
pub fn children(s: &Partition) -> Vec<(usize, Partition)> {
    let mut out = vec![(1, s.with_grain(1).expect("first column can always grow"))];
    if let ColumnShape::SlipperyPlateau(l) = s.leading_plateau() {
        if let Some(right) = s.with_grain(l + 1) {
            out.push((l + 1, right));
        }
    }
    out
}

/// The unique parent of a nonempty `s`, with the label of the edge into `s`.
pub fn parent(s: &Partition) -> Result<(usize, Partition), PartitionError> {
    if s.is_empty() {
        return Err(PartitionError::Empty("parent"));
    }
    let column = if s.part(1) > s.part(2) {
        1
    } else {
        s.parts().iter().take_while(|&&x| x == s.part(1)).count()
    };
    let up = s.without_grain(column).expect("the parent column can lose a grain");
    Ok((column, up))
}

/// Depth `n` of the tree: the partitions of `n`, in discovery order.
pub fn level(n: u32) -> Vec<Partition> {
    let mut current = vec![Partition::empty()];
    for _ in 0..n {
        current = current.iter().flat_map(|s| children(s).into_iter().map(|(_, c)| c)).collect();
    }
    debug_assert_eq!(
        current.iter().collect::<BTreeSet<_>>().len(),
        current.len(),
        "a tree level repeats a node"
    );
    current
}

/// Whether `s` opens with exactly `k` equal columns followed by a drop.
/// Every partition roots an `X_0`.
pub fn is_xk_root(s: &Partition, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let i = s.part(1);
    i >= 1 && (1..=k).all(|j| s.part(j) == i) && s.part(k + 1) < i
}

/// The `X_k` subtree under `root`: the root and everything below its left son.
/// Nodes heavier than `max_weight` are cut off.
pub fn xk_subtree(root: &Partition, max_weight: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if root.weight() > max_weight {
        return out;
    }
    out.push(root.clone());
    let mut stack = vec![root.with_grain(1).expect("first column can always grow")];
    while let Some(s) = stack.pop() {
        if s.weight() > max_weight {
            continue;
        }
        stack.extend(children(&s).into_iter().map(|(_, c)| c));
        out.push(s);
    }
    out
}

/// The chain that opens an `X_k` subtree: the left son `c_2 = s↓1`, then
/// `c_{j+1} = c_j↓j`. Each `c_j` roots an `X_{j-1}` and `c_{k+1}` an `X_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XkDecomposition {
    pub root: Partition,
    pub k: usize,
    /// `c_2, ..., c_{k+1}` with the label of the edge reaching each.
    pub chain: Vec<(usize, Partition)>,
    /// Nodes of the subtree up to the depth bound.
    pub nodes: usize,
}

fn chain_of(root: &Partition, k: usize) -> Vec<(usize, Partition)> {
    let mut chain = Vec::with_capacity(k);
    let mut c = root.with_grain(1).expect("first column can always grow");
    chain.push((1, c.clone()));
    for j in 2..=k {
        c = c.with_grain(j).expect("chain columns stay nonincreasing");
        chain.push((j, c.clone()));
    }
    chain
}

/// Nodes predicted by unfolding the chain recursively, with repeats kept so
/// overlaps show up as a count mismatch.
fn unfold(root: &Partition, k: usize, max_weight: u32, out: &mut Vec<Partition>) {
    let mut stack = vec![(root.clone(), k)];
    while let Some((s, k)) = stack.pop() {
        if s.weight() > max_weight {
            continue;
        }
        out.push(s.clone());
        if k == 0 {
            continue;
        }
        for (j, (_, c)) in chain_of(&s, k).into_iter().enumerate() {
            stack.push((c, j + 1));
        }
    }
}

/// Checks that the `X_k` subtree under `root` is the chain `c_2, ..., c_{k+1}`
/// with an `X_{j-1}` hanging from each `c_j`, down to absolute depth
/// `max_weight`.
pub fn xk_chain_decomposition(
    root: &Partition,
    k: usize,
    max_weight: u32,
) -> Result<XkDecomposition, TreeError> {
    if k == 0 || !is_xk_root(root, k) {
        return Err(TreeError::NotXkRoot(root.to_string(), k));
    }
    let fail = |depth: u32, detail: String| TreeError::Counterexample {
        root: root.to_string(),
        k,
        depth,
        detail,
    };
    let chain = chain_of(root, k);
    let mut prev = root.clone();
    for (j, (label, c)) in chain.iter().enumerate() {
        let sons = children(&prev);
        let want = if j == 0 { sons.first() } else { sons.get(1) };
        if want != Some(&(*label, c.clone())) {
            return Err(fail(c.weight(), format!("{c} is not a son of {prev} via column {label}")));
        }
        if !is_xk_root(c, j + 1) && c.weight() <= max_weight {
            return Err(fail(c.weight(), format!("{c} does not root an X_{}", j + 1)));
        }
        prev = c.clone();
    }

    let actual: Vec<Partition> = xk_subtree(root, max_weight);
    let mut predicted = Vec::new();
    unfold(root, k, max_weight, &mut predicted);
    let a: BTreeSet<&Partition> = actual.iter().collect();
    let b: BTreeSet<&Partition> = predicted.iter().collect();
    if b.len() != predicted.len() {
        return Err(fail(max_weight, "chain subtrees overlap".into()));
    }
    if let Some(x) = a.difference(&b).next() {
        return Err(fail(x.weight(), format!("{x} is in the subtree but not in the chain form")));
    }
    if let Some(x) = b.difference(&a).next() {
        return Err(fail(x.weight(), format!("{x} is in the chain form but not in the subtree")));
    }
    Ok(XkDecomposition {
        root: root.clone(),
        k,
        chain,
        nodes: actual.len(),
    })
}

/// Memoized `c(l, k)`: paths of length `l` from the root of an `X_k`, which
/// is also the number of partitions of `l` into parts of size at most `k`.
#[derive(Debug, Clone, Default)]
pub struct CountTable {
    memo: BTreeMap<(u64, u64), BigUint>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `c(l, k) = Σ_{i=1..min(l,k)} c(l-i, i)`, with `c(0, k) = c(l, 1) = 1`.
    pub fn count_paths(&mut self, l: u64, k: u64) -> Result<BigUint, TreeError> {
        if k == 0 && l > 0 {
            return Err(TreeError::ZeroWidth { l });
        }
        if let Some(v) = self.memo.get(&(l, k)) {
            return Ok(v.clone());
        }
        // Explicit stack: the recursion is as deep as l.
        let mut stack = vec![(l, k)];
        while let Some(&(l, k)) = stack.last() {
            if self.memo.contains_key(&(l, k)) {
                stack.pop();
                continue;
            }
            if l == 0 || k == 1 {
                self.memo.insert((l, k), BigUint::from(1u32));
                stack.pop();
                continue;
            }
            let m = l.min(k);
            let missing: Vec<(u64, u64)> = (1..=m)
                .map(|i| (l - i, i))
                .filter(|key| !self.memo.contains_key(key))
                .collect();
            if missing.is_empty() {
                let mut sum = BigUint::from(0u32);
                for i in 1..=m {
                    sum += &self.memo[&(l - i, i)];
                }
                self.memo.insert((l, k), sum);
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
        Ok(self.memo[&(l, k)].clone())
    }

    /// `p(n) = c(n, n)`, the number of nodes of `L_B(n)`.
    pub fn partition_count(&mut self, n: u64) -> BigUint {
        self.count_paths(n, n.max(1)).expect("width is positive")
    }

    /// Partitions of `n` with exactly `k` parts: `c(n-k, k)`.
    pub fn count_length_exact(&mut self, n: u64, k: u64) -> Result<BigUint, TreeError> {
        match (n, k) {
            (0, 0) => Ok(BigUint::from(1u32)),
            (_, 0) => Err(TreeError::LengthOutOfRange { n, k }),
            _ if k > n => Err(TreeError::LengthOutOfRange { n, k }),
            _ => self.count_paths(n - k, k),
        }
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, &BigUint)> {
        self.memo.iter().map(|(&(l, k), v)| (l, k, v))
    }

    /// Every stored entry, as `l,k,c` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,k,c\n");
        for (l, k, v) in self.entries() {
            let _ = writeln!(out, "{l},{k},{v}");
        }
        out
    }
}

/// Tree edges down to depth `depth`, in breadth-first order.
pub fn tree_edges(depth: u32) -> Vec<(Partition, usize, Partition)> {
    let mut out = Vec::new();
    let mut current = vec![Partition::empty()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for s in &current {
            for (label, c) in children(s) {
                out.push((s.clone(), label, c.clone()));
                next.push(c);
            }
        }
        current = next;
    }
    out
}

pub fn tree_nodes(depth: u32) -> Vec<Partition> {
    (0..=depth).flat_map(level).collect()
}

pub fn tree_to_edge_list(depth: u32) -> String {
    let mut out = format!("depth={depth}\n");
    for (s, l, t) in tree_edges(depth) {
        let _ = writeln!(out, "{s}\t{l}\t{t}");
    }
    out
}

pub fn tree_to_dot(depth: u32) -> String {
    let mut out = format!("digraph tree {{\n  // depth={depth}\n");
    for s in tree_nodes(depth) {
        let _ = writeln!(out, "  \"{s}\";");
    }
    for (s, l, t) in tree_edges(depth) {
        let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label={l}];");
    }
    out.push_str("}\n");
    out
}

pub fn tree_to_text(depth: u32) -> String {
    let mut out = format!("depth={depth}\n");
    for s in tree_nodes(depth) {
        let _ = writeln!(out, "{s}");
    }
    out
}

#[derive(Serialize)]
struct JsonTree {
    depth: u32,
    nodes: Vec<String>,
    edges: Vec<(String, usize, String)>,
}

pub fn tree_to_json(depth: u32) -> String {
    let doc = JsonTree {
        depth,
        nodes: tree_nodes(depth).iter().map(ToString::to_string).collect(),
        edges: tree_edges(depth)
            .into_iter()
            .map(|(s, l, t)| (s.to_string(), l, t.to_string()))
            .collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("plain strings and integers serialize");
    out.push('\n');
    out
}
