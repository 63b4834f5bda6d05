use std::fmt;
use std::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};

use crate::error::LatticeError;
use crate::partition::Partition;

/// Stable handle to a node of a [`LatticeDiagram`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(index: usize) -> Self {
        NodeId(index as u32)
    }
}

/// Whether a diagram holds one level `L_B(n)` or the union `L_B(≤n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Level,
    Filter,
}

/// A labeled cover edge; the label is the column the grain leaves
/// (0 for the links between consecutive levels of a filter diagram).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub label: u32,
    pub target: NodeId,
}

/// A node is stored without its first column: the weight is kept as a
/// deficit below the diagram bound, and the first part is implied by it.
/// Adding a grain to the first column of every node of a level is then a
/// change of the bound alone.
#[derive(Debug, Clone)]
struct Node {
    deficit: u32,
    tail_sum: u32,
    tail: Box<[u32]>,
    out: Vec<Edge>,
}

/// Labeled transitive reduction of `L_B(n)` or `L_B(≤n)`, with an index
/// from partitions to node handles.
#[derive(Clone)]
pub struct LatticeDiagram {
    kind: DiagramKind,
    bound: u32,
    nodes: Vec<Node>,
    index: HashTable<NodeId>,
    hasher: DefaultHashBuilder,
    edge_count: usize,
    pub(crate) frontier: Option<Vec<NodeId>>,
}

impl fmt::Debug for LatticeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LatticeDiagram")
            .field("kind", &self.kind)
            .field("bound", &self.bound)
            .field("nodes", &self.nodes.len())
            .field("edges", &self.edge_count)
            .finish()
    }
}

impl LatticeDiagram {
    pub fn empty(kind: DiagramKind, bound: u32) -> Self {
        LatticeDiagram {
            kind,
            bound,
            nodes: Vec::new(),
            index: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
            edge_count: 0,
            frontier: None,
        }
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    /// `n` for `L_B(n)`, or the weight bound for `L_B(≤n)`.
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Seed handles retained from incremental construction, if any.
    pub fn frontier_handles(&self) -> Option<&[NodeId]> {
        self.frontier.as_deref()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len() as u32).map(NodeId)
    }

    pub fn weight_of(&self, id: NodeId) -> u32 {
        self.bound - self.nodes[id.index()].deficit
    }

    /// Writes the parts of node `id` into `buf`.
    pub(crate) fn parts_into(&self, id: NodeId, buf: &mut Vec<u32>) {
        let node = &self.nodes[id.index()];
        buf.clear();
        let first = self.bound - node.deficit - node.tail_sum;
        if first > 0 {
            buf.push(first);
            buf.extend_from_slice(&node.tail);
        }
    }

    pub(crate) fn tail(&self, id: NodeId) -> &[u32] {
        &self.nodes[id.index()].tail
    }

    pub fn partition(&self, id: NodeId) -> Partition {
        let mut buf = Vec::new();
        self.parts_into(id, &mut buf);
        Partition::from_canonical(buf)
    }

    pub fn out_edges(&self, id: NodeId) -> &[Edge] {
        &self.nodes[id.index()].out
    }

    /// Every edge as `(source, label, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, u32, NodeId)> + '_ {
        self.nodes.iter().enumerate().flat_map(|(i, node)| {
            node.out
                .iter()
                .map(move |e| (NodeId(i as u32), e.label, e.target))
        })
    }

    fn hash_key(&self, deficit: u32, tail: &[u32]) -> u64 {
        self.hasher.hash_one((deficit, tail))
    }

    pub(crate) fn find_tail(&self, weight: u32, tail: &[u32]) -> Option<NodeId> {
        if weight > self.bound {
            return None;
        }
        let deficit = self.bound - weight;
        let hash = self.hash_key(deficit, tail);
        self.index
            .find(hash, |id| {
                let node = &self.nodes[id.index()];
                node.deficit == deficit && *node.tail == *tail
            })
            .copied()
    }

    pub fn find(&self, s: &Partition) -> Option<NodeId> {
        if self.kind == DiagramKind::Level && s.weight() != self.bound {
            return None;
        }
        let tail = s.parts().get(1..).unwrap_or(&[]);
        self.find_tail(s.weight(), tail)
    }

    /// Makes room for `additional` more nodes without rehashing.
    pub fn reserve(&mut self, additional: usize) {
        self.nodes.reserve(additional);
        let (nodes, hasher) = (&self.nodes, &self.hasher);
        self.index.reserve(additional, |id| {
            let node = &nodes[id.index()];
            hasher.hash_one((node.deficit, &*node.tail))
        });
    }

    pub fn contains(&self, s: &Partition) -> bool {
        self.find(s).is_some()
    }

    /// Inserts the node with the given weight and tail; returns its handle
    /// and whether it was new.
    pub(crate) fn insert_tail(&mut self, weight: u32, tail: Vec<u32>) -> (NodeId, bool) {
        debug_assert!(weight <= self.bound);
        if let Some(id) = self.find_tail(weight, &tail) {
            return (id, false);
        }
        let deficit = self.bound - weight;
        let hash = self.hash_key(deficit, &tail);
        let id = NodeId(self.nodes.len() as u32);
        let tail_sum = tail.iter().sum();
        self.nodes.push(Node {
            deficit,
            tail_sum,
            tail: tail.into_boxed_slice(),
            out: Vec::new(),
        });
        let (nodes, hasher) = (&self.nodes, &self.hasher);
        self.index.insert_unique(hash, id, |other| {
            let node = &nodes[other.index()];
            hasher.hash_one((node.deficit, &*node.tail))
        });
        (id, true)
    }

    /// Inserts `s`; fails if its weight does not fit the diagram.
    pub fn insert(&mut self, s: &Partition) -> Result<(NodeId, bool), LatticeError> {
        let w = s.weight();
        let fits = match self.kind {
            DiagramKind::Level => w == self.bound,
            DiagramKind::Filter => w <= self.bound,
        };
        if !fits {
            return Err(LatticeError::Malformed(format!(
                "{s} (weight {w}) does not belong to a diagram with bound {}",
                self.bound
            )));
        }
        let tail = s.parts().get(1..).unwrap_or(&[]).to_vec();
        Ok(self.insert_tail(w, tail))
    }

    /// Adds `source -label-> target`. Returns `Ok(false)` if the same edge
    /// is already present, and an error if the pair is present with another
    /// label.
    pub fn add_edge(&mut self, source: NodeId, label: u32, target: NodeId) -> Result<bool, LatticeError> {
        let out = &self.nodes[source.index()].out;
        if let Some(e) = out.iter().find(|e| e.target == target) {
            if e.label == label {
                return Ok(false);
            }
            return Err(LatticeError::ConflictingLabel {
                upper: self.partition(source).to_string(),
                lower: self.partition(target).to_string(),
                first: e.label,
                second: label,
            });
        }
        self.nodes[source.index()].out.push(Edge { label, target });
        self.edge_count += 1;
        Ok(true)
    }

    /// Removes the edge out of `source` with `label`; returns its target.
    pub fn remove_edge(&mut self, source: NodeId, label: u32) -> Option<NodeId> {
        let out = &mut self.nodes[source.index()].out;
        let pos = out.iter().position(|e| e.label == label)?;
        let edge = out.remove(pos);
        self.edge_count -= 1;
        Some(edge.target)
    }

    pub(crate) fn edge_target(&self, source: NodeId, label: u32) -> Option<NodeId> {
        self.out_edges(source)
            .iter()
            .find(|e| e.label == label)
            .map(|e| e.target)
    }

    /// Adds one grain to the first column of every node of a level diagram.
    pub(crate) fn shift_first_column(&mut self) {
        debug_assert_eq!(self.kind, DiagramKind::Level);
        self.bound += 1;
    }

    /// The partition `(n)` of a level diagram.
    pub fn top(&self) -> Option<NodeId> {
        match self.kind {
            DiagramKind::Level => self.find(&Partition::single(self.bound)),
            DiagramKind::Filter => self.find(&Partition::empty()),
        }
    }

    /// `(1, ..., 1)` for a level diagram; the filter has no bottom.
    pub fn bottom(&self) -> Option<NodeId> {
        match self.kind {
            DiagramKind::Level => self.find(&Partition::ones(self.bound as usize)),
            DiagramKind::Filter => None,
        }
    }

    /// Handles of the nodes with no incoming edge.
    pub fn sources(&self) -> Vec<NodeId> {
        let mut has_in = vec![false; self.nodes.len()];
        for (_, _, t) in self.edges() {
            has_in[t.index()] = true;
        }
        self.node_ids().filter(|id| !has_in[id.index()]).collect()
    }

    /// Handles of the nodes with no outgoing edge.
    pub fn sinks(&self) -> Vec<NodeId> {
        self.node_ids()
            .filter(|id| self.out_edges(*id).is_empty())
            .collect()
    }

    /// Nodes sorted by part sequence.
    pub fn sorted_partitions(&self) -> Vec<Partition> {
        let mut all: Vec<Partition> = self.node_ids().map(|id| self.partition(id)).collect();
        all.sort_unstable();
        all
    }

    /// Edges as partitions, sorted by `(source, label)`.
    pub fn sorted_edges(&self) -> Vec<(Partition, u32, Partition)> {
        let names: Vec<Partition> = self.node_ids().map(|id| self.partition(id)).collect();
        let mut all: Vec<(Partition, u32, Partition)> = self
            .edges()
            .map(|(s, l, t)| (names[s.index()].clone(), l, names[t.index()].clone()))
            .collect();
        all.sort_unstable();
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn insert_and_find() {
        let mut d = LatticeDiagram::empty(DiagramKind::Level, 4);
        let (a, fresh) = d.insert(&p(&[3, 1])).unwrap();
        assert!(fresh);
        let (b, fresh) = d.insert(&p(&[3, 1])).unwrap();
        assert!(!fresh);
        assert_eq!(a, b);
        assert_eq!(d.partition(a), p(&[3, 1]));
        assert!(d.find(&p(&[2, 2])).is_none());
        assert!(d.insert(&p(&[3])).is_err());
    }

    #[test]
    fn shifting_adds_a_grain_to_every_first_column() {
        let mut d = LatticeDiagram::empty(DiagramKind::Level, 3);
        let a = d.insert(&p(&[2, 1])).unwrap().0;
        let b = d.insert(&p(&[1, 1, 1])).unwrap().0;
        d.shift_first_column();
        assert_eq!(d.partition(a), p(&[3, 1]));
        assert_eq!(d.partition(b), p(&[2, 1, 1]));
        assert_eq!(d.find(&p(&[3, 1])), Some(a));
    }

    #[test]
    fn edge_label_conflicts_are_reported() {
        let mut d = LatticeDiagram::empty(DiagramKind::Level, 3);
        let a = d.insert(&p(&[3])).unwrap().0;
        let b = d.insert(&p(&[2, 1])).unwrap().0;
        assert!(d.add_edge(a, 1, b).unwrap());
        assert!(!d.add_edge(a, 1, b).unwrap());
        assert!(matches!(
            d.add_edge(a, 2, b),
            Err(LatticeError::ConflictingLabel { first: 1, second: 2, .. })
        ));
        assert_eq!(d.edge_count(), 1);
        assert_eq!(d.remove_edge(a, 1), Some(b));
        assert_eq!(d.edge_count(), 0);
    }

    #[test]
    fn filter_nodes_keep_their_weight() {
        let mut d = LatticeDiagram::empty(DiagramKind::Filter, 3);
        let e = d.insert(&p(&[])).unwrap().0;
        let one = d.insert(&p(&[1])).unwrap().0;
        let two = d.insert(&p(&[2])).unwrap().0;
        assert_ne!(one, two);
        assert_eq!(d.partition(e), p(&[]));
        assert_eq!(d.weight_of(two), 2);
        assert_eq!(d.top(), Some(e));
    }
}
