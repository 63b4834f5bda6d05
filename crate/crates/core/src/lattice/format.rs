//! Text, DOT, JSON and edge-list forms of a diagram.
//!
//! Nodes are written in increasing lexicographic order of their parts and
//! edges sorted by `(source, label)`, so equal diagrams give equal bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::lattice::diagram::{DiagramKind, LatticeDiagram};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Edges,
    Dot,
    Json,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edges" => Ok(Format::Edges),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other:?} (expected edges, dot, json or text)")),
        }
    }
}

pub fn header(d: &LatticeDiagram) -> String {
    match d.kind() {
        DiagramKind::Level => format!("n={}", d.bound()),
        DiagramKind::Filter => format!("n<={}", d.bound()),
    }
}

pub fn export(d: &LatticeDiagram, format: Format) -> String {
    match format {
        Format::Edges => to_edge_list(d),
        Format::Dot => to_dot(d),
        Format::Json => to_json(d),
        Format::Text => to_text(d),
    }
}

/// Header line then one `source<TAB>label<TAB>target` line per edge.
pub fn to_edge_list(d: &LatticeDiagram) -> String {
    let mut out = header(d);
    out.push('\n');
    for (s, l, t) in d.sorted_edges() {
        let _ = writeln!(out, "{s}\t{l}\t{t}");
    }
    out
}

pub fn to_dot(d: &LatticeDiagram) -> String {
    let name = match d.kind() {
        DiagramKind::Level => "lattice",
        DiagramKind::Filter => "filter",
    };
    let mut out = format!("digraph {name} {{\n  // {}\n", header(d));
    for s in d.sorted_partitions() {
        let _ = writeln!(out, "  \"{s}\";");
    }
    for (s, l, t) in d.sorted_edges() {
        let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label={l}];");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct JsonDiagram {
    n: u32,
    nodes: Vec<String>,
    edges: Vec<(String, u32, String)>,
}

pub fn to_json(d: &LatticeDiagram) -> String {
    let doc = JsonDiagram {
        n: d.bound(),
        nodes: d.sorted_partitions().iter().map(ToString::to_string).collect(),
        edges: d
            .sorted_edges()
            .into_iter()
            .map(|(s, l, t)| (s.to_string(), l, t.to_string()))
            .collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("plain strings and integers serialize");
    out.push('\n');
    out
}

/// Header line then one partition per line.
pub fn to_text(d: &LatticeDiagram) -> String {
    let mut out = header(d);
    out.push('\n');
    for s in d.sorted_partitions() {
        let _ = writeln!(out, "{s}");
    }
    out
}

fn parse_partition(text: &str, line: usize) -> Result<Partition, LatticeError> {
    text.parse().map_err(|e: crate::error::PartitionError| LatticeError::Parse {
        line,
        reason: e.to_string(),
    })
}

fn seed_root(d: &mut LatticeDiagram) -> Result<(), LatticeError> {
    let root = match d.kind() {
        DiagramKind::Level => Partition::single(d.bound()),
        DiagramKind::Filter => Partition::empty(),
    };
    d.insert(&root)?;
    Ok(())
}

/// Reads the edge-list form. The loaded diagram has no retained seeds.
pub fn parse_edge_list(text: &str) -> Result<LatticeDiagram, LatticeError> {
    let mut lines = text.lines().enumerate();
    let (_, head) = lines.next().ok_or(LatticeError::Parse {
        line: 1,
        reason: "empty input".into(),
    })?;
    let head = head.trim();
    let bad_header = || LatticeError::Parse {
        line: 1,
        reason: format!("bad header {head:?}"),
    };
    let (kind, bound) = if let Some(b) = head.strip_prefix("n<=") {
        (DiagramKind::Filter, b.parse().map_err(|_| bad_header())?)
    } else if let Some(b) = head.strip_prefix("n=") {
        (DiagramKind::Level, b.parse().map_err(|_| bad_header())?)
    } else {
        return Err(bad_header());
    };
    let mut d = LatticeDiagram::empty(kind, bound);
    seed_root(&mut d)?;
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [s, l, t] = fields.as_slice() else {
            return Err(LatticeError::Parse {
                line: line_no,
                reason: "expected source<TAB>label<TAB>target".into(),
            });
        };
        let label: u32 = l.trim().parse().map_err(|_| LatticeError::Parse {
            line: line_no,
            reason: format!("bad label {l:?}"),
        })?;
        let s = d.insert(&parse_partition(s, line_no)?)?.0;
        let t = d.insert(&parse_partition(t, line_no)?)?.0;
        d.add_edge(s, label, t)?;
    }
    Ok(d)
}

/// Reads the JSON form. Mixed node weights mark an `L_B(≤n)` diagram.
pub fn parse_json(text: &str) -> Result<LatticeDiagram, LatticeError> {
    let doc: JsonDiagram = serde_json::from_str(text).map_err(|e| LatticeError::Parse {
        line: e.line(),
        reason: e.to_string(),
    })?;
    let nodes = doc
        .nodes
        .iter()
        .map(|s| parse_partition(s, 1))
        .collect::<Result<Vec<_>, _>>()?;
    let kind = if nodes.iter().all(|s| s.weight() == doc.n) {
        DiagramKind::Level
    } else {
        DiagramKind::Filter
    };
    let mut d = LatticeDiagram::empty(kind, doc.n);
    for s in &nodes {
        d.insert(s)?;
    }
    for (s, l, t) in &doc.edges {
        let s = d.insert(&parse_partition(s, 1)?)?.0;
        let t = d.insert(&parse_partition(t, 1)?)?.0;
        d.add_edge(s, *l, t)?;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build::build_naive;

    #[test]
    fn edge_list_of_l3() {
        assert_eq!(to_edge_list(&build_naive(3)), "n=3\n2,1\t1\t1,1,1\n3\t1\t2,1\n");
        assert_eq!(to_edge_list(&build_naive(0)), "n=0\n");
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            to_json(&build_naive(3)),
            "{\"n\":3,\"nodes\":[\"1,1,1\",\"2,1\",\"3\"],\"edges\":[[\"2,1\",1,\"1,1,1\"],[\"3\",1,\"2,1\"]]}\n"
        );
    }

    #[test]
    fn dot_shape() {
        let dot = to_dot(&build_naive(2));
        assert_eq!(
            dot,
            "digraph lattice {\n  // n=2\n  \"1,1\";\n  \"2\";\n  \"2\" -> \"1,1\" [label=1];\n}\n"
        );
    }

    #[test]
    fn reload_round_trips() {
        for n in [0, 1, 5, 9] {
            let d = build_naive(n);
            let e = parse_edge_list(&to_edge_list(&d)).unwrap();
            assert_eq!(to_edge_list(&e), to_edge_list(&d));
            assert!(e.frontier_handles().is_none());
            let j = parse_json(&to_json(&d)).unwrap();
            assert_eq!(to_json(&j), to_json(&d));
        }
    }

    #[test]
    fn malformed_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("m=3\n").is_err());
        assert!(parse_edge_list("n=3\n3\t1\n").is_err());
        assert!(parse_edge_list("n=3\n3\tx\t2,1\n").is_err());
        assert!(parse_edge_list("n=3\n3\t1\t2,2\n").is_err());
        assert!(parse_edge_list("n=3\n3\t1\t2,1\n3\t2\t2,1\n").is_err());
        assert!(parse_json("{\"n\":3}").is_err());
    }
}
