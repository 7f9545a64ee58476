//! DOT and JSON output, the golden Hasse diagrams, and Möbius tables.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chains::ChainGraph;
use crate::error::{Error, Result};
use crate::group::{ColoredPermutation, GenKind, GroupContext};
use crate::lattice::{classify_homotopy, mobius};
use crate::order::{leq, HasseDiagram};

/// Hasse diagram of `B_2`, reference drawing.
pub const GOLDEN_B2: &str = include_str!("../golden/hasse_b2.json");
/// Hasse diagram of `B_3`, reference drawing.
pub const GOLDEN_B3: &str = include_str!("../golden/hasse_b3.json");

fn edge_color(kind: GenKind) -> &'static str {
    match kind {
        GenKind::A => "red",
        GenKind::B => "black",
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz source: one node per element labeled with the element and its finv,
/// black edges for `b_i` and red edges for `a_i`.
pub fn hasse_to_dot(hasse: &HasseDiagram, signed: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph flag_weak_order {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=plaintext];");
    for (id, g) in hasse.elements().iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{id} [label=\"{}\\nfinv={}\"];",
            escape(&g.format(signed)),
            g.finv()
        );
    }
    for e in hasse.edges() {
        let _ = writeln!(
            out,
            "  n{} -> n{} [color={}, label=\"{}\", arrowhead=none];",
            e.from,
            e.to,
            edge_color(e.label.kind),
            e.label
        );
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JsonNode {
    pub id: usize,
    /// `[value, color]` at each position.
    pub window: Vec<(usize, u32)>,
    pub finv: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JsonEdge {
    pub from: usize,
    pub to: usize,
    pub gen: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JsonHasse {
    pub r: u32,
    pub n: usize,
    pub nodes: Vec<JsonNode>,
    pub edges: Vec<JsonEdge>,
}

pub fn hasse_to_json(hasse: &HasseDiagram) -> JsonHasse {
    let ctx = hasse.context();
    JsonHasse {
        r: ctx.r(),
        n: ctx.n(),
        nodes: hasse
            .elements()
            .iter()
            .enumerate()
            .map(|(id, g)| JsonNode {
                id,
                window: g.window().collect(),
                finv: g.finv(),
            })
            .collect(),
        edges: hasse
            .edges()
            .iter()
            .map(|e| JsonEdge {
                from: e.from,
                to: e.to,
                gen: e.label.to_string(),
            })
            .collect(),
    }
}

/// Node and edge sets of a diagram, in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramShape {
    pub context: GroupContext,
    pub nodes: BTreeSet<ColoredPermutation>,
    /// `(lower, upper, generator kind)`.
    pub edges: BTreeSet<(ColoredPermutation, ColoredPermutation, GenKind)>,
}

impl DiagramShape {
    pub fn of_hasse(hasse: &HasseDiagram) -> Self {
        DiagramShape {
            context: hasse.context(),
            nodes: hasse.elements().iter().cloned().collect(),
            edges: hasse
                .edges()
                .iter()
                .map(|e| {
                    (
                        hasse.element(e.from).clone(),
                        hasse.element(e.to).clone(),
                        e.label.kind,
                    )
                })
                .collect(),
        }
    }

    pub fn of_json(json: &JsonHasse) -> Result<Self> {
        let ctx = GroupContext::new(json.r, json.n)?;
        let mut nodes = Vec::with_capacity(json.nodes.len());
        for node in &json.nodes {
            nodes.push(ColoredPermutation::from_window(ctx, &node.window)?);
        }
        let node = |id: usize| {
            nodes
                .get(id)
                .cloned()
                .ok_or_else(|| Error::Precondition(format!("edge refers to missing node {id}")))
        };
        let mut edges = BTreeSet::new();
        for e in &json.edges {
            let label: crate::group::GeneratorLabel = e.gen.parse()?;
            edges.insert((node(e.from)?, node(e.to)?, label.kind));
        }
        Ok(DiagramShape {
            context: ctx,
            nodes: nodes.into_iter().collect(),
            edges,
        })
    }
}

#[derive(Clone, Debug, Deserialize)]
struct GoldenEdge {
    from: String,
    to: String,
    kind: String,
}

#[derive(Clone, Debug, Deserialize)]
struct GoldenFile {
    r: u32,
    n: usize,
    nodes: Vec<String>,
    edges: Vec<GoldenEdge>,
}

/// Reads a golden file: signed element strings and edges tagged `"a"` or `"b"`.
pub fn parse_golden(text: &str) -> Result<DiagramShape> {
    let file: GoldenFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        input: "golden file".into(),
        reason: e.to_string(),
    })?;
    let ctx = GroupContext::new(file.r, file.n)?;
    let nodes = file
        .nodes
        .iter()
        .map(|s| ctx.parse(s))
        .collect::<Result<BTreeSet<_>>>()?;
    let mut edges = BTreeSet::new();
    for e in &file.edges {
        let kind = match e.kind.as_str() {
            "a" => GenKind::A,
            "b" => GenKind::B,
            other => {
                return Err(Error::Parse {
                    input: other.into(),
                    reason: "edge kind must be \"a\" or \"b\"".into(),
                })
            }
        };
        edges.insert((ctx.parse(&e.from)?, ctx.parse(&e.to)?, kind));
    }
    Ok(DiagramShape {
        context: ctx,
        nodes,
        edges,
    })
}

/// Differences between an expected and an actual diagram.
#[derive(Clone, Debug, Default)]
pub struct ShapeDiff {
    pub missing_nodes: Vec<String>,
    pub extra_nodes: Vec<String>,
    pub missing_edges: Vec<String>,
    pub extra_edges: Vec<String>,
}

impl ShapeDiff {
    pub fn is_empty(&self) -> bool {
        self.missing_nodes.is_empty()
            && self.extra_nodes.is_empty()
            && self.missing_edges.is_empty()
            && self.extra_edges.is_empty()
    }
}

impl std::fmt::Display for ShapeDiff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts = [
            ("missing node", &self.missing_nodes),
            ("extra node", &self.extra_nodes),
            ("missing edge", &self.missing_edges),
            ("extra edge", &self.extra_edges),
        ];
        let mut first = true;
        for (what, items) in parts {
            for item in items {
                if !first {
                    f.write_str("; ")?;
                }
                first = false;
                write!(f, "{what} {item}")?;
            }
        }
        Ok(())
    }
}

pub fn compare_shapes(expected: &DiagramShape, actual: &DiagramShape) -> ShapeDiff {
    let node = |g: &ColoredPermutation| g.format(true);
    let edge = |(x, y, k): &(ColoredPermutation, ColoredPermutation, GenKind)| {
        let kind = if *k == GenKind::A { "a" } else { "b" };
        format!("{} -{kind}-> {}", x.format(true), y.format(true))
    };
    ShapeDiff {
        missing_nodes: expected.nodes.difference(&actual.nodes).map(node).collect(),
        extra_nodes: actual.nodes.difference(&expected.nodes).map(node).collect(),
        missing_edges: expected.edges.difference(&actual.edges).map(edge).collect(),
        extra_edges: actual.edges.difference(&expected.edges).map(edge).collect(),
    }
}

/// Γ as Graphviz source, edges labeled with their move kind.
pub fn chain_graph_to_dot(graph: &ChainGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph chains {{");
    let _ = writeln!(out, "  node [shape=box];");
    for (id, w) in graph.vertices().iter().enumerate() {
        let _ = writeln!(out, "  c{id} [label=\"{}\"];", escape(&w.to_string()));
    }
    for &(u, v, kind) in graph.edges() {
        let _ = writeln!(out, "  c{u} -- c{v} [label=\"{kind}\"];");
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct MobiusRow {
    pub from: String,
    pub to: String,
    pub mobius: i64,
    pub class: String,
}

/// `μ(g, h)` and the homotopy class for every comparable pair of the diagram, in id order.
pub fn mobius_rows(hasse: &HasseDiagram, signed: bool) -> Vec<MobiusRow> {
    let mut rows = Vec::new();
    for g in hasse.elements() {
        for h in hasse.elements() {
            if !leq(g, h).expect("same context") {
                continue;
            }
            rows.push(MobiusRow {
                from: g.format(signed),
                to: h.format(signed),
                mobius: mobius(g, h).expect("comparable"),
                class: classify_homotopy(g, h).expect("comparable").to_string(),
            });
        }
    }
    rows
}
