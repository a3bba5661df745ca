//! Text formats: edge lists, graph/tree/factor JSON and Graphviz DOT.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based vertex ids.
//! Blank lines and lines starting with `#` are ignored.
//!
//! Graph JSON: `{"n": 3, "edges": [[0, 1], [1, 2]]}`.
//!
//! Tree JSON: `{"edges": [[u, v], ...], "types": [0, 1, ...], "w": 0, "lambda": 0}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, Multigraph, VertexId};
use crate::solver::BipartiteTree;
use crate::two_factor::TwoFactor;
use crate::weak_two_factor::{FactorComponent, WeakTwoFactor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("tree edge [{0}, {1}] is not an unused edge of the graph")]
    UnknownTreeEdge(VertexId, VertexId),
    #[error("tree does not span the graph")]
    NotSpanning,
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

pub fn parse_edge_list(text: &str) -> Result<Multigraph, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), IoError> {
        let err = |message: String| IoError::Parse { line, message };
        let mut it = l.split_whitespace();
        let mut next = |what: &str| -> Result<usize, IoError> {
            let tok = it.next().ok_or_else(|| err(format!("missing {what}")))?;
            tok.parse()
                .map_err(|_| err(format!("{what} `{tok}` is not a nonnegative integer")))
        };
        let pair = (next("first value")?, next("second value")?);
        if let Some(extra) = it.next() {
            return Err(err(format!("unexpected `{extra}`")));
        }
        Ok(pair)
    };
    let (line, header) = lines.next().ok_or(IoError::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let mut g = Multigraph::new(n);
    for _ in 0..m {
        let (line, l) = lines.next().ok_or(IoError::Parse {
            line: text.lines().count(),
            message: format!("expected {m} edges, found {}", g.edge_count()),
        })?;
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| IoError::Parse {
            line,
            message: e.to_string(),
        })?;
    }
    if let Some((line, _)) = lines.next() {
        return Err(IoError::Parse {
            line,
            message: format!("more than {m} edges"),
        });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

pub fn graph_to_json(g: &Multigraph) -> String {
    let doc = GraphJson {
        n: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn parse_graph_json(text: &str) -> Result<Multigraph, IoError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    Ok(Multigraph::from_edges(
        doc.n,
        doc.edges.iter().map(|&[u, v]| (u, v)),
    )?)
}

/// Graph JSON when the text starts with `{`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Multigraph, IoError> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub edges: Vec<[VertexId; 2]>,
    pub types: Vec<u8>,
    pub w: VertexId,
    pub lambda: u8,
}

/// Tree JSON for a spanning tree, edges in ascending id order.
pub fn tree_to_json(g: &Multigraph, t: &BipartiteTree) -> Result<String, IoError> {
    let types = t.types_dense().ok_or(IoError::NotSpanning)?;
    let doc = TreeJson {
        edges: t
            .edges
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect(),
        types,
        w: t.w,
        lambda: t.lambda,
    };
    Ok(serde_json::to_string(&doc).expect("serializable"))
}

/// Reads tree JSON against `g`. Each `[u, v]` pair takes the lowest-id
/// graph edge joining `u` and `v` not already taken. Types are copied as
/// given; checking them is the verifier's job.
pub fn parse_tree_json(g: &Multigraph, text: &str) -> Result<BipartiteTree, IoError> {
    let doc: TreeJson = serde_json::from_str(text)?;
    let mut taken = vec![false; g.edge_count()];
    let mut edges = Vec::with_capacity(doc.edges.len());
    for &[u, v] in &doc.edges {
        let e = (u < g.vertex_count())
            .then(|| {
                g.incident(u)
                    .iter()
                    .find(|&&(e, x)| x == v && !taken[e])
                    .map(|&(e, _)| e)
            })
            .flatten()
            .ok_or(IoError::UnknownTreeEdge(u, v))?;
        taken[e] = true;
        edges.push(e);
    }
    edges.sort_unstable();
    Ok(BipartiteTree {
        edges,
        types: doc.types.into_iter().map(Some).collect(),
        w: doc.w,
        lambda: doc.lambda,
    })
}

#[derive(Serialize)]
struct NoSolutionJson<'a> {
    status: &'static str,
    reason: &'static str,
    r: usize,
    coloring: &'a [u8],
}

/// Certificate that no tree exists: the graph is `r`-regular bipartite with
/// the given 2-coloring.
pub fn no_solution_to_json(r: usize, coloring: &[u8]) -> String {
    let cert = NoSolutionJson {
        status: "no_solution",
        reason: "regular_bipartite",
        r,
        coloring,
    };
    serde_json::to_string(&cert).expect("serializable")
}

#[derive(Serialize)]
struct ComponentJson<'a> {
    kind: &'static str,
    vertices: &'a [VertexId],
    edges: &'a [EdgeId],
}

pub fn two_factor_to_json(f: &TwoFactor) -> String {
    let cycles: Vec<ComponentJson> = f
        .cycles
        .iter()
        .map(|c| ComponentJson {
            kind: "cycle",
            vertices: c.vertices(),
            edges: c.edges(),
        })
        .collect();
    serde_json::to_string(&serde_json::json!({ "cycles": cycles })).expect("serializable")
}

pub fn weak_two_factor_to_json(f: &WeakTwoFactor) -> String {
    let components: Vec<ComponentJson> = f
        .components
        .iter()
        .map(|c| ComponentJson {
            kind: if matches!(c, FactorComponent::Cycle(_)) {
                "cycle"
            } else {
                "path"
            },
            vertices: c.vertices(),
            edges: c.edges(),
        })
        .collect();
    serde_json::to_string(&serde_json::json!({ "components": components })).expect("serializable")
}

/// Edge list of a subgraph on all of `g`'s vertices.
pub fn edges_to_edge_list(g: &Multigraph, edges: &[EdgeId]) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for &e in edges {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// The host graph with `t` drawn on it: type-1 vertices filled, tree edges
/// bold, other edges gray and dashed, leaves of maximum host degree with a
/// double border.
pub fn tree_to_dot(g: &Multigraph, t: &BipartiteTree) -> String {
    let mut tree_deg = vec![0usize; g.vertex_count()];
    let mut in_tree = vec![false; g.edge_count()];
    for &e in &t.edges {
        let (u, v) = g.endpoints(e);
        tree_deg[u] += 1;
        tree_deg[v] += 1;
        in_tree[e] = true;
    }
    let delta = g.max_degree();
    let mut out = String::from("graph evenspan {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let mut attrs = Vec::new();
        match t.types.get(v).copied().flatten() {
            Some(1) => attrs.push("style=filled, fillcolor=black, fontcolor=white".to_string()),
            Some(_) => attrs.push("style=solid".to_string()),
            None => attrs.push("style=dotted".to_string()),
        }
        if tree_deg[v] == 1 && g.degree(v) == delta {
            attrs.push("peripheries=2".to_string());
        }
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let style = if in_tree[e] {
            "style=bold"
        } else {
            "color=gray, style=dashed"
        };
        let _ = writeln!(out, "  {u} -- {v} [{style}];");
    }
    out.push_str("}\n");
    out
}

/// The host graph with factor edges bold and the rest gray and dashed.
pub fn factor_to_dot(g: &Multigraph, factor_edges: &[EdgeId]) -> String {
    let mut in_factor = vec![false; g.edge_count()];
    for &e in factor_edges {
        in_factor[e] = true;
    }
    let mut out = String::from("graph evenspan {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let style = if in_factor[e] {
            "style=bold"
        } else {
            "color=gray, style=dashed"
        };
        let _ = writeln!(out, "  {u} -- {v} [{style}];");
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &Multigraph) -> String {
    factor_to_dot(g, &[])
}
