//! Weak 2-factors: spanning subgraphs whose components are cycles or paths,
//! every path end having degree below Δ in the host.
//!
//! Construction: take two copies of the graph, join every vertex `v` to its
//! copy by `Δ - d(v)` parallel edges, compute a 2-factor of the resulting
//! Δ-regular graph and keep the factor edges that lie in the first copy.

use thiserror::Error;

use crate::graph::{EdgeId, GraphError, Multigraph, OrientedCycle, VertexId, VertexPath};
use crate::two_factor::{two_factor, TwoFactorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeakFactorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {0} bridge(s); a 2-edge-connected graph is required")]
    NotTwoEdgeConnected(usize),
    #[error("graph needs at least two vertices")]
    TooSmall,
    /// The doubled graph had no 2-factor. Cannot happen for 2-edge-connected
    /// input; reported rather than hidden.
    #[error("internal contract failure: {0}")]
    Factor(#[from] TwoFactorError),
}

#[derive(Debug, Clone)]
pub struct DoubledGraph {
    pub graph: Multigraph,
    /// Host edge id for edges of the first copy; `None` for the second copy
    /// and the cross edges.
    pub origin: Vec<Option<EdgeId>>,
}

/// Vertex `v` keeps its id, its copy is `n + v`. Edge ids: first copy in host
/// order, then the second copy, then cross edges by vertex.
pub fn doubled_graph(g: &Multigraph) -> DoubledGraph {
    let n = g.vertex_count();
    let delta = g.max_degree();
    let mut graph = Multigraph::new(2 * n);
    let mut origin = Vec::with_capacity(2 * g.edge_count());
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        graph.add_edge(a, b).unwrap();
        origin.push(Some(e));
    }
    for &(a, b) in g.edges() {
        graph.add_edge(n + a, n + b).unwrap();
        origin.push(None);
    }
    for v in g.vertices() {
        for _ in g.degree(v)..delta {
            graph.add_edge(v, n + v).unwrap();
            origin.push(None);
        }
    }
    DoubledGraph { graph, origin }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorComponent {
    Cycle(OrientedCycle),
    Path(VertexPath),
}

impl FactorComponent {
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            FactorComponent::Cycle(c) => c.vertices(),
            FactorComponent::Path(p) => p.vertices(),
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        match self {
            FactorComponent::Cycle(c) => c.edges(),
            FactorComponent::Path(p) => p.edges(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakTwoFactor {
    pub components: Vec<FactorComponent>,
}

impl WeakTwoFactor {
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut all: Vec<EdgeId> = self
            .components
            .iter()
            .flat_map(|c| c.edges().iter().copied())
            .collect();
        all.sort_unstable();
        all
    }
}

pub fn weak_two_factor(g: &Multigraph) -> Result<WeakTwoFactor, WeakFactorError> {
    g.require_connected()?;
    if g.vertex_count() < 2 {
        return Err(WeakFactorError::TooSmall);
    }
    let bridges = g.bridges();
    if !bridges.is_empty() {
        return Err(WeakFactorError::NotTwoEdgeConnected(bridges.len()));
    }
    let n = g.vertex_count();
    let doubled = doubled_graph(g);
    // A regular host leaves the two copies disconnected; the factor is taken
    // on the component holding the first copy.
    let (label, _) = doubled.graph.components();
    let keep: Vec<VertexId> = (0..2 * n).filter(|&v| label[v] == label[0]).collect();
    let sub = doubled.graph.subgraph(&keep, |_| true);
    let factor = two_factor(&sub.graph)?;
    let host_edges: Vec<EdgeId> = factor
        .edges()
        .into_iter()
        .filter_map(|e| doubled.origin[sub.edge_of[e]])
        .collect();
    Ok(WeakTwoFactor {
        components: split_components(g, &host_edges),
    })
}

/// Components of an edge set with maximum degree 2, in order of their
/// smallest vertex. Cycles start at their smallest vertex and leave along the
/// lower-id edge; paths start at their smaller end.
pub(crate) fn split_components(g: &Multigraph, edges: &[EdgeId]) -> Vec<FactorComponent> {
    let n = g.vertex_count();
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &e in edges {
        let (a, b) = g.endpoints(e);
        at[a].push(e);
        at[b].push(e);
    }
    for list in &mut at {
        assert!(list.len() <= 2, "factor restriction has degree above 2");
        list.sort_unstable();
    }
    let walk = |start: VertexId, first: Option<EdgeId>, seen: &mut Vec<bool>| {
        let mut vertices = vec![start];
        let mut path_edges = Vec::new();
        seen[start] = true;
        let (mut cur, mut via) = (start, first);
        while let Some(e) = via {
            let next = g.other_end(e, cur);
            path_edges.push(e);
            if seen[next] {
                break;
            }
            seen[next] = true;
            vertices.push(next);
            via = at[next].iter().copied().find(|&f| f != e);
            cur = next;
        }
        (vertices, path_edges)
    };

    let mut seen = vec![false; n];
    let mut first_vertex: Vec<(VertexId, FactorComponent)> = Vec::new();
    // paths first, from their ends, so that no walk starts mid-path
    for v in 0..n {
        if !seen[v] && at[v].len() <= 1 {
            let (vertices, path_edges) = walk(v, at[v].first().copied(), &mut seen);
            let min = *vertices.iter().min().unwrap();
            let path =
                VertexPath::new(g, vertices, path_edges).expect("walk from an end is a path");
            let path = if path.ends().0 <= path.ends().1 {
                path
            } else {
                reversed(g, &path)
            };
            first_vertex.push((min, FactorComponent::Path(path)));
        }
    }
    for v in 0..n {
        if !seen[v] {
            let (vertices, cycle_edges) = walk(v, Some(at[v][0]), &mut seen);
            let cycle =
                OrientedCycle::new(g, vertices, cycle_edges).expect("degree-2 walk closes a cycle");
            first_vertex.push((v, FactorComponent::Cycle(cycle)));
        }
    }
    first_vertex.sort_by_key(|&(v, _)| v);
    first_vertex.into_iter().map(|(_, c)| c).collect()
}

fn reversed(g: &Multigraph, p: &VertexPath) -> VertexPath {
    let vertices: Vec<VertexId> = p.vertices().iter().rev().copied().collect();
    let edges: Vec<EdgeId> = p.edges().iter().rev().copied().collect();
    VertexPath::new(g, vertices, edges).unwrap()
}
