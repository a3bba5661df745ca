//! Loop-free multigraphs with dense vertex and edge ids, plus the structural
//! predicates the rest of the crate is built on.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: VertexId },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected (vertex {unreached} not reachable from vertex 0)")]
    Disconnected { unreached: VertexId },
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
}

/// Undirected multigraph without loops. Parallel edges keep distinct ids.
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<(EdgeId, VertexId)>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph {
            edges: Vec::new(),
            incidence: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list, assigning edge ids in list order.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Multigraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.incidence.push(Vec::new());
        self.incidence.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        let id = self.edges.len();
        if u == v {
            return Err(GraphError::Loop {
                edge: id,
                vertex: u,
            });
        }
        self.edges.push((u, v));
        self.incidence[u].push((id, v));
        self.incidence[v].push((id, u));
        Ok(id)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// `(edge id, other endpoint)` pairs in ascending edge id order.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.incidence[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    /// Δ(G); zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        Ok(self.first_unreached().is_none())
    }

    fn first_unreached(&self) -> Option<VertexId> {
        let (comp, _) = self.components();
        comp.iter().position(|&c| c != comp[0])
    }

    /// Connected component label per vertex and the number of components.
    /// Labels are assigned in order of the smallest vertex of each component.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(_, u) in &self.incidence[v] {
                    if label[u] == usize::MAX {
                        label[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        match self.first_unreached() {
            Some(unreached) => Err(GraphError::Disconnected { unreached }),
            None => Ok(()),
        }
    }

    pub fn regularity(&self) -> Regularity {
        match self.vertices().find(|&v| self.degree(v) != self.degree(0)) {
            None => Regularity::Regular(if self.vertex_count() == 0 {
                0
            } else {
                self.degree(0)
            }),
            Some(v) => Regularity::Irregular { u: 0, v },
        }
    }

    /// Proper 2-coloring, or an odd cycle when the graph is not bipartite.
    pub fn bipartition(&self) -> Result<Bipartition, GraphError> {
        self.require_connected()?;
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut parent: Vec<Option<(EdgeId, VertexId)>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::from([0]);
        color[0] = 0;
        while let Some(v) = queue.pop_front() {
            for &(e, u) in &self.incidence[v] {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = Some((e, v));
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Ok(Bipartition::OddCycle(odd_cycle_from_conflict(
                        self, &parent, &depth, e, v, u,
                    )));
                }
            }
        }
        Ok(Bipartition::Coloring(color))
    }

    /// Regular bipartite: all degrees equal and the graph is 2-colorable.
    /// Returns the degree and coloring when it is.
    pub fn regular_bipartite(&self) -> Result<Option<(usize, Vec<u8>)>, GraphError> {
        let Regularity::Regular(r) = self.regularity() else {
            return Ok(None);
        };
        match self.bipartition()? {
            Bipartition::Coloring(c) => Ok(Some((r, c))),
            Bipartition::OddCycle(_) => Ok(None),
        }
    }

    /// Cutedges, sorted by id. Parallel edges are never bridges.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let n = self.vertex_count();
        let mut tin = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut timer = 0;
        // (vertex, edge used to enter it, next incidence index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..n {
            if tin[root] != usize::MAX {
                continue;
            }
            tin[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, None, 0));
            while let Some(top) = stack.last_mut() {
                let (v, via, idx) = *top;
                if idx < self.incidence[v].len() {
                    top.2 += 1;
                    let (e, u) = self.incidence[v][idx];
                    if Some(e) == via {
                        continue;
                    }
                    if tin[u] == usize::MAX {
                        tin[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        stack.push((u, Some(e), 0));
                    } else {
                        low[v] = low[v].min(tin[u]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(p, _, _))) = (via, stack.last()) {
                        low[p] = low[p].min(low[v]);
                        if low[v] > tin[p] {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_two_edge_connected(&self) -> Result<bool, GraphError> {
        Ok(self.is_connected()? && self.bridges().is_empty())
    }

    /// Copies the vertices in `vertices` (in that order) and every edge among
    /// them accepted by `keep`, preserving relative edge order.
    pub fn subgraph(&self, vertices: &[VertexId], keep: impl Fn(EdgeId) -> bool) -> Subgraph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Multigraph::new(vertices.len());
        let mut edge_of = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if local[a] != usize::MAX && local[b] != usize::MAX && keep(e) {
                graph
                    .add_edge(local[a], local[b])
                    .expect("endpoints are distinct and in range");
                edge_of.push(e);
            }
        }
        Subgraph {
            graph,
            vertex_of: vertices.to_vec(),
            edge_of,
        }
    }
}

/// A graph carved out of a host, with id translations back to the host.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Multigraph,
    pub vertex_of: Vec<VertexId>,
    pub edge_of: Vec<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regularity {
    Regular(usize),
    /// `u` and `v` have different degrees.
    Irregular {
        u: VertexId,
        v: VertexId,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Coloring(Vec<u8>),
    OddCycle(OrientedCycle),
}

fn odd_cycle_from_conflict(
    g: &Multigraph,
    parent: &[Option<(EdgeId, VertexId)>],
    depth: &[usize],
    closing: EdgeId,
    a: VertexId,
    b: VertexId,
) -> OrientedCycle {
    // Climb both endpoints to their lowest common ancestor in the BFS tree.
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut left_edges = Vec::new();
    let mut right = vec![y];
    let mut right_edges = Vec::new();
    while depth[x] > depth[y] {
        let (e, p) = parent[x].unwrap();
        left_edges.push(e);
        x = p;
        left.push(x);
    }
    while depth[y] > depth[x] {
        let (e, p) = parent[y].unwrap();
        right_edges.push(e);
        y = p;
        right.push(y);
    }
    while x != y {
        let (e, p) = parent[x].unwrap();
        left_edges.push(e);
        x = p;
        left.push(x);
        let (e, p) = parent[y].unwrap();
        right_edges.push(e);
        y = p;
        right.push(y);
    }
    // Cycle: lca -> ... -> a, closing edge a-b, b -> ... -> lca.
    right.pop();
    let mut vertices: Vec<VertexId> = left.into_iter().rev().collect();
    let mut edges: Vec<EdgeId> = left_edges.into_iter().rev().collect();
    edges.push(closing);
    vertices.extend(right.iter().copied());
    edges.extend(right_edges.iter().copied());
    OrientedCycle::new(g, vertices, edges).expect("BFS conflict always closes an odd cycle")
}

/// A cycle with a fixed orientation: edge `i` joins `vertices[i]` to
/// `vertices[i + 1]` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl OrientedCycle {
    pub fn new(
        g: &Multigraph,
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
    ) -> Result<Self, GraphError> {
        let len = vertices.len();
        if len < 2 {
            return Err(GraphError::InvalidCycle(format!("length {len} < 2")));
        }
        if edges.len() != len {
            return Err(GraphError::InvalidCycle(format!(
                "{} vertices but {} edges",
                len,
                edges.len()
            )));
        }
        let mut seen = std::collections::HashSet::with_capacity(len);
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: g.vertex_count(),
                });
            }
            if !seen.insert(v) {
                return Err(GraphError::InvalidCycle(format!("vertex {v} repeated")));
            }
        }
        let mut seen_edges = std::collections::HashSet::with_capacity(len);
        for i in 0..len {
            let e = edges[i];
            if e >= g.edge_count() || !seen_edges.insert(e) {
                return Err(GraphError::InvalidCycle(format!(
                    "bad or repeated edge {e}"
                )));
            }
            let (a, b) = g.endpoints(e);
            let (x, y) = (vertices[i], vertices[(i + 1) % len]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(GraphError::InvalidCycle(format!(
                    "edge {e} does not join {x} and {y}"
                )));
            }
        }
        Ok(OrientedCycle { vertices, edges })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn successor(&self, v: VertexId) -> Option<VertexId> {
        self.position(v)
            .map(|i| self.vertices[(i + 1) % self.len()])
    }

    pub fn predecessor(&self, v: VertexId) -> Option<VertexId> {
        self.position(v)
            .map(|i| self.vertices[(i + self.len() - 1) % self.len()])
    }
}

/// A simple path, possibly a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPath {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl VertexPath {
    pub fn new(
        g: &Multigraph,
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
    ) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::InvalidPath("no vertices".into()));
        }
        if edges.len() + 1 != vertices.len() {
            return Err(GraphError::InvalidPath(format!(
                "{} vertices but {} edges",
                vertices.len(),
                edges.len()
            )));
        }
        let mut seen = std::collections::HashSet::with_capacity(vertices.len());
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: g.vertex_count(),
                });
            }
            if !seen.insert(v) {
                return Err(GraphError::InvalidPath(format!("vertex {v} repeated")));
            }
        }
        for (i, &e) in edges.iter().enumerate() {
            if e >= g.edge_count() {
                return Err(GraphError::InvalidPath(format!("edge {e} out of range")));
            }
            let (a, b) = g.endpoints(e);
            let (x, y) = (vertices[i], vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(GraphError::InvalidPath(format!(
                    "edge {e} does not join {x} and {y}"
                )));
            }
        }
        Ok(VertexPath { vertices, edges })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Both ends; equal for a single-vertex path.
    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families;

    fn brute_bridges(g: &Multigraph) -> Vec<EdgeId> {
        let (_, base) = g.components();
        (0..g.edge_count())
            .filter(|&skip| {
                let h = Multigraph::from_edges(
                    g.vertex_count(),
                    g.edges()
                        .iter()
                        .enumerate()
                        .filter(|&(e, _)| e != skip)
                        .map(|(_, &p)| p),
                )
                .unwrap();
                h.components().1 > base
            })
            .collect()
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(families::complete(4).max_degree(), 3);
        assert_eq!(
            Multigraph::from_edges(2, [(0, 1); 3]).unwrap().max_degree(),
            3
        );
        assert_eq!(families::path(3).max_degree(), 2);
        assert_eq!(Multigraph::new(3).max_degree(), 0);
    }

    #[test]
    fn connectivity_examples() {
        assert!(families::path(3).is_connected().unwrap());
        let two = Multigraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected().unwrap());
        assert!(Multigraph::new(1).is_connected().unwrap());
        assert_eq!(Multigraph::new(0).is_connected(), Err(GraphError::Empty));
    }

    #[test]
    fn loops_rejected() {
        let mut g = Multigraph::new(2);
        assert!(matches!(g.add_edge(1, 1), Err(GraphError::Loop { .. })));
        assert!(matches!(
            g.add_edge(0, 2),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn bipartition_examples() {
        match families::cycle(4).bipartition().unwrap() {
            Bipartition::Coloring(c) => assert_eq!(c, vec![0, 1, 0, 1]),
            other => panic!("{other:?}"),
        }
        match families::cycle(5).bipartition().unwrap() {
            Bipartition::OddCycle(c) => assert_eq!(c.len(), 5),
            other => panic!("{other:?}"),
        }
        let digon = Multigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(
            digon.bipartition().unwrap(),
            Bipartition::Coloring(vec![0, 1])
        );
        let two = Multigraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            two.bipartition(),
            Err(GraphError::Disconnected { .. })
        ));
    }

    #[test]
    fn odd_cycle_witness_in_petersen() {
        let g = families::petersen();
        let Bipartition::OddCycle(c) = g.bipartition().unwrap() else {
            panic!("petersen is not bipartite")
        };
        assert_eq!(c.len() % 2, 1);
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(families::path(3).bridges(), vec![0, 1]);
        assert!(families::cycle(4).bridges().is_empty());
        let g = Multigraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
            .unwrap();
        assert_eq!(g.bridges(), vec![6]);
        assert_eq!(brute_bridges(&g), vec![6]);
        let parallel = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(parallel.bridges(), vec![2]);
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(families::cycle(5).regularity(), Regularity::Regular(2));
        assert_eq!(
            families::path(3).regularity(),
            Regularity::Irregular { u: 0, v: 1 }
        );
        let triple = Multigraph::from_edges(2, [(0, 1); 3]).unwrap();
        assert_eq!(triple.regularity(), Regularity::Regular(3));
    }

    #[test]
    fn cycle_navigation() {
        let g = families::cycle(4);
        let c = OrientedCycle::new(&g, vec![0, 1, 2, 3], vec![0, 1, 2, 3]).unwrap();
        assert_eq!(c.successor(3), Some(0));
        assert_eq!(c.predecessor(0), Some(3));
        assert!(OrientedCycle::new(&g, vec![0, 2, 1, 3], vec![0, 1, 2, 3]).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_multigraph() -> impl Strategy<Value = Multigraph> {
            (1usize..=8).prop_flat_map(|n| {
                // offset in 1..n keeps the endpoints distinct
                let pair = (0..n, 1..n.max(2)).prop_map(move |(a, d)| (a, (a + d) % n));
                let max_edges = if n == 1 { 0 } else { 14 };
                proptest::collection::vec(pair, 0..=max_edges)
                    .prop_map(move |es| Multigraph::from_edges(n, es).unwrap())
            })
        }

        proptest! {
            #[test]
            fn degree_sum_is_twice_edge_count(g in small_multigraph()) {
                prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
            }

            #[test]
            fn bridges_match_deletion_test(g in small_multigraph()) {
                prop_assert_eq!(g.bridges(), brute_bridges(&g));
            }

            #[test]
            fn bipartition_is_sound(g in small_multigraph()) {
                if g.is_connected().unwrap() {
                    match g.bipartition().unwrap() {
                        Bipartition::Coloring(c) => {
                            for &(a, b) in g.edges() {
                                prop_assert_ne!(c[a], c[b]);
                            }
                        }
                        Bipartition::OddCycle(cyc) => {
                            prop_assert_eq!(cyc.len() % 2, 1);
                            // constructor re-checks every edge
                            prop_assert!(OrientedCycle::new(&g, cyc.vertices().to_vec(), cyc.edges().to_vec()).is_ok());
                        }
                    }
                }
            }
        }
    }
}
