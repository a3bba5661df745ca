//! Spanning weakly even (w, λ)-trees.
//!
//! `solve` splits the graph at its bridges into 2-edge-connected blocks,
//! walks the block tree outward from the block of `w`, and solves each block
//! with an anchor chosen so that every bridge joins opposite types. Blocks are
//! handled by `solve_2ec`, the weak-2-factor augmentation loop in [`grower`].

mod grower;

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, Multigraph, VertexId};
use crate::verify::is_weakly_even_tree;
use crate::weak_two_factor::WeakFactorError;

pub use grower::{
    y_out_edge, AdmissibleState, Assignment, Augmentation, ComponentKind, Entry, Grower, Recipe,
    Seed, SolveStats,
};

/// A tree with a (w, λ)-bipartition. `types[v]` is `None` for vertices
/// outside the tree; the null tree has no typed vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteTree {
    /// Tree edge ids, ascending.
    pub edges: Vec<EdgeId>,
    pub types: Vec<Option<u8>>,
    pub w: VertexId,
    pub lambda: u8,
}

impl BipartiteTree {
    pub fn null(n: usize, w: VertexId, lambda: u8) -> Self {
        BipartiteTree {
            edges: Vec::new(),
            types: vec![None; n],
            w,
            lambda,
        }
    }

    /// Types the edge set by breadth-first search from `w`. `None` unless the
    /// edges form a tree containing `w` with every edge bichromatic.
    pub fn from_edges(
        g: &Multigraph,
        mut edges: Vec<EdgeId>,
        w: VertexId,
        lambda: u8,
    ) -> Option<Self> {
        let n = g.vertex_count();
        if w >= n || lambda > 1 || edges.iter().any(|&e| e >= g.edge_count()) {
            return None;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for &e in &edges {
            let (a, b) = g.endpoints(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut types = vec![None; n];
        types[w] = Some(lambda);
        let mut queue = VecDeque::from([w]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            let t = types[v].unwrap();
            for &u in &adj[v] {
                match types[u] {
                    None => {
                        types[u] = Some(1 - t);
                        reached += 1;
                        queue.push_back(u);
                    }
                    Some(tu) if tu == t => return None,
                    Some(_) => {}
                }
            }
        }
        if reached != edges.len() + 1 {
            return None;
        }
        Some(BipartiteTree {
            edges,
            types,
            w,
            lambda,
        })
    }

    pub fn is_null(&self) -> bool {
        self.types.iter().all(Option::is_none)
    }

    /// Number of vertices in the tree.
    pub fn order(&self) -> usize {
        self.types.iter().filter(|t| t.is_some()).count()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.types[v].is_some()
    }

    /// Every vertex typed: the tree spans its host.
    pub fn types_dense(&self) -> Option<Vec<u8>> {
        self.types.iter().copied().collect()
    }
}

/// A tree whose vertex set is a union of weak-2-factor components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodTree {
    pub tree: BipartiteTree,
    /// Indices of the absorbed components, ascending.
    pub components: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SolveOutcome {
    Tree(BipartiteTree),
    /// The graph is `r`-regular bipartite with the given proper coloring.
    NoSolution {
        r: usize,
        coloring: Vec<u8>,
    },
}

impl SolveOutcome {
    pub fn tree(&self) -> Option<&BipartiteTree> {
        match self {
            SolveOutcome::Tree(t) => Some(t),
            SolveOutcome::NoSolution { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("lambda must be 0 or 1, got {0}")]
    InvalidLambda(u8),
    #[error("graph has {0} bridge(s); a 2-edge-connected graph is required")]
    NotTwoEdgeConnected(usize),
    #[error("graph is regular bipartite")]
    RegularBipartite,
    #[error(transparent)]
    WeakFactor(#[from] WeakFactorError),
    #[error("internal contract failure: {0}")]
    Contract(String),
}

fn check_anchor(g: &Multigraph, w: VertexId, lambda: u8) -> Result<(), SolveError> {
    if lambda > 1 {
        return Err(SolveError::InvalidLambda(lambda));
    }
    g.require_connected()?;
    if w >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange {
            vertex: w,
            n: g.vertex_count(),
        }
        .into());
    }
    Ok(())
}

/// A spanning weakly even (w, λ)-tree, or the regular-bipartite certificate
/// showing none exists.
pub fn solve(g: &Multigraph, w: VertexId, lambda: u8) -> Result<SolveOutcome, SolveError> {
    solve_instrumented(g, w, lambda).map(|(outcome, _)| outcome)
}

/// As [`solve`], also returning the statistics of every block solved by the
/// augmentation loop, in block-visit order.
pub fn solve_instrumented(
    g: &Multigraph,
    w: VertexId,
    lambda: u8,
) -> Result<(SolveOutcome, Vec<SolveStats>), SolveError> {
    check_anchor(g, w, lambda)?;
    if let Some((r, coloring)) = g.regular_bipartite()? {
        return Ok((SolveOutcome::NoSolution { r, coloring }, Vec::new()));
    }
    let bridges = g.bridges();
    let (tree, stats) = if bridges.is_empty() {
        let (t, s) = Grower::new(g, w, lambda)?.run()?;
        (t, vec![s])
    } else {
        solve_blocks(g, w, lambda, &bridges)?
    };
    let report = is_weakly_even_tree(g, &tree);
    if !report.passed {
        return Err(SolveError::Contract(format!(
            "solver output failed verification: {report:?}"
        )));
    }
    Ok((SolveOutcome::Tree(tree), stats))
}

/// The augmentation loop on a 2-edge-connected graph that is not regular
/// bipartite.
pub fn solve_2ec(g: &Multigraph, w: VertexId, lambda: u8) -> Result<BipartiteTree, SolveError> {
    solve_2ec_instrumented(g, w, lambda).map(|(t, _)| t)
}

pub fn solve_2ec_instrumented(
    g: &Multigraph,
    w: VertexId,
    lambda: u8,
) -> Result<(BipartiteTree, SolveStats), SolveError> {
    check_anchor(g, w, lambda)?;
    if g.regular_bipartite()?.is_some() {
        return Err(SolveError::RegularBipartite);
    }
    Grower::new(g, w, lambda)?.run()
}

/// Bridge recursion, unrolled: the blocks (components of `g` minus its
/// bridges) are visited breadth-first from the block of `w`. A block entered
/// through bridge `x1x2` is anchored at `x2` with the type opposite to `x1`.
fn solve_blocks(
    g: &Multigraph,
    w: VertexId,
    lambda: u8,
    bridges: &[EdgeId],
) -> Result<(BipartiteTree, Vec<SolveStats>), SolveError> {
    let n = g.vertex_count();
    let delta = g.max_degree();
    let mut is_bridge = vec![false; g.edge_count()];
    for &e in bridges {
        is_bridge[e] = true;
    }

    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    for s in 0..n {
        if block_of[s] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![s];
        block_of[s] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &(e, u) in g.incident(v) {
                if !is_bridge[e] && block_of[u] == usize::MAX {
                    block_of[u] = id;
                    members.push(u);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    let mut local = vec![0usize; n];
    for members in &blocks {
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
    }
    let mut block_edges: Vec<Vec<EdgeId>> = vec![Vec::new(); blocks.len()];
    for (e, &(a, _)) in g.edges().iter().enumerate() {
        if !is_bridge[e] {
            block_edges[block_of[a]].push(e);
        }
    }

    let mut types: Vec<Option<u8>> = vec![None; n];
    let mut edges: Vec<EdgeId> = Vec::with_capacity(n.saturating_sub(1));
    let mut stats = Vec::new();
    let mut visited = vec![false; blocks.len()];
    let mut queue = VecDeque::from([(block_of[w], w, lambda)]);
    visited[block_of[w]] = true;
    while let Some((b, anchor, t)) = queue.pop_front() {
        let members = &blocks[b];
        if members.len() == 1 {
            types[anchor] = Some(t);
        } else {
            let sub = Multigraph::from_edges(
                members.len(),
                block_edges[b].iter().map(|&e| {
                    let (x, y) = g.endpoints(e);
                    (local[x], local[y])
                }),
            )?;
            let block_tree = if sub.regular_bipartite()?.is_some() {
                if sub.max_degree() >= delta {
                    return Err(SolveError::Contract(format!(
                        "regular bipartite block {b} has maximum degree {} >= {delta}",
                        sub.max_degree()
                    )));
                }
                bfs_tree(&sub, local[anchor], t)
            } else {
                let (tree, s) = Grower::new(&sub, local[anchor], t)?.run()?;
                stats.push(s);
                tree
            };
            edges.extend(block_tree.edges.iter().map(|&e| block_edges[b][e]));
            for (i, &v) in members.iter().enumerate() {
                types[v] = block_tree.types[i];
            }
        }
        for &v in members {
            let tv = types[v].expect("block vertices are typed");
            for &(e, u) in g.incident(v) {
                if is_bridge[e] && !visited[block_of[u]] {
                    visited[block_of[u]] = true;
                    edges.push(e);
                    queue.push_back((block_of[u], u, 1 - tv));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok((
        BipartiteTree {
            edges,
            types,
            w,
            lambda,
        },
        stats,
    ))
}

/// Breadth-first spanning tree typed from the anchor.
fn bfs_tree(g: &Multigraph, w: VertexId, lambda: u8) -> BipartiteTree {
    let n = g.vertex_count();
    let mut types = vec![None; n];
    let mut edges = Vec::with_capacity(n - 1);
    types[w] = Some(lambda);
    let mut queue = VecDeque::from([w]);
    while let Some(v) = queue.pop_front() {
        let t = types[v].unwrap();
        for &(e, u) in g.incident(v) {
            if types[u].is_none() {
                types[u] = Some(1 - t);
                edges.push(e);
                queue.push_back(u);
            }
        }
    }
    edges.sort_unstable();
    BipartiteTree {
        edges,
        types,
        w,
        lambda,
    }
}
