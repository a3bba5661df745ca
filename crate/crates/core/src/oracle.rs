//! Brute-force ground truth: spanning-tree enumeration and an exhaustive
//! weakly-even-tree search.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, Multigraph, VertexId};
use crate::solver::BipartiteTree;
use crate::verify::is_weakly_even_tree;

pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {count} spanning trees, above the cap of {cap}")]
    CapExceeded { count: BigInt, cap: u64 },
    #[error("lambda must be 0 or 1, got {0}")]
    InvalidLambda(u8),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub exists: bool,
    pub witness: Option<BipartiteTree>,
    pub trees_examined: u64,
}

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the Laplacian with row and column 0 removed, computed exactly by
/// fraction-free (Bareiss) elimination.
pub fn spanning_tree_count(g: &Multigraph) -> BigInt {
    let n = g.vertex_count();
    if n <= 1 {
        return BigInt::from(n);
    }
    let k = n - 1;
    let mut a = vec![vec![BigInt::zero(); k]; k];
    for &(u, v) in g.edges() {
        for (p, q) in [(u, v), (v, u)] {
            if p > 0 {
                a[p - 1][p - 1] += 1;
                if q > 0 {
                    a[p - 1][q - 1] -= 1;
                }
            }
        }
    }
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for i in 0..k {
        if a[i][i].is_zero() {
            let Some(r) = (i + 1..k).find(|&r| !a[r][i].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(i, r);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let t = &a[r][c] * &a[i][i] - &a[r][i] * &a[i][c];
                a[r][c] = t / &prev;
            }
        }
        prev = a[i][i].clone();
    }
    sign * prev
}

/// Calls `visit` once per spanning tree (ascending edge ids), stopping early
/// when it breaks. Trees are produced by branching on edges in ascending id,
/// taking an edge before leaving it out. Refuses graphs whose tree count
/// exceeds `cap`. Returns the number of trees visited.
pub fn enumerate_spanning_trees(
    g: &Multigraph,
    cap: u64,
    mut visit: impl FnMut(&[EdgeId]) -> ControlFlow<()>,
) -> Result<u64, OracleError> {
    g.require_connected()?;
    let count = spanning_tree_count(g);
    if count > BigInt::from(cap) {
        return Err(OracleError::CapExceeded { count, cap });
    }
    let mut walk = Walk {
        g,
        chosen: Vec::new(),
        visited: 0,
    };
    let parent: Vec<VertexId> = (0..g.vertex_count()).collect();
    let _ = walk.branch(0, parent, &mut visit);
    Ok(walk.visited)
}

struct Walk<'a> {
    g: &'a Multigraph,
    chosen: Vec<EdgeId>,
    visited: u64,
}

fn find(parent: &mut [VertexId], mut v: VertexId) -> VertexId {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

impl Walk<'_> {
    fn branch(
        &mut self,
        e: EdgeId,
        mut parent: Vec<VertexId>,
        visit: &mut impl FnMut(&[EdgeId]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.chosen.len() + 1 == self.g.vertex_count() {
            self.visited += 1;
            return visit(&self.chosen);
        }
        if e == self.g.edge_count() {
            return ControlFlow::Continue(());
        }
        let (a, b) = self.g.endpoints(e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            let mut joined = parent.clone();
            joined[ra] = rb;
            self.chosen.push(e);
            let flow = self.branch(e + 1, joined, visit);
            self.chosen.pop();
            flow?;
        }
        if self.still_connected(e + 1, &parent) {
            self.branch(e + 1, parent, visit)?;
        }
        ControlFlow::Continue(())
    }

    /// Whether the chosen edges plus all edges from `from` on still connect
    /// the graph.
    fn still_connected(&self, from: EdgeId, parent: &[VertexId]) -> bool {
        let mut p = parent.to_vec();
        let mut parts = (0..p.len()).filter(|&v| find(&mut p, v) == v).count();
        for e in from..self.g.edge_count() {
            let (a, b) = self.g.endpoints(e);
            let (ra, rb) = (find(&mut p, a), find(&mut p, b));
            if ra != rb {
                p[ra] = rb;
                parts -= 1;
                if parts == 1 {
                    return true;
                }
            }
        }
        parts == 1
    }
}

/// Exhaustive search for a spanning weakly even (w, λ)-tree.
pub fn exists_weakly_even(
    g: &Multigraph,
    w: VertexId,
    lambda: u8,
    cap: u64,
) -> Result<OracleVerdict, OracleError> {
    if lambda > 1 {
        return Err(OracleError::InvalidLambda(lambda));
    }
    if w >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange {
            vertex: w,
            n: g.vertex_count(),
        }
        .into());
    }
    let mut witness = None;
    let trees_examined = enumerate_spanning_trees(g, cap, |edges| {
        let t = BipartiteTree::from_edges(g, edges.to_vec(), w, lambda)
            .expect("enumerated edges form a tree");
        if is_weakly_even_tree(g, &t).passed {
            witness = Some(t);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(OracleVerdict {
        exists: witness.is_some(),
        witness,
        trees_examined,
    })
}
