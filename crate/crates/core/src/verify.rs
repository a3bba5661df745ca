//! Independent certificate checkers.
//!
//! Every checker re-derives degrees, connectivity and types from the raw
//! input and reports the first violated condition in a fixed order.

use serde::Serialize;

use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::solver::BipartiteTree;
use crate::two_factor::TwoFactor;
use crate::weak_two_factor::{FactorComponent, WeakTwoFactor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub first_violation: Option<Violation>,
}

impl VerificationReport {
    pub fn pass() -> Self {
        VerificationReport {
            passed: true,
            first_violation: None,
        }
    }

    pub fn fail(condition: &str, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        VerificationReport {
            passed: false,
            first_violation: Some(Violation {
                condition: condition.to_string(),
                vertices,
                edges,
            }),
        }
    }

    pub fn condition(&self) -> Option<&str> {
        self.first_violation.as_ref().map(|v| v.condition.as_str())
    }
}

macro_rules! check {
    ($e:expr) => {
        if let Err(report) = $e {
            return report;
        }
    };
}

type Check = Result<(), VerificationReport>;

fn fail(condition: &str, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Check {
    Err(VerificationReport::fail(condition, vertices, edges))
}

/// Tree degrees of `t`, or the first structural violation. Conditions in
/// order: `edge_range`, `types_shape`, `spanning` (when requested),
/// `edge_endpoints_typed`, `edge_count`, `bichromatic`, `connected`,
/// `anchor`.
fn tree_structure(
    g: &Multigraph,
    t: &BipartiteTree,
    spanning: bool,
) -> Result<Vec<usize>, VerificationReport> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut used = vec![false; m];
    for &e in &t.edges {
        if e >= m {
            fail("edge_range", vec![], vec![e])?;
        }
        if used[e] {
            fail("edge_range", vec![], vec![e])?;
        }
        used[e] = true;
    }
    if t.types.len() != n || t.w >= n || t.lambda > 1 {
        fail("types_shape", vec![], vec![])?;
    }
    if let Some(v) = (0..n).find(|&v| t.types[v].is_some_and(|c| c > 1)) {
        fail("types_shape", vec![v], vec![])?;
    }
    if spanning {
        let missing: Vec<VertexId> = (0..n).filter(|&v| t.types[v].is_none()).collect();
        if !missing.is_empty() {
            fail("spanning", missing, vec![])?;
        }
    }
    for &e in &t.edges {
        let (a, b) = g.endpoints(e);
        if t.types[a].is_none() || t.types[b].is_none() {
            fail("edge_endpoints_typed", vec![a, b], vec![e])?;
        }
    }
    let members: Vec<VertexId> = (0..n).filter(|&v| t.types[v].is_some()).collect();
    if t.edges.len() + 1 != members.len().max(1) || (members.is_empty() && !t.edges.is_empty()) {
        fail("edge_count", vec![], t.edges.clone())?;
    }
    for &e in &t.edges {
        let (a, b) = g.endpoints(e);
        if t.types[a] == t.types[b] {
            fail("bichromatic", vec![a, b], vec![e])?;
        }
    }
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &e in &t.edges {
        let (a, b) = g.endpoints(e);
        adj[a].push(b);
        adj[b].push(a);
    }
    if let Some(&start) = members.first() {
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        let unreached: Vec<VertexId> = members.iter().copied().filter(|&v| !seen[v]).collect();
        if !unreached.is_empty() {
            fail("connected", unreached, vec![])?;
        }
        if t.types[t.w] != Some(t.lambda) {
            fail("anchor", vec![t.w], vec![])?;
        }
    }
    Ok(adj.iter().map(Vec::len).collect())
}

/// Spanning tree, bichromatic edges, anchor respected, and every leaf of
/// maximum host degree of type 0.
pub fn is_weakly_even_tree(g: &Multigraph, t: &BipartiteTree) -> VerificationReport {
    let tree_deg = match tree_structure(g, t, true) {
        Ok(d) => d,
        Err(r) => return r,
    };
    let delta = g.degrees().into_iter().max().unwrap_or(0);
    let bad: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| tree_deg[v] == 1 && g.degree(v) == delta && t.types[v] == Some(1))
        .collect();
    if !bad.is_empty() {
        return VerificationReport::fail("weakly_even", bad, vec![]);
    }
    VerificationReport::pass()
}

/// A tree on its typed vertices whose leaves all have one type.
pub fn is_even_tree(g: &Multigraph, t: &BipartiteTree) -> VerificationReport {
    let tree_deg = match tree_structure(g, t, false) {
        Ok(d) => d,
        Err(r) => return r,
    };
    let leaves: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| tree_deg[v] == 1)
        .collect();
    if let Some(&first) = leaves.first() {
        let odd: Vec<VertexId> = leaves
            .iter()
            .copied()
            .filter(|&v| t.types[v] != t.types[first])
            .collect();
        if !odd.is_empty() {
            return VerificationReport::fail("even", vec![first, odd[0]], vec![]);
        }
    }
    VerificationReport::pass()
}

/// Tree structure on the typed vertices plus: every component of `f` is
/// either entirely inside the tree or entirely outside.
pub fn is_good_tree(g: &Multigraph, t: &BipartiteTree, f: &WeakTwoFactor) -> VerificationReport {
    if let Err(r) = tree_structure(g, t, false) {
        return r;
    }
    for c in &f.components {
        let vs = c.vertices();
        if vs.iter().any(|&v| v >= t.types.len()) {
            return VerificationReport::fail("component_range", vs.to_vec(), vec![]);
        }
        let inside = vs.iter().filter(|&&v| t.types[v].is_some()).count();
        if inside != 0 && inside != vs.len() {
            return VerificationReport::fail("component_split", vs.to_vec(), vec![]);
        }
    }
    VerificationReport::pass()
}

/// Conditions in order: `edge_range`, `component_shape`, `partition`,
/// `path_end_degree`.
pub fn is_weak_two_factor(g: &Multigraph, f: &WeakTwoFactor) -> VerificationReport {
    let delta = g.degrees().into_iter().max().unwrap_or(0);
    check!(factor_shape(
        g,
        f.components
            .iter()
            .map(|c| (c.vertices(), c.edges(), is_cycle(c)))
    ));
    for c in &f.components {
        if let FactorComponent::Path(p) = c {
            let vs = p.vertices();
            for end in [vs[0], vs[vs.len() - 1]] {
                if g.degree(end) >= delta {
                    return VerificationReport::fail("path_end_degree", vec![end], vec![]);
                }
            }
        }
    }
    VerificationReport::pass()
}

/// Cycles only, partitioning the vertices: every vertex has factor degree 2.
pub fn is_two_factor(g: &Multigraph, f: &TwoFactor) -> VerificationReport {
    check!(factor_shape(
        g,
        f.cycles.iter().map(|c| (c.vertices(), c.edges(), true))
    ));
    VerificationReport::pass()
}

fn is_cycle(c: &FactorComponent) -> bool {
    matches!(c, FactorComponent::Cycle(_))
}

fn factor_shape<'a>(
    g: &Multigraph,
    components: impl Iterator<Item = (&'a [VertexId], &'a [EdgeId], bool)> + Clone,
) -> Check {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut used = vec![false; m];
    for (_, edges, _) in components.clone() {
        for &e in edges {
            if e >= m || used[e] {
                fail("edge_range", vec![], vec![e])?;
            }
            used[e] = true;
        }
    }
    for (vs, edges, cycle) in components.clone() {
        let k = vs.len();
        let expected_edges = if cycle { k } else { k.saturating_sub(1) };
        if k == 0 || (cycle && k < 2) || edges.len() != expected_edges || vs.iter().any(|&v| v >= n)
        {
            fail("component_shape", vs.to_vec(), edges.to_vec())?;
        }
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            fail("component_shape", vs.to_vec(), edges.to_vec())?;
        }
        for (i, &e) in edges.iter().enumerate() {
            let (a, b) = g.endpoints(e);
            let (p, q) = (vs[i], vs[(i + 1) % k]);
            if !((a, b) == (p, q) || (a, b) == (q, p)) {
                fail("component_shape", vec![p, q], vec![e])?;
            }
        }
    }
    let mut count = vec![0usize; n];
    for (vs, _, _) in components {
        for &v in vs {
            count[v] += 1;
        }
    }
    let bad: Vec<VertexId> = (0..n).filter(|&v| count[v] != 1).collect();
    if !bad.is_empty() {
        fail("partition", bad, vec![])?;
    }
    Ok(())
}
