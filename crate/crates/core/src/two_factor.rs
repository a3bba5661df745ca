//! 2-factors of regular multigraphs through Tutte's f-factor gadget.
//!
//! Every vertex `v` of degree `d` is replaced by `d` external nodes (one per
//! incident edge, in incidence order) and `d - 2` internal nodes, with every
//! external node joined to every internal node. Each host edge joins the
//! external nodes of its two endpoints. A perfect matching of this auxiliary
//! graph leaves exactly two external nodes per vertex matched across host
//! edges; those host edges form the 2-factor.

use thiserror::Error;

use crate::graph::{EdgeId, GraphError, Multigraph, OrientedCycle, Regularity, VertexId};
use crate::matching::{perfect_matching, Matching, NoPerfectMatching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoFactorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} has degree {degree} < 2")]
    DegreeTooLow { vertex: VertexId, degree: usize },
    #[error("graph is not regular: vertices {u} and {v} have different degrees")]
    Irregular { u: VertexId, v: VertexId },
    /// The gadget graph has no perfect matching; the maximum matching found
    /// is attached as the deficiency certificate.
    #[error("no 2-factor: gadget matching covers {} of {} nodes", 2 * .deficiency.size(), .deficiency.mates().len())]
    NoTwoFactor { deficiency: Box<Matching> },
}

#[derive(Debug, Clone)]
pub struct TutteGadget {
    pub aux: Multigraph,
    /// Host edge id for every aux edge that images a host edge.
    pub edge_map: Vec<Option<EdgeId>>,
    /// External nodes per host vertex, in the host's incidence order.
    pub external: Vec<Vec<VertexId>>,
    pub internal: Vec<Vec<VertexId>>,
}

/// Builds the gadget for `f = 2`. Gadget edges are numbered first, vertex by
/// vertex, then the host-edge images in host edge order.
pub fn tutte_gadget(g: &Multigraph) -> Result<TutteGadget, TwoFactorError> {
    for v in g.vertices() {
        if g.degree(v) < 2 {
            return Err(TwoFactorError::DegreeTooLow {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    let mut aux = Multigraph::new(0);
    let mut external = Vec::with_capacity(g.vertex_count());
    let mut internal = Vec::with_capacity(g.vertex_count());
    // external node of (vertex, position in incidence list)
    for v in g.vertices() {
        let d = g.degree(v);
        external.push((0..d).map(|_| aux.add_vertex()).collect::<Vec<_>>());
        internal.push((0..d - 2).map(|_| aux.add_vertex()).collect::<Vec<_>>());
    }
    let mut edge_map = Vec::new();
    for v in g.vertices() {
        for &x in &external[v] {
            for &i in &internal[v] {
                aux.add_edge(x, i).expect("distinct gadget nodes");
                edge_map.push(None);
            }
        }
    }
    let mut slot: Vec<[VertexId; 2]> = vec![[usize::MAX; 2]; g.edge_count()];
    for v in g.vertices() {
        for (k, &(e, _)) in g.incident(v).iter().enumerate() {
            let (a, _) = g.endpoints(e);
            slot[e][usize::from(a != v)] = external[v][k];
        }
    }
    for (e, [a, b]) in slot.into_iter().enumerate() {
        aux.add_edge(a, b).expect("distinct external nodes");
        edge_map.push(Some(e));
    }
    Ok(TutteGadget {
        aux,
        edge_map,
        external,
        internal,
    })
}

/// Disjoint oriented cycles covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    pub cycles: Vec<OrientedCycle>,
}

impl TwoFactor {
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut all: Vec<EdgeId> = self
            .cycles
            .iter()
            .flat_map(|c| c.edges().iter().copied())
            .collect();
        all.sort_unstable();
        all
    }
}

/// Whether the classical sufficient condition guarantees a 2-factor:
/// connected, `r`-regular with `r >= 2`, and at most `r - 1` cutedges
/// (2-edge-connected graphs are the zero case).
pub fn factor_guaranteed(g: &Multigraph) -> bool {
    match g.regularity() {
        Regularity::Regular(r) if r >= 2 => {
            g.is_connected().unwrap_or(false) && g.bridges().len() < r
        }
        _ => false,
    }
}

pub fn two_factor(g: &Multigraph) -> Result<TwoFactor, TwoFactorError> {
    g.require_connected()?;
    match g.regularity() {
        Regularity::Irregular { u, v } => return Err(TwoFactorError::Irregular { u, v }),
        Regularity::Regular(r) if r < 2 => {
            return Err(TwoFactorError::DegreeTooLow {
                vertex: 0,
                degree: r,
            })
        }
        Regularity::Regular(_) => {}
    }
    let gadget = tutte_gadget(g)?;
    let matching = match perfect_matching(&gadget.aux) {
        Ok(m) => m,
        Err(NoPerfectMatching::Deficient(m)) => {
            return Err(TwoFactorError::NoTwoFactor {
                deficiency: Box::new(m),
            })
        }
        Err(NoPerfectMatching::OddOrder(_)) => {
            // sum of (2d - 2) over vertices is always even
            unreachable!("gadget graphs have even order")
        }
    };
    let selected: Vec<EdgeId> = matching
        .edges()
        .iter()
        .filter_map(|&ae| gadget.edge_map[ae])
        .collect();
    Ok(TwoFactor {
        cycles: decompose_cycles(g, &selected),
    })
}

/// Splits an edge set where every vertex has degree 2 into oriented cycles.
/// Each cycle starts at its smallest vertex and leaves along its
/// lower-id edge.
fn decompose_cycles(g: &Multigraph, selected: &[EdgeId]) -> Vec<OrientedCycle> {
    let n = g.vertex_count();
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::with_capacity(2); n];
    for &e in selected {
        let (a, b) = g.endpoints(e);
        at[a].push(e);
        at[b].push(e);
    }
    for list in &mut at {
        assert_eq!(
            list.len(),
            2,
            "selected edges must have degree 2 everywhere"
        );
        list.sort_unstable();
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        seen[start] = true;
        let mut cur = start;
        let mut via = at[start][0];
        loop {
            edges.push(via);
            let next = g.other_end(via, cur);
            if next == start {
                break;
            }
            seen[next] = true;
            vertices.push(next);
            via = if at[next][0] == via {
                at[next][1]
            } else {
                at[next][0]
            };
            cur = next;
        }
        cycles.push(OrientedCycle::new(g, vertices, edges).expect("walk closes a cycle"));
    }
    cycles
}
