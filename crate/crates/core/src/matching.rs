//! Maximum cardinality matching in general graphs (Edmonds' blossom method).
//!
//! Parallel edges collapse to their lowest-id representative before the
//! search. Scans run in ascending vertex id and ascending edge id, so the
//! result is a deterministic function of the input graph.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, VertexId};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
    edges: Vec<EdgeId>,
}

impl Matching {
    /// Matched edge ids, ascending.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate[v]
    }

    pub fn mates(&self) -> &[Option<VertexId>] {
        &self.mate
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Structural check against `g`: edges exist, are vertex-disjoint and
    /// agree with a symmetric mate map.
    pub fn is_valid_for(&self, g: &Multigraph) -> bool {
        if self.mate.len() != g.vertex_count() {
            return false;
        }
        let mut seen = vec![false; g.vertex_count()];
        for &e in &self.edges {
            if e >= g.edge_count() {
                return false;
            }
            let (a, b) = g.endpoints(e);
            if seen[a] || seen[b] || self.mate[a] != Some(b) || self.mate[b] != Some(a) {
                return false;
            }
            seen[a] = true;
            seen[b] = true;
        }
        (0..g.vertex_count()).all(|v| seen[v] == self.mate[v].is_some())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NoPerfectMatching {
    #[error("odd number of vertices ({0})")]
    OddOrder(usize),
    #[error("maximum matching covers only {} of {} vertices", 2 * .0.size(), .0.mates().len())]
    Deficient(Matching),
}

pub fn maximum_matching(g: &Multigraph) -> Matching {
    let n = g.vertex_count();
    let adj = collapsed_adjacency(g);
    let mut search = Search::new(&adj);

    // greedy start: saves most augmenting searches on large gadget graphs
    for (v, nbrs) in adj.iter().enumerate() {
        if search.mate[v] == NONE {
            if let Some(&(u, _)) = nbrs.iter().find(|&&(u, _)| search.mate[u] == NONE) {
                search.mate[v] = u;
                search.mate[u] = v;
            }
        }
    }
    for root in 0..n {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }

    let mut edges = Vec::new();
    let mut mate = vec![None; n];
    for v in 0..n {
        let u = search.mate[v];
        if u != NONE {
            mate[v] = Some(u);
            if v < u {
                let e = adj[v]
                    .iter()
                    .find(|&&(w, _)| w == u)
                    .map(|&(_, e)| e)
                    .expect("matched pair is adjacent");
                edges.push(e);
            }
        }
    }
    edges.sort_unstable();
    Matching { mate, edges }
}

pub fn perfect_matching(g: &Multigraph) -> Result<Matching, NoPerfectMatching> {
    if g.vertex_count() % 2 == 1 {
        return Err(NoPerfectMatching::OddOrder(g.vertex_count()));
    }
    let m = maximum_matching(g);
    if m.is_perfect() {
        Ok(m)
    } else {
        Err(NoPerfectMatching::Deficient(m))
    }
}

/// Neighbours with their lowest connecting edge id, in ascending edge order.
fn collapsed_adjacency(g: &Multigraph) -> Vec<Vec<(VertexId, EdgeId)>> {
    g.vertices()
        .map(|v| {
            let mut nb: Vec<(VertexId, EdgeId)> =
                g.incident(v).iter().map(|&(e, u)| (u, e)).collect();
            nb.sort_unstable();
            nb.dedup_by_key(|&mut (u, _)| u);
            nb.sort_unstable_by_key(|&(_, e)| e);
            nb
        })
        .collect()
}

/// Alternating-tree search state. Per-search resets only touch the vertices
/// the previous search reached.
struct Search<'a> {
    adj: &'a [Vec<(VertexId, EdgeId)>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    touched: Vec<usize>,
    is_touched: Vec<bool>,
    scratch: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<(VertexId, EdgeId)>]) -> Self {
        let n = adj.len();
        Search {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            even: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            touched: Vec::new(),
            is_touched: vec![false; n],
            scratch: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.is_touched[v] {
            self.is_touched[v] = true;
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.even[v] = false;
            self.is_touched[v] = false;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        self.reset();
        self.touch(root);
        self.even[root] = true;
        self.queue.push_back(root);
        let adj = self.adj;
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in &adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_even =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_even {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.touch(to);
                    self.parent[to] = v;
                    let m = self.mate[to];
                    if m == NONE {
                        return Some(to);
                    }
                    self.touch(m);
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn contract(&mut self, v: usize, to: usize) {
        let cur = self.lca(v, to);
        self.scratch.clear();
        self.mark_path(v, cur, to);
        self.mark_path(to, cur, v);
        for k in 0..self.touched.len() {
            let i = self.touched[k];
            if self.in_blossom[self.base[i]] {
                self.base[i] = cur;
                if !self.even[i] {
                    self.even[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
        for k in 0..self.scratch.len() {
            let b = self.scratch[k];
            self.in_blossom[b] = false;
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.scratch.clear();
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            self.scratch.push(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                break;
            }
            b = self.parent[self.mate[b]];
        }
        for k in 0..self.scratch.len() {
            let x = self.scratch[k];
            self.lca_mark[x] = false;
        }
        b
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let bv = self.base[v];
            let bm = self.base[self.mate[v]];
            self.in_blossom[bv] = true;
            self.in_blossom[bm] = true;
            self.scratch.push(bv);
            self.scratch.push(bm);
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families;

    /// Exhaustive maximum matching size: branch on the lowest vertex that
    /// is still undecided.
    fn brute_max(g: &Multigraph) -> usize {
        fn go(g: &Multigraph, v: usize, used: &mut Vec<bool>) -> usize {
            let n = g.vertex_count();
            let Some(v) = (v..n).find(|&x| !used[x]) else {
                return 0;
            };
            used[v] = true;
            let mut best = go(g, v + 1, used);
            for &(_, u) in g.incident(v) {
                if !used[u] {
                    used[u] = true;
                    best = best.max(1 + go(g, v + 1, used));
                    used[u] = false;
                }
            }
            used[v] = false;
            best
        }
        go(g, 0, &mut vec![false; g.vertex_count()])
    }

    #[test]
    fn small_examples() {
        assert_eq!(maximum_matching(&families::cycle(4)).size(), 2);
        assert_eq!(maximum_matching(&families::cycle(5)).size(), 2);
        let petersen = families::petersen();
        assert_eq!(brute_max(&petersen), 5);
        let m = maximum_matching(&petersen);
        assert_eq!(m.size(), 5);
        assert!(m.is_valid_for(&petersen));
    }

    #[test]
    fn perfect_examples() {
        let edge = families::path(2);
        assert_eq!(perfect_matching(&edge).unwrap().edges(), &[0]);
        assert_eq!(
            perfect_matching(&families::cycle(3)),
            Err(NoPerfectMatching::OddOrder(3))
        );
        let k4 = families::complete(4);
        let m = perfect_matching(&k4).unwrap();
        assert!(m.is_perfect() && m.is_valid_for(&k4));
        // K4's three perfect matchings as edge-id pairs
        let all = [[0, 5], [1, 4], [2, 3]];
        assert!(all.iter().any(|p| p == m.edges()));
    }

    #[test]
    fn deficient_certificate() {
        let star = families::star(3);
        match perfect_matching(&star) {
            Err(NoPerfectMatching::Deficient(m)) => assert_eq!(m.size(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parallel_edges_report_lowest_id() {
        let g = Multigraph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(maximum_matching(&g).edges(), &[0]);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with pendants 3 (at 0) and 4 (at 2) and tail 1-5
        let g =
            Multigraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (2, 4), (1, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).size(), 3);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph() -> impl Strategy<Value = Multigraph> {
            (1usize..=10).prop_flat_map(|n| {
                // offset in 1..n keeps the endpoints distinct
                let pair = (0..n, 1..n.max(2)).prop_map(move |(a, d)| (a, (a + d) % n));
                let max_edges = if n == 1 { 0 } else { 20 };
                proptest::collection::vec(pair, 0..=max_edges)
                    .prop_map(move |es| Multigraph::from_edges(n, es).unwrap())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(400))]
            #[test]
            fn cardinality_is_optimal(g in graph()) {
                let m = maximum_matching(&g);
                prop_assert!(m.is_valid_for(&g));
                prop_assert_eq!(m.size(), brute_max(&g));
            }
        }
    }
}
