//! The augmentation loop on a 2-edge-connected graph.
//!
//! A good tree (vertex set = union of weak-2-factor components) grows until
//! it spans. Each step absorbs at least one component:
//!
//! * `init_tree` seeds the tree from the component of `w` when possible;
//! * `extend_simple` absorbs components hanging off type-0 tree vertices, and
//!   paths and odd cycles hanging off type-1 tree vertices;
//! * otherwise `admissible_closure` assigns bipartitions to the even cycles
//!   reachable along Y-to-X edges and `find_augmentation` picks a recipe.
//!
//! Notation: for a cycle `C` and `u` on it, `open_after(C, u)` is the path
//! `u⁺Cu` (every cycle edge but `uu⁺`) and `open_around(C, u)` is the path
//! `u⁺Cu⁻` (every cycle edge but the two at `u`).

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use super::{BipartiteTree, GoodTree, SolveError};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::verify::is_good_tree;
use crate::weak_two_factor::{weak_two_factor, FactorComponent, WeakTwoFactor};

/// Full structural checks after every step, in debug builds, up to this order.
const STEP_CHECK_LIMIT: usize = 1500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Path,
    EvenCycle,
    OddCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    InitPath,
    InitOddCycle,
    InitDeficientY0,
    InitY0Edge,
    AbsorbFromX0,
    AbsorbPathOrOddFromY0,
    DeficientY,
    Case1Outside,
    Case1IntoY0,
    Case2Common,
    Case2Disjoint,
    Case2Pivot,
}

/// One growth step: the components absorbed and the edges that join them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Augmentation {
    pub recipe: Recipe,
    /// Absorbed components; for chain recipes, in chain order.
    pub components: Vec<usize>,
    /// New tree edges.
    pub edges: Vec<EdgeId>,
    /// Non-factor edges among `edges` (entry edges and the closing edge).
    pub witness: Vec<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub edge: EdgeId,
    /// Y-side vertex (on the parent cycle, or in the tree).
    pub from: VertexId,
    /// X-side vertex on the entered cycle.
    pub to: VertexId,
}

/// Bipartition of one even cycle: the vertex at position `p` lies in X iff
/// `p % 2 == x_parity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub x_parity: u8,
    pub entry: Option<Entry>,
    pub parent: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Seed {
    /// The tree is null and the sequences start at the cycle of `w`.
    NullTree { c0: usize },
    /// Entry edges from type-1 tree vertices.
    Tree { entries: Vec<EdgeId> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleState {
    /// Indexed by component.
    pub assignment: Vec<Option<Assignment>>,
    /// Assigned components in breadth-first order.
    pub order: Vec<usize>,
    pub seed: Seed,
}

impl AdmissibleState {
    /// Components from the root of `c`'s sequence down to `c`.
    pub fn chain(&self, c: usize) -> Vec<usize> {
        let mut out = vec![c];
        let mut cur = c;
        while let Some(p) = self.assignment[cur].as_ref().and_then(|a| a.parent) {
            out.push(p);
            cur = p;
        }
        out.reverse();
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub vertices: usize,
    pub f_components: usize,
    pub f_paths: usize,
    pub f_even_cycles: usize,
    pub f_odd_cycles: usize,
    /// Applied augmentations, including a nonnull initial tree.
    pub steps: usize,
    pub closures: usize,
    pub recipes: BTreeMap<Recipe, usize>,
}

/// Some edge from `y` to a vertex outside `x ∪ y`, scanning `y` in order and
/// each vertex's edges by ascending id.
pub fn y_out_edge(g: &Multigraph, x: &[VertexId], y: &[VertexId]) -> Option<EdgeId> {
    let mut member = vec![false; g.vertex_count()];
    for &v in x.iter().chain(y) {
        member[v] = true;
    }
    y.iter()
        .flat_map(|&v| g.incident(v).iter())
        .find(|&&(_, u)| !member[u])
        .map(|&(e, _)| e)
}

pub struct Grower<'g> {
    g: &'g Multigraph,
    delta: usize,
    w: VertexId,
    lambda: u8,
    factor: WeakTwoFactor,
    kind: Vec<ComponentKind>,
    comp_of: Vec<usize>,
    pos_of: Vec<usize>,
    absorbed: Vec<bool>,
    types: Vec<Option<u8>>,
    tree_edges: Vec<EdgeId>,
    tree_deg: Vec<usize>,
    order: usize,
    worklist: VecDeque<VertexId>,
    stats: SolveStats,
    check_steps: bool,
}

impl<'g> Grower<'g> {
    /// Computes the weak 2-factor. The caller guarantees `g` is not regular
    /// bipartite; `w` and `lambda` are assumed in range.
    pub fn new(g: &'g Multigraph, w: VertexId, lambda: u8) -> Result<Self, SolveError> {
        let bridges = g.bridges();
        if !bridges.is_empty() {
            return Err(SolveError::NotTwoEdgeConnected(bridges.len()));
        }
        let factor = weak_two_factor(g)?;
        let n = g.vertex_count();
        let mut comp_of = vec![usize::MAX; n];
        let mut pos_of = vec![0; n];
        let mut kind = Vec::with_capacity(factor.components.len());
        let mut stats = SolveStats {
            vertices: n,
            f_components: factor.components.len(),
            ..SolveStats::default()
        };
        for (c, comp) in factor.components.iter().enumerate() {
            for (p, &v) in comp.vertices().iter().enumerate() {
                comp_of[v] = c;
                pos_of[v] = p;
            }
            let k = match comp {
                FactorComponent::Path(_) => ComponentKind::Path,
                FactorComponent::Cycle(cy) if cy.is_even() => ComponentKind::EvenCycle,
                FactorComponent::Cycle(_) => ComponentKind::OddCycle,
            };
            match k {
                ComponentKind::Path => stats.f_paths += 1,
                ComponentKind::EvenCycle => stats.f_even_cycles += 1,
                ComponentKind::OddCycle => stats.f_odd_cycles += 1,
            }
            kind.push(k);
        }
        Ok(Grower {
            g,
            delta: g.max_degree(),
            w,
            lambda,
            kind,
            comp_of,
            pos_of,
            absorbed: vec![false; factor.components.len()],
            factor,
            types: vec![None; n],
            tree_edges: Vec::new(),
            tree_deg: vec![0; n],
            order: 0,
            worklist: VecDeque::new(),
            stats,
            check_steps: cfg!(debug_assertions) && n <= STEP_CHECK_LIMIT,
        })
    }

    pub fn factor(&self) -> &WeakTwoFactor {
        &self.factor
    }

    pub fn component_kind(&self, c: usize) -> ComponentKind {
        self.kind[c]
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.comp_of[v]
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    pub fn tree(&self) -> BipartiteTree {
        let mut edges = self.tree_edges.clone();
        edges.sort_unstable();
        BipartiteTree {
            edges,
            types: self.types.clone(),
            w: self.w,
            lambda: self.lambda,
        }
    }

    pub fn good_tree(&self) -> GoodTree {
        let components = (0..self.absorbed.len())
            .filter(|&c| self.absorbed[c])
            .collect();
        GoodTree {
            tree: self.tree(),
            components,
        }
    }

    pub fn is_spanning(&self) -> bool {
        self.order == self.g.vertex_count()
    }

    /// Runs the whole loop to a spanning tree.
    pub fn run(mut self) -> Result<(BipartiteTree, SolveStats), SolveError> {
        if let Some(a) = self.init_tree() {
            self.apply_augmentation(a)?;
        }
        loop {
            self.extend_simple()?;
            if self.is_spanning() {
                break;
            }
            let state = self.admissible_closure();
            let a = self.find_augmentation(&state)?;
            self.apply_augmentation(a)?;
        }
        if self.stats.steps > self.stats.f_components {
            return Err(SolveError::Contract(format!(
                "{} steps exceed {} factor components",
                self.stats.steps, self.stats.f_components
            )));
        }
        let tree = self.tree();
        Ok((tree, self.stats))
    }

    fn vertices(&self, c: usize) -> &[VertexId] {
        self.factor.components[c].vertices()
    }

    fn all_edges(&self, c: usize) -> Vec<EdgeId> {
        self.factor.components[c].edges().to_vec()
    }

    fn successor(&self, v: VertexId) -> VertexId {
        let vs = self.vertices(self.comp_of[v]);
        vs[(self.pos_of[v] + 1) % vs.len()]
    }

    /// `u⁺Cu`: every edge of `u`'s cycle except `uu⁺`.
    fn open_after(&self, u: VertexId) -> Vec<EdgeId> {
        let es = self.factor.components[self.comp_of[u]].edges();
        let k = es.len();
        (1..k).map(|i| es[(self.pos_of[u] + i) % k]).collect()
    }

    /// `u⁺Cu⁻`: every edge of `u`'s cycle except the two at `u`.
    fn open_around(&self, u: VertexId) -> Vec<EdgeId> {
        let es = self.factor.components[self.comp_of[u]].edges();
        let k = es.len();
        (1..k - 1).map(|i| es[(self.pos_of[u] + i) % k]).collect()
    }

    fn in_x(&self, a: &Assignment, v: VertexId) -> bool {
        (self.pos_of[v] % 2) as u8 == a.x_parity
    }

    fn in_y(&self, state: &AdmissibleState, v: VertexId) -> bool {
        match &state.assignment[self.comp_of[v]] {
            Some(a) => !self.in_x(a, v),
            None => false,
        }
    }

    /// Parity placing `w` at type `lambda` on its even cycle.
    fn anchor_parity(&self) -> u8 {
        let p = (self.pos_of[self.w] % 2) as u8;
        if self.lambda == 0 {
            p
        } else {
            1 - p
        }
    }

    /// The first tree, built from the component of `w`; `None` when that
    /// component is an even cycle whose Y side is independent and of maximum
    /// degree.
    pub fn init_tree(&self) -> Option<Augmentation> {
        let w = self.w;
        let c0 = self.comp_of[w];
        let simple = |recipe, edges| {
            Some(Augmentation {
                recipe,
                components: vec![c0],
                edges,
                witness: vec![],
            })
        };
        match self.kind[c0] {
            ComponentKind::Path => simple(Recipe::InitPath, self.all_edges(c0)),
            ComponentKind::OddCycle => {
                let start = if self.lambda == 0 {
                    w
                } else {
                    self.successor(w)
                };
                simple(Recipe::InitOddCycle, self.open_after(start))
            }
            ComponentKind::EvenCycle => {
                let xp = self.anchor_parity();
                let in_y0 = |v: VertexId| self.comp_of[v] == c0 && (self.pos_of[v] % 2) as u8 != xp;
                let y0: Vec<VertexId> = self
                    .vertices(c0)
                    .iter()
                    .copied()
                    .filter(|&v| in_y0(v))
                    .collect();
                if let Some(&u) = y0.iter().find(|&&u| self.g.degree(u) < self.delta) {
                    return simple(Recipe::InitDeficientY0, self.open_after(u));
                }
                for &u in &y0 {
                    if let Some(&(e, v)) = self.g.incident(u).iter().find(|&&(_, v)| in_y0(v)) {
                        let detached = if u != w { u } else { v };
                        let mut edges = self.open_around(detached);
                        edges.push(e);
                        return Some(Augmentation {
                            recipe: Recipe::InitY0Edge,
                            components: vec![c0],
                            edges,
                            witness: vec![e],
                        });
                    }
                }
                None
            }
        }
    }

    /// Absorbs, to a fixpoint, every component reached by an edge from a
    /// type-0 tree vertex, and every path or odd cycle reached from a type-1
    /// tree vertex.
    pub fn extend_simple(&mut self) -> Result<(), SolveError> {
        let g = self.g;
        while let Some(v) = self.worklist.pop_front() {
            let tv = self.types[v].expect("worklist holds tree vertices");
            for &(e, z) in g.incident(v) {
                if self.types[z].is_some() {
                    continue;
                }
                let c = self.comp_of[z];
                let path = match (tv, self.kind[c]) {
                    (_, ComponentKind::Path) => self.all_edges(c),
                    (0, ComponentKind::OddCycle) => self.open_after(self.successor(z)),
                    (0, ComponentKind::EvenCycle) => self.open_after(z),
                    (_, ComponentKind::OddCycle) => self.open_after(z),
                    (_, ComponentKind::EvenCycle) => continue,
                };
                let recipe = if tv == 0 {
                    Recipe::AbsorbFromX0
                } else {
                    Recipe::AbsorbPathOrOddFromY0
                };
                let mut edges = vec![e];
                edges.extend(path);
                self.apply_augmentation(Augmentation {
                    recipe,
                    components: vec![c],
                    edges,
                    witness: vec![e],
                })?;
            }
        }
        Ok(())
    }

    /// Breadth-first assignment of bipartitions to even cycles outside the
    /// tree, seeded by the cycle of `w` (null tree) or by edges from type-1
    /// tree vertices. Every edge from the Y side of an assigned cycle into an
    /// unassigned even cycle assigns that cycle with the hit vertex in X.
    pub fn admissible_closure(&mut self) -> AdmissibleState {
        self.stats.closures += 1;
        let g = self.g;
        let mut state = AdmissibleState {
            assignment: vec![None; self.kind.len()],
            order: Vec::new(),
            seed: Seed::Tree {
                entries: Vec::new(),
            },
        };
        let mut queue = VecDeque::new();
        if self.order == 0 {
            let c0 = self.comp_of[self.w];
            state.assignment[c0] = Some(Assignment {
                x_parity: self.anchor_parity(),
                entry: None,
                parent: None,
            });
            state.order.push(c0);
            state.seed = Seed::NullTree { c0 };
            queue.push_back(c0);
        } else {
            let mut entries = Vec::new();
            for v in 0..g.vertex_count() {
                if self.types[v] != Some(1) {
                    continue;
                }
                for &(e, z) in g.incident(v) {
                    if self.try_assign(&mut state, e, v, z, None) {
                        entries.push(e);
                        queue.push_back(self.comp_of[z]);
                    }
                }
            }
            state.seed = Seed::Tree { entries };
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..self.vertices(c).len() {
                let y = self.vertices(c)[i];
                if !self.in_y(&state, y) {
                    continue;
                }
                for &(e, z) in g.incident(y) {
                    if self.try_assign(&mut state, e, y, z, Some(c)) {
                        queue.push_back(self.comp_of[z]);
                    }
                }
            }
        }
        state
    }

    fn try_assign(
        &self,
        state: &mut AdmissibleState,
        e: EdgeId,
        from: VertexId,
        z: VertexId,
        parent: Option<usize>,
    ) -> bool {
        let d = self.comp_of[z];
        if self.types[z].is_some()
            || self.kind[d] != ComponentKind::EvenCycle
            || state.assignment[d].is_some()
        {
            return false;
        }
        state.assignment[d] = Some(Assignment {
            x_parity: (self.pos_of[z] % 2) as u8,
            entry: Some(Entry {
                edge: e,
                from,
                to: z,
            }),
            parent,
        });
        state.order.push(d);
        true
    }

    /// Entry edges along `chain`, the path `y⁺Cy` on every non-final cycle
    /// (`y` the exit towards the next cycle), then `last`.
    fn chain_edges(
        &self,
        state: &AdmissibleState,
        chain: &[usize],
        last: Vec<EdgeId>,
    ) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for (i, &c) in chain.iter().enumerate() {
            let a = state.assignment[c]
                .as_ref()
                .expect("chain cycles are assigned");
            if let Some(en) = a.entry {
                out.push(en.edge);
            }
            if let Some(&next) = chain.get(i + 1) {
                let exit = state.assignment[next]
                    .as_ref()
                    .unwrap()
                    .entry
                    .expect("non-root entry")
                    .from;
                out.extend(self.open_after(exit));
            }
        }
        out.extend(last);
        out
    }

    fn entry_witnesses(&self, state: &AdmissibleState, chain: &[usize]) -> Vec<EdgeId> {
        chain
            .iter()
            .filter_map(|&c| {
                state.assignment[c]
                    .as_ref()
                    .unwrap()
                    .entry
                    .map(|en| en.edge)
            })
            .collect()
    }

    /// One applicable recipe, tried in the order: deficient Y vertex, edge
    /// inside the Y side, edge out of the Y side.
    pub fn find_augmentation(&self, state: &AdmissibleState) -> Result<Augmentation, SolveError> {
        let g = self.g;
        // a Y vertex of less than maximum degree
        for &c in &state.order {
            for &z in self.vertices(c) {
                if self.in_y(state, z) && g.degree(z) < self.delta {
                    let chain = state.chain(c);
                    return Ok(Augmentation {
                        recipe: Recipe::DeficientY,
                        edges: self.chain_edges(state, &chain, self.open_after(z)),
                        witness: self.entry_witnesses(state, &chain),
                        components: chain,
                    });
                }
            }
        }
        // an edge yz inside the Y side
        for &c in &state.order {
            for &y in self.vertices(c) {
                if !self.in_y(state, y) {
                    continue;
                }
                if let Some(&(e, z)) = g.incident(y).iter().find(|&&(_, z)| self.in_y(state, z)) {
                    return Ok(self.case2(state, e, y, z));
                }
            }
        }
        // an edge from the Y side to outside X ∪ Y
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        for &c in &state.order {
            let a = state.assignment[c].as_ref().unwrap();
            for &v in self.vertices(c) {
                if self.in_x(a, v) {
                    xs.push(v);
                } else {
                    ys.push(v);
                }
            }
        }
        let Some(e) = y_out_edge(g, &xs, &ys) else {
            return Err(self.contract("no edge leaves the Y side of the admissible cycles", state));
        };
        let (a, b) = g.endpoints(e);
        let (u, z) = if self.in_y(state, a) { (a, b) } else { (b, a) };
        let c = self.comp_of[u];
        let chain = state.chain(c);
        let mut witness = self.entry_witnesses(state, &chain);
        witness.push(e);
        if let Some(tz) = self.types[z] {
            if tz != 1 {
                return Err(
                    self.contract("edge from the Y side reaches a type-0 tree vertex", state)
                );
            }
            let mut edges = self.chain_edges(state, &chain, self.open_around(u));
            edges.push(e);
            return Ok(Augmentation {
                recipe: Recipe::Case1IntoY0,
                components: chain,
                edges,
                witness,
            });
        }
        let d = self.comp_of[z];
        let q = match self.kind[d] {
            ComponentKind::Path => self.all_edges(d),
            ComponentKind::OddCycle => self.open_after(z),
            ComponentKind::EvenCycle => {
                return Err(self.contract(
                    "edge from the Y side reaches an unassigned even cycle",
                    state,
                ));
            }
        };
        let mut edges = self.chain_edges(state, &chain, self.open_after(u));
        edges.push(e);
        edges.extend(q);
        let mut components = chain;
        components.push(d);
        Ok(Augmentation {
            recipe: Recipe::Case1Outside,
            components,
            edges,
            witness,
        })
    }

    fn case2(&self, state: &AdmissibleState, e: EdgeId, y: VertexId, z: VertexId) -> Augmentation {
        let (c, d) = (self.comp_of[y], self.comp_of[z]);
        let (chain_c, chain_d) = (state.chain(c), state.chain(d));
        let common = |y: VertexId, chain: Vec<usize>| {
            let mut edges = self.chain_edges(state, &chain, self.open_around(y));
            edges.push(e);
            let mut witness = self.entry_witnesses(state, &chain);
            witness.push(e);
            Augmentation {
                recipe: Recipe::Case2Common,
                components: chain,
                edges,
                witness,
            }
        };
        if chain_c.contains(&d) {
            return common(y, chain_c);
        }
        if chain_d.contains(&c) {
            return common(z, chain_d);
        }
        let shared = chain_c
            .iter()
            .zip(&chain_d)
            .take_while(|(p, q)| p == q)
            .count();
        let tail = &chain_d[shared..];
        let mut edges = self.chain_edges(state, &chain_c, self.open_around(y));
        edges.push(e);
        edges.extend(self.chain_edges(state, tail, self.open_after(z)));
        let mut witness = self.entry_witnesses(state, &chain_c);
        witness.push(e);
        witness.extend(self.entry_witnesses(state, tail));
        let mut components = chain_c;
        components.extend_from_slice(tail);
        let recipe = if shared == 0 {
            Recipe::Case2Disjoint
        } else {
            Recipe::Case2Pivot
        };
        Augmentation {
            recipe,
            components,
            edges,
            witness,
        }
    }

    /// Adds the augmentation's components and edges to the tree, typing the
    /// new vertices from the tree (or from `w` when the tree is null), and
    /// checks the result is a good weakly even tree.
    pub fn apply_augmentation(&mut self, a: Augmentation) -> Result<(), SolveError> {
        let g = self.g;
        let was_null = self.order == 0;
        let mut incoming: Vec<VertexId> = Vec::new();
        for &c in &a.components {
            if self.absorbed[c] || incoming.iter().any(|&v| self.comp_of[v] == c) {
                return Err(self.step_error(&a, "component absorbed twice"));
            }
            incoming.extend_from_slice(self.vertices(c));
        }
        if incoming.is_empty() {
            return Err(self.step_error(&a, "no components"));
        }
        let expected = if was_null {
            incoming.len() - 1
        } else {
            incoming.len()
        };
        if a.edges.len() != expected {
            return Err(self.step_error(
                &a,
                &format!("{} new edges, expected {expected}", a.edges.len()),
            ));
        }
        let mut new_type: HashMap<VertexId, u8> = incoming.iter().map(|&v| (v, u8::MAX)).collect();
        let mut adj: HashMap<VertexId, Vec<(EdgeId, VertexId)>> = HashMap::new();
        for &e in &a.edges {
            let (x, y) = g.endpoints(e);
            for (p, q) in [(x, y), (y, x)] {
                if self.types[p].is_none() && !new_type.contains_key(&p) {
                    return Err(
                        self.step_error(&a, &format!("edge {e} leaves tree and components"))
                    );
                }
                adj.entry(p).or_default().push((e, q));
            }
        }
        let mut queue: VecDeque<VertexId> = VecDeque::new();
        if was_null {
            if !new_type.contains_key(&self.w) {
                return Err(self.step_error(&a, "first tree misses w"));
            }
            new_type.insert(self.w, self.lambda);
            queue.push_back(self.w);
        } else {
            let mut roots: Vec<VertexId> = adj
                .keys()
                .copied()
                .filter(|&v| self.types[v].is_some())
                .collect();
            roots.sort_unstable();
            queue.extend(roots);
        }
        while let Some(v) = queue.pop_front() {
            let tv = self.types[v].unwrap_or_else(|| new_type[&v]);
            for &(e, u) in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                let tu =
                    self.types[u].or_else(|| new_type.get(&u).copied().filter(|&t| t != u8::MAX));
                match tu {
                    Some(t) if t == tv => {
                        return Err(self.step_error(&a, &format!("edge {e} joins equal types")))
                    }
                    Some(_) => {}
                    None => {
                        new_type.insert(u, 1 - tv);
                        queue.push_back(u);
                    }
                }
            }
        }
        if let Some(&v) = incoming.iter().find(|&&v| new_type[&v] == u8::MAX) {
            return Err(self.step_error(&a, &format!("vertex {v} not connected to the tree")));
        }

        for &v in &incoming {
            self.types[v] = Some(new_type[&v]);
        }
        for &e in &a.edges {
            let (x, y) = g.endpoints(e);
            self.tree_deg[x] += 1;
            self.tree_deg[y] += 1;
        }
        self.tree_edges.extend_from_slice(&a.edges);
        for &c in &a.components {
            self.absorbed[c] = true;
        }
        self.order += incoming.len();
        if let Some(&v) = incoming.iter().find(|&&v| {
            self.tree_deg[v] == 1 && g.degree(v) == self.delta && self.types[v] == Some(1)
        }) {
            return Err(self.step_error(
                &a,
                &format!("vertex {v} became a type-1 leaf of maximum degree"),
            ));
        }
        self.worklist.extend(incoming.iter().copied());
        self.stats.steps += 1;
        *self.stats.recipes.entry(a.recipe).or_default() += 1;

        if self.check_steps {
            let report = is_good_tree(g, &self.tree(), &self.factor);
            if !report.passed {
                return Err(self.step_error(&a, &format!("good-tree check failed: {report:?}")));
            }
        }
        Ok(())
    }

    fn step_error(&self, a: &Augmentation, what: &str) -> SolveError {
        SolveError::Contract(format!(
            "{:?} step invalid: {what}; augmentation {a:?}; {}",
            a.recipe,
            self.summary()
        ))
    }

    fn contract(&self, what: &str, state: &AdmissibleState) -> SolveError {
        let mut dump = format!(
            "{what}; {}; admissible order {:?}; seed {:?}",
            self.summary(),
            state.order,
            state.seed
        );
        for &c in &state.order {
            let _ = write!(
                dump,
                "; C{c}={:?}/{:?}",
                self.vertices(c),
                state.assignment[c]
            );
        }
        SolveError::Contract(dump)
    }

    fn summary(&self) -> String {
        format!(
            "n={} Δ={} w={} λ={} tree order {} of {} with {} edges; {} factor components",
            self.g.vertex_count(),
            self.delta,
            self.w,
            self.lambda,
            self.order,
            self.g.vertex_count(),
            self.tree_edges.len(),
            self.kind.len()
        )
    }
}
