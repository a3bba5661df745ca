//! Seeded instance generation.
//!
//! Every kind is a pure function of its [`GenSpec`]: the same spec always
//! yields the same graph, edge ids included.

pub mod families;
mod rng;
mod small;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Multigraph, VertexId};

pub use rng::Rng;
pub use small::{all_small_graphs, MAX_SMALL_EDGES, MAX_SMALL_VERTICES};

const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("missing parameter `{0}` for this kind")]
    MissingParameter(&'static str),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("retry budget of {0} samples exhausted")]
    RetryBudgetExhausted(usize),
    #[error("bounds exceeded: {0}")]
    BoundsExceeded(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    RandomConnected,
    RandomTwoEdgeConnected,
    RandomRegular,
    RegularBipartite,
    BridgedChain,
    Theta,
    ParallelBoosted,
}

impl GenKind {
    pub const ALL: [GenKind; 7] = [
        GenKind::RandomConnected,
        GenKind::RandomTwoEdgeConnected,
        GenKind::RandomRegular,
        GenKind::RegularBipartite,
        GenKind::BridgedChain,
        GenKind::Theta,
        GenKind::ParallelBoosted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::RandomConnected => "random_connected",
            GenKind::RandomTwoEdgeConnected => "random_two_edge_connected",
            GenKind::RandomRegular => "random_regular",
            GenKind::RegularBipartite => "regular_bipartite",
            GenKind::BridgedChain => "bridged_chain",
            GenKind::Theta => "theta",
            GenKind::ParallelBoosted => "parallel_boosted",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.replace('-', "_");
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown generator kind `{s}`"))
    }
}

/// Parameters for one generated instance.
///
/// `m` is the edge count for the random connected kinds, `r` the degree for
/// the regular kinds, `blocks` the number of 2-edge-connected blocks in a
/// bridged chain. `multiplicity` caps parallel edges per vertex pair
/// (unbounded when absent; for `parallel_boosted` it defaults to 2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<usize>,
    #[serde(default)]
    pub seed: u64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec {
            kind,
            n,
            m: None,
            r: None,
            multiplicity: None,
            blocks: None,
            seed,
        }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_multiplicity(mut self, k: usize) -> Self {
        self.multiplicity = Some(k);
        self
    }

    pub fn with_blocks(mut self, b: usize) -> Self {
        self.blocks = Some(b);
        self
    }
}

pub fn generate(spec: &GenSpec) -> Result<Multigraph, GenError> {
    let mut rng = Rng::new(spec.seed);
    let n = spec.n;
    let cap = spec.multiplicity;
    if cap == Some(0) {
        return Err(GenError::Infeasible(
            "multiplicity bound must be positive".into(),
        ));
    }
    match spec.kind {
        GenKind::RandomConnected => {
            let m = spec.m.ok_or(GenError::MissingParameter("m"))?;
            random_connected(&mut rng, n, m, cap)
        }
        GenKind::RandomTwoEdgeConnected => {
            let m = spec.m.ok_or(GenError::MissingParameter("m"))?;
            random_two_edge_connected(&mut rng, n, m, cap)
        }
        GenKind::RandomRegular => {
            let r = spec.r.ok_or(GenError::MissingParameter("r"))?;
            random_regular(&mut rng, n, r, cap)
        }
        GenKind::RegularBipartite => {
            let r = spec.r.ok_or(GenError::MissingParameter("r"))?;
            regular_bipartite(&mut rng, n, r, cap)
        }
        GenKind::BridgedChain => {
            let blocks = spec.blocks.ok_or(GenError::MissingParameter("blocks"))?;
            bridged_chain(&mut rng, n, blocks, cap)
        }
        GenKind::Theta => theta(&mut rng, n),
        GenKind::ParallelBoosted => {
            let m = spec.m.ok_or(GenError::MissingParameter("m"))?;
            parallel_boosted(&mut rng, n, m, cap.unwrap_or(2))
        }
    }
}

/// Edge accumulator enforcing a per-pair multiplicity cap.
struct Builder {
    graph: Multigraph,
    mult: HashMap<(VertexId, VertexId), usize>,
    cap: Option<usize>,
}

impl Builder {
    fn new(n: usize, cap: Option<usize>) -> Self {
        Builder {
            graph: Multigraph::new(n),
            mult: HashMap::new(),
            cap,
        }
    }

    fn can_add(&self, u: VertexId, v: VertexId) -> bool {
        u != v
            && self
                .cap
                .is_none_or(|c| self.mult.get(&key(u, v)).copied().unwrap_or(0) < c)
    }

    fn add(&mut self, u: VertexId, v: VertexId) {
        self.graph
            .add_edge(u, v)
            .expect("generator produced an invalid edge");
        *self.mult.entry(key(u, v)).or_default() += 1;
    }

    /// Adds uniformly random extra edges until the graph has `m` edges.
    fn fill_random(&mut self, rng: &mut Rng, m: usize) -> Result<(), GenError> {
        let n = self.graph.vertex_count();
        let mut misses = 0;
        while self.graph.edge_count() < m {
            let u = rng.below(n);
            let v = rng.below(n);
            if self.can_add(u, v) {
                self.add(u, v);
                misses = 0;
            } else {
                misses += 1;
                if misses > RETRY_BUDGET * 10 {
                    return Err(GenError::RetryBudgetExhausted(misses));
                }
            }
        }
        Ok(())
    }
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

fn pair_capacity(n: usize, cap: Option<usize>) -> Option<usize> {
    cap.map(|c| c.saturating_mul(n * n.saturating_sub(1) / 2))
}

fn check_capacity(n: usize, m: usize, cap: Option<usize>) -> Result<(), GenError> {
    match pair_capacity(n, cap) {
        Some(total) if m > total => Err(GenError::Infeasible(format!(
            "{m} edges do not fit on {n} vertices with multiplicity {}",
            cap.unwrap()
        ))),
        None if n < 2 && m > 0 => Err(GenError::Infeasible(format!("{m} edges need two vertices"))),
        _ => Ok(()),
    }
}

fn random_connected(
    rng: &mut Rng,
    n: usize,
    m: usize,
    cap: Option<usize>,
) -> Result<Multigraph, GenError> {
    if n == 0 {
        return Err(GenError::Infeasible("n must be positive".into()));
    }
    if m + 1 < n {
        return Err(GenError::Infeasible(format!("m = {m} < n - 1 = {}", n - 1)));
    }
    check_capacity(n, m, cap)?;
    let mut order: Vec<VertexId> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut b = Builder::new(n, cap);
    for i in 1..n {
        let parent = order[rng.below(i)];
        b.add(order[i], parent);
    }
    b.fill_random(rng, m)?;
    Ok(b.graph)
}

/// Random Hamiltonian cycle plus random chords; always 2-edge-connected.
fn random_two_edge_connected(
    rng: &mut Rng,
    n: usize,
    m: usize,
    cap: Option<usize>,
) -> Result<Multigraph, GenError> {
    if n < 2 {
        return Err(GenError::Infeasible("n must be at least 2".into()));
    }
    if m < n {
        return Err(GenError::Infeasible(format!("m = {m} < n = {n}")));
    }
    if n == 2 && cap.is_some_and(|c| c < 2) {
        return Err(GenError::Infeasible(
            "two vertices need a parallel pair".into(),
        ));
    }
    check_capacity(n, m, cap)?;
    let mut order: Vec<VertexId> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut b = Builder::new(n, cap);
    for i in 0..n {
        b.add(order[i], order[(i + 1) % n]);
    }
    b.fill_random(rng, m)?;
    Ok(b.graph)
}

/// Configuration model; whole samples are redrawn on a loop, an exceeded
/// multiplicity cap, or a disconnected result.
fn random_regular(
    rng: &mut Rng,
    n: usize,
    r: usize,
    cap: Option<usize>,
) -> Result<Multigraph, GenError> {
    if n == 0 {
        return Err(GenError::Infeasible("n must be positive".into()));
    }
    if (n * r) % 2 == 1 {
        return Err(GenError::Infeasible(format!("n * r = {} is odd", n * r)));
    }
    if r > 0 && n < 2 {
        return Err(GenError::Infeasible(
            "a regular graph of positive degree needs two vertices".into(),
        ));
    }
    if r == 0 && n > 1 {
        return Err(GenError::Infeasible(
            "0-regular graph on several vertices is disconnected".into(),
        ));
    }
    'sample: for _ in 0..RETRY_BUDGET {
        let mut stubs: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        rng.shuffle(&mut stubs);
        let mut b = Builder::new(n, cap);
        for pair in stubs.chunks(2) {
            if !b.can_add(pair[0], pair[1]) {
                continue 'sample;
            }
            b.add(pair[0], pair[1]);
        }
        if b.graph.require_connected().is_ok() {
            return Ok(b.graph);
        }
    }
    Err(GenError::RetryBudgetExhausted(RETRY_BUDGET))
}

/// Union of `r` random perfect matchings between `0..n/2` and `n/2..n`.
fn regular_bipartite(
    rng: &mut Rng,
    n: usize,
    r: usize,
    cap: Option<usize>,
) -> Result<Multigraph, GenError> {
    if n < 2 || n % 2 == 1 {
        return Err(GenError::Infeasible(format!(
            "n = {n} must be even and positive"
        )));
    }
    if r == 0 {
        return Err(GenError::Infeasible("r must be positive".into()));
    }
    if r == 1 && n > 2 {
        return Err(GenError::Infeasible(
            "1-regular graph on more than two vertices is disconnected".into(),
        ));
    }
    let half = n / 2;
    if cap.is_some_and(|c| c * half < r) {
        return Err(GenError::Infeasible("degree exceeds pair capacity".into()));
    }
    'sample: for _ in 0..RETRY_BUDGET {
        let mut b = Builder::new(n, cap);
        let mut right: Vec<VertexId> = (half..n).collect();
        for _ in 0..r {
            rng.shuffle(&mut right);
            for (u, &v) in right.iter().enumerate() {
                if !b.can_add(u, v) {
                    continue 'sample;
                }
                b.add(u, v);
            }
        }
        if b.graph.require_connected().is_ok() {
            return Ok(b.graph);
        }
    }
    Err(GenError::RetryBudgetExhausted(RETRY_BUDGET))
}

/// 2-edge-connected blocks in a row, consecutive blocks joined by one bridge.
/// Block sizes are a random composition of `n`; size 1 is a lone vertex,
/// size 2 a parallel pair, larger blocks a cycle plus random chords.
fn bridged_chain(
    rng: &mut Rng,
    n: usize,
    blocks: usize,
    cap: Option<usize>,
) -> Result<Multigraph, GenError> {
    if blocks == 0 || n < blocks {
        return Err(GenError::Infeasible(format!(
            "{blocks} blocks need 1..=n = {n}"
        )));
    }
    if cap.is_some_and(|c| c < 2) {
        return Err(GenError::Infeasible(
            "blocks of size 2 need multiplicity 2".into(),
        ));
    }
    let mut sizes = vec![1usize; blocks];
    for _ in blocks..n {
        sizes[rng.below(blocks)] += 1;
    }
    let mut b = Builder::new(n, cap);
    let mut start = 0;
    let mut prev_block: Option<(usize, usize)> = None;
    for &size in &sizes {
        let vs: Vec<VertexId> = (start..start + size).collect();
        match size {
            1 => {}
            2 => {
                b.add(vs[0], vs[1]);
                b.add(vs[0], vs[1]);
            }
            _ => {
                for i in 0..size {
                    b.add(vs[i], vs[(i + 1) % size]);
                }
                let chords = rng.below(size + 1);
                let mut misses = 0;
                let mut added = 0;
                while added < chords && misses < RETRY_BUDGET {
                    let u = vs[rng.below(size)];
                    let v = vs[rng.below(size)];
                    if b.can_add(u, v) {
                        b.add(u, v);
                        added += 1;
                    } else {
                        misses += 1;
                    }
                }
            }
        }
        if let Some((ps, plen)) = prev_block {
            let u = ps + rng.below(plen);
            let v = start + rng.below(size);
            b.add(u, v);
        }
        prev_block = Some((start, size));
        start += size;
    }
    Ok(b.graph)
}

/// Theta graph on `n` vertices with a random split of the `n - 2` internal
/// vertices among the three paths.
fn theta(rng: &mut Rng, n: usize) -> Result<Multigraph, GenError> {
    if n < 2 {
        return Err(GenError::Infeasible("a theta graph needs two hubs".into()));
    }
    let mut lengths = [1usize; 3];
    for _ in 0..n - 2 {
        lengths[rng.below(3)] += 1;
    }
    Ok(families::theta(lengths))
}

/// A simple random connected graph whose edges each receive
/// `below(multiplicity)` extra parallel copies.
fn parallel_boosted(
    rng: &mut Rng,
    n: usize,
    m: usize,
    multiplicity: usize,
) -> Result<Multigraph, GenError> {
    let base = random_connected(rng, n, m, Some(1))?;
    let mut b = Builder::new(n, Some(multiplicity));
    for &(u, v) in base.edges() {
        b.add(u, v);
        for _ in 0..rng.below(multiplicity) {
            b.add(u, v);
        }
    }
    Ok(b.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Bipartition, Regularity};

    #[test]
    fn random_regular_four_three() {
        let g = generate(&GenSpec::new(GenKind::RandomRegular, 4, 1).with_r(3)).unwrap();
        assert_eq!(g.regularity(), Regularity::Regular(3));
        assert!(g.is_connected().unwrap());
    }

    #[test]
    fn random_regular_parity_error() {
        let err = generate(&GenSpec::new(GenKind::RandomRegular, 3, 0).with_r(3)).unwrap_err();
        assert!(matches!(err, GenError::Infeasible(_)));
    }

    #[test]
    fn regular_bipartite_perfect_matching_is_infeasible() {
        let err = generate(&GenSpec::new(GenKind::RegularBipartite, 6, 0).with_r(1)).unwrap_err();
        assert!(matches!(err, GenError::Infeasible(_)));
        assert_eq!(
            generate(&GenSpec::new(GenKind::RegularBipartite, 2, 0).with_r(1))
                .unwrap()
                .edge_count(),
            1
        );
    }

    #[test]
    fn regular_bipartite_small_is_four_cycle() {
        let g = generate(&GenSpec::new(GenKind::RegularBipartite, 4, 7).with_r(2)).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.regularity(), Regularity::Regular(2));
        assert!(g.is_connected().unwrap());
        // connected 2-regular on 4 vertices is C4: no parallel pair
        let mut pairs: Vec<_> = g.edges().iter().map(|&(a, b)| key(a, b)).collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 4);
    }

    #[test]
    fn connected_needs_enough_edges() {
        let err = generate(&GenSpec::new(GenKind::RandomConnected, 5, 0).with_m(3)).unwrap_err();
        assert!(matches!(err, GenError::Infeasible(_)));
        let err = generate(&GenSpec::new(GenKind::RandomConnected, 5, 0)).unwrap_err();
        assert_eq!(err, GenError::MissingParameter("m"));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in GenKind::ALL {
            assert_eq!(k.name().parse::<GenKind>().unwrap(), k);
        }
        assert_eq!(
            "bridged-chain".parse::<GenKind>().unwrap(),
            GenKind::BridgedChain
        );
    }

    #[test]
    fn every_kind_meets_its_contract() {
        for seed in 0..30u64 {
            let g = generate(&GenSpec::new(GenKind::RandomConnected, 12, seed).with_m(16)).unwrap();
            assert!(g.is_connected().unwrap());
            assert_eq!(g.edge_count(), 16);

            let g = generate(&GenSpec::new(GenKind::RandomTwoEdgeConnected, 12, seed).with_m(20))
                .unwrap();
            assert!(g.is_two_edge_connected().unwrap());

            let g = generate(&GenSpec::new(GenKind::RandomRegular, 10, seed).with_r(3)).unwrap();
            assert_eq!(g.regularity(), Regularity::Regular(3));
            assert!(g.is_connected().unwrap());

            let g = generate(&GenSpec::new(GenKind::RegularBipartite, 8, seed).with_r(3)).unwrap();
            assert_eq!(g.regularity(), Regularity::Regular(3));
            assert!(matches!(g.bipartition().unwrap(), Bipartition::Coloring(_)));

            let g =
                generate(&GenSpec::new(GenKind::BridgedChain, 20, seed).with_blocks(4)).unwrap();
            assert!(g.is_connected().unwrap());
            // blocks are 2-edge-connected, so only the joins are bridges
            assert_eq!(g.bridges().len(), 3);

            let g = generate(&GenSpec::new(GenKind::Theta, 9, seed)).unwrap();
            assert_eq!(g.vertex_count(), 9);
            assert_eq!(g.edge_count(), 10);
            assert!(g.is_two_edge_connected().unwrap());

            let g = generate(
                &GenSpec::new(GenKind::ParallelBoosted, 8, seed)
                    .with_m(10)
                    .with_multiplicity(3),
            )
            .unwrap();
            assert!(g.is_connected().unwrap());
            assert!(g.edge_count() >= 10);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for kind in GenKind::ALL {
            let spec = GenSpec {
                kind,
                n: 10,
                m: Some(14),
                r: Some(3),
                multiplicity: None,
                blocks: Some(3),
                seed: 99,
            };
            assert_eq!(generate(&spec), generate(&spec), "{kind}");
        }
    }

    #[test]
    fn spec_json_shape() {
        let spec = GenSpec::new(GenKind::RandomRegular, 6, 3).with_r(3);
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"kind":"random_regular","n":6,"r":3,"seed":3}"#);
        assert_eq!(serde_json::from_str::<GenSpec>(&text).unwrap(), spec);
    }
}
