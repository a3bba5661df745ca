//! Named graph families used throughout the tests and examples.

use crate::graph::Multigraph;

pub fn path(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `C_n`; `n = 2` gives two parallel edges.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 2, "a cycle needs at least two vertices");
    Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut g = Multigraph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v).unwrap();
        }
    }
    g
}

/// `K_{1,leaves}` centered at vertex 0.
pub fn star(leaves: usize) -> Multigraph {
    Multigraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// Outer 5-cycle 0..5, spokes to inner vertices 5..10, inner pentagram.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::from_edges(10, edges).unwrap()
}

/// Two hubs (0 and 1) joined by three internally disjoint paths with the
/// given numbers of edges. Internal vertices are numbered from 2 onward,
/// path by path.
pub fn theta(lengths: [usize; 3]) -> Multigraph {
    assert!(lengths.iter().all(|&l| l >= 1));
    let internal: usize = lengths.iter().map(|l| l - 1).sum();
    let mut g = Multigraph::new(2 + internal);
    let mut next = 2;
    for &len in &lengths {
        let mut prev = 0;
        for _ in 1..len {
            g.add_edge(prev, next).unwrap();
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1).unwrap();
    }
    g
}

/// Two vertices joined by `k` parallel edges.
pub fn bundle(k: usize) -> Multigraph {
    Multigraph::from_edges(2, std::iter::repeat_n((0, 1), k)).unwrap()
}
