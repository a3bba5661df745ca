//! Exhaustive enumeration of small connected multigraphs.
//!
//! Graphs are grown one edge at a time and deduplicated by a canonical
//! form: the lexicographically smallest upper-triangle multiplicity vector
//! over all relabelings that respect a colour-refinement ordering.

use std::collections::BTreeSet;

use super::GenError;
use crate::graph::Multigraph;

pub const MAX_SMALL_VERTICES: usize = 7;
pub const MAX_SMALL_EDGES: usize = 12;

/// Every connected loop-free multigraph with 2..=`max_n` vertices and at
/// most `max_m` edges, one representative per isomorphism class. Ordered by
/// vertex count, then edge count, then canonical form.
///
/// The single-vertex graph is left out: it has no edges to choose from and
/// every downstream consumer treats it separately.
pub fn all_small_graphs(max_n: usize, max_m: usize) -> Result<Vec<Multigraph>, GenError> {
    if max_n > MAX_SMALL_VERTICES || max_m > MAX_SMALL_EDGES {
        return Err(GenError::BoundsExceeded(format!(
            "max_n <= {MAX_SMALL_VERTICES} and max_m <= {MAX_SMALL_EDGES} required, got ({max_n}, {max_m})"
        )));
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let mut level: BTreeSet<Vec<u8>> = BTreeSet::from([vec![0u8; pairs.len()]]);
        for m in 1..=max_m {
            let mut next = BTreeSet::new();
            for key in &level {
                for i in 0..pairs.len() {
                    let mut grown = key.clone();
                    grown[i] += 1;
                    next.insert(canonical(n, &pairs, &grown));
                }
            }
            level = next;
            if m + 1 >= n {
                for key in &level {
                    let g = to_graph(n, &pairs, key);
                    if g.is_connected().unwrap() {
                        out.push(g);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn to_graph(n: usize, pairs: &[(usize, usize)], key: &[u8]) -> Multigraph {
    let mut g = Multigraph::new(n);
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for _ in 0..key[i] {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

fn canonical(n: usize, pairs: &[(usize, usize)], key: &[u8]) -> Vec<u8> {
    let mut mat = vec![vec![0u8; n]; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        mat[a][b] = key[i];
        mat[b][a] = key[i];
    }
    let colour = refine(&mat);
    // classes in ascending colour order
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| colour[v]);
    for v in by_colour {
        match classes.last_mut() {
            Some(c) if colour[c[0]] == colour[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut order = Vec::with_capacity(n);
    search(
        &classes,
        0,
        &mut order,
        &mut vec![false; n],
        &mat,
        pairs,
        &mut best,
    );
    best.unwrap()
}

fn search(
    classes: &[Vec<usize>],
    class: usize,
    order: &mut Vec<usize>,
    used: &mut Vec<bool>,
    mat: &[Vec<u8>],
    pairs: &[(usize, usize)],
    best: &mut Option<Vec<u8>>,
) {
    if class == classes.len() {
        let cand: Vec<u8> = pairs
            .iter()
            .map(|&(a, b)| mat[order[a]][order[b]])
            .collect();
        if best.as_ref().is_none_or(|b| cand < *b) {
            *best = Some(cand);
        }
        return;
    }
    let members = &classes[class];
    let placed_in_class = order.len() - classes[..class].iter().map(Vec::len).sum::<usize>();
    if placed_in_class == members.len() {
        search(classes, class + 1, order, used, mat, pairs, best);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            order.push(v);
            search(classes, class, order, used, mat, pairs, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// Colour refinement starting from degrees; colours are ranks of sorted
/// signatures, hence invariant under relabeling.
fn refine(mat: &[Vec<u8>]) -> Vec<usize> {
    let n = mat.len();
    let degree: Vec<usize> = mat
        .iter()
        .map(|row| row.iter().map(|&x| x as usize).sum())
        .collect();
    let mut colour = rank(&degree.iter().map(|&d| vec![d]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| mat[v][u] > 0)
                    .map(|u| colour[u] * 256 + mat[v][u] as usize)
                    .collect();
                nb.sort_unstable();
                let mut sig = vec![colour[v]];
                sig.extend(nb);
                sig
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn rank(sigs: &[Vec<usize>]) -> Vec<usize> {
    let distinct: BTreeSet<&Vec<usize>> = sigs.iter().collect();
    let index: Vec<&Vec<usize>> = distinct.into_iter().collect();
    sigs.iter()
        .map(|s| index.binary_search(&s).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(graphs: &[Multigraph], n: usize, edges: &[(usize, usize)]) -> bool {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let mut key = vec![0u8; pairs.len()];
        for &(a, b) in edges {
            let i = pairs
                .iter()
                .position(|&p| p == (a.min(b), a.max(b)))
                .unwrap();
            key[i] += 1;
        }
        let want = canonical(n, &pairs, &key);
        graphs.iter().any(|g| {
            if g.vertex_count() != n {
                return false;
            }
            let mut k = vec![0u8; pairs.len()];
            for &(a, b) in g.edges() {
                k[pairs
                    .iter()
                    .position(|&p| p == (a.min(b), a.max(b)))
                    .unwrap()] += 1;
            }
            canonical(n, &pairs, &k) == want
        })
    }

    #[test]
    fn two_vertices() {
        let gs = all_small_graphs(2, 2).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(has(&gs, 2, &[(0, 1)]));
        assert!(has(&gs, 2, &[(0, 1), (0, 1)]));
    }

    #[test]
    fn three_vertices() {
        let gs = all_small_graphs(3, 3).unwrap();
        assert!(has(&gs, 3, &[(0, 1), (1, 2)]));
        assert!(has(&gs, 3, &[(0, 1), (1, 2), (2, 0)]));
        assert!(has(&gs, 3, &[(0, 1), (0, 1), (1, 2)]));
    }

    #[test]
    fn four_vertices() {
        let gs = all_small_graphs(4, 4).unwrap();
        assert!(has(&gs, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
        assert!(has(&gs, 4, &[(0, 1), (0, 2), (0, 3)]));
    }

    #[test]
    fn simple_graph_counts_match_known_values() {
        // connected simple graphs on 4 vertices: 6 classes
        let gs = all_small_graphs(4, 6).unwrap();
        let simple = gs
            .iter()
            .filter(|g| g.vertex_count() == 4)
            .filter(|g| {
                let mut p: Vec<_> = g
                    .edges()
                    .iter()
                    .map(|&(a, b)| (a.min(b), a.max(b)))
                    .collect();
                let len = p.len();
                p.sort();
                p.dedup();
                p.len() == len
            })
            .count();
        assert_eq!(simple, 6);
    }

    #[test]
    fn bounds_guard() {
        assert!(matches!(
            all_small_graphs(8, 4),
            Err(GenError::BoundsExceeded(_))
        ));
        assert!(matches!(
            all_small_graphs(4, 13),
            Err(GenError::BoundsExceeded(_))
        ));
    }
}
