use evenspan::generators::all_small_graphs;
use evenspan::graph::{Multigraph, Regularity};
use evenspan::io;
use evenspan::oracle::{exists_weakly_even, DEFAULT_CAP};
use evenspan::solver::{solve_instrumented, SolveOutcome};
use evenspan::verify::{is_even_tree, is_weakly_even_tree};
use proptest::prelude::*;
use rayon::prelude::*;

/// Connected multigraph: a random spanning tree plus extra edges.
fn connected_multigraph(max_n: usize, max_extra: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let extra = prop::collection::vec((0..n, 1..n), 0..=max_extra);
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut g = Multigraph::new(n);
            for (i, p) in parents.into_iter().enumerate() {
                g.add_edge(i + 1, p).unwrap();
            }
            for (a, d) in extra {
                g.add_edge(a, (a + d) % n).unwrap();
            }
            g
        })
    })
}

fn with_anchor(g: Multigraph) -> impl Strategy<Value = (Multigraph, usize, u8)> {
    let n = g.vertex_count();
    (Just(g), 0..n, 0..2u8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn solver_agrees_with_oracle((g, w, lambda) in connected_multigraph(7, 6).prop_flat_map(with_anchor)) {
        let (outcome, stats) = solve_instrumented(&g, w, lambda).unwrap();
        for s in &stats {
            prop_assert!(s.steps <= s.f_components);
        }
        let rb = g.regular_bipartite().unwrap().is_some();
        let verdict = exists_weakly_even(&g, w, lambda, DEFAULT_CAP).unwrap();
        match &outcome {
            SolveOutcome::Tree(t) => {
                prop_assert!(!rb);
                prop_assert!(verdict.exists);
                prop_assert!(is_weakly_even_tree(&g, t).passed);
                prop_assert_eq!(t.types[w], Some(lambda));
                if matches!(g.regularity(), Regularity::Regular(_)) {
                    prop_assert!(is_even_tree(&g, t).passed);
                }
            }
            SolveOutcome::NoSolution { r, coloring } => {
                prop_assert!(rb);
                prop_assert!(!verdict.exists);
                prop_assert_eq!(g.regularity(), Regularity::Regular(*r));
                for &(a, b) in g.edges() {
                    prop_assert_ne!(coloring[a], coloring[b]);
                }
            }
        }
        prop_assert_eq!(solve_instrumented(&g, w, lambda).unwrap().0, outcome);
    }

    #[test]
    fn larger_graphs_give_verified_trees((g, w, lambda) in connected_multigraph(60, 90).prop_flat_map(with_anchor)) {
        let (outcome, stats) = solve_instrumented(&g, w, lambda).unwrap();
        for s in &stats {
            prop_assert!(s.steps <= s.f_components);
        }
        if let SolveOutcome::Tree(t) = outcome {
            prop_assert!(is_weakly_even_tree(&g, &t).passed);
            // pairs name parallel edges ambiguously: compare endpoints, not ids
            let json = io::tree_to_json(&g, &t).unwrap();
            let back = io::parse_tree_json(&g, &json).unwrap();
            let pairs = |edges: &[usize]| {
                let mut p: Vec<_> = edges.iter().map(|&e| g.endpoints(e)).map(|(a, b)| (a.min(b), a.max(b))).collect();
                p.sort_unstable();
                p
            };
            prop_assert_eq!(pairs(&back.edges), pairs(&t.edges));
            prop_assert_eq!((&back.types, back.w, back.lambda), (&t.types, t.w, t.lambda));
            prop_assert!(is_weakly_even_tree(&g, &back).passed);
        } else {
            prop_assert!(g.regular_bipartite().unwrap().is_some());
        }
    }

    #[test]
    fn edge_list_and_json_round_trip(g in connected_multigraph(20, 30)) {
        let text = io::write_edge_list(&g);
        prop_assert_eq!(&io::parse_graph(&text).unwrap(), &g);
        prop_assert_eq!(io::write_edge_list(&io::parse_graph(&text).unwrap()), text);
        prop_assert_eq!(io::parse_graph(&io::graph_to_json(&g)).unwrap(), g);
    }
}

#[test]
fn exhaustive_agreement_on_seven_vertices() {
    let graphs: Vec<Multigraph> = all_small_graphs(7, 8)
        .unwrap()
        .into_iter()
        .filter(|g| g.vertex_count() == 7)
        .collect();
    assert!(!graphs.is_empty());
    graphs.par_iter().for_each(|g| {
        for w in g.vertices() {
            for lambda in 0..2 {
                let outcome = solve_instrumented(g, w, lambda).unwrap().0;
                let verdict = exists_weakly_even(g, w, lambda, DEFAULT_CAP).unwrap();
                assert_eq!(
                    outcome.tree().is_some(),
                    verdict.exists,
                    "{:?} w={w} λ={lambda}",
                    g.edges()
                );
                if let Some(t) = outcome.tree() {
                    assert!(is_weakly_even_tree(g, t).passed);
                }
            }
        }
    });
}
