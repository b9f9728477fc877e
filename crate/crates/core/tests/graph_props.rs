mod common;

use common::brute_isomorphic;
use minorkit::io::{decode_graph6, encode_graph6};
use minorkit::{are_isomorphic, canonical_form, Graph, VertexSet};
use proptest::prelude::*;
use rand::RngCore;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph with a vertex of degree at least 4 and a valid split of it.
fn split_case() -> impl Strategy<Value = (Graph, usize, VertexSet, VertexSet)> {
    (graph(10), any::<u64>(), any::<u64>()).prop_filter_map("no vertex of degree 4", |(g, pick, bits)| {
        let big: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v) >= 4).collect();
        if big.is_empty() {
            return None;
        }
        let v = big[pick as usize % big.len()];
        let nbrs = g.neighbors(v).to_vec();
        // each neighbour goes to X, Y or both; the first two of each side are forced
        let (mut x, mut y) = (VertexSet::default(), VertexSet::default());
        for (i, &w) in nbrs.iter().enumerate() {
            match (i, (bits >> (2 * i)) & 3) {
                (0 | 1, _) => x.insert(w),
                (2 | 3, _) => y.insert(w),
                (_, 0) => x.insert(w),
                (_, 1) => y.insert(w),
                _ => {
                    x.insert(w);
                    y.insert(w);
                }
            }
        }
        Some((g, v, x, y))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn split_then_contract_is_identity((g, v, x, y) in split_case()) {
        let before = g.clone();
        let s = g.split_vertex(v, x, y).unwrap();
        prop_assert_eq!(&g, &before);
        prop_assert_eq!(s.order(), g.order() + 1);
        let back = s.contract_edge(v, g.order()).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert!(are_isomorphic(&back, &g));
    }

    #[test]
    fn delete_and_contract_drop_one_vertex(g in graph(10)) {
        let before = g.clone();
        if g.order() >= 2 {
            prop_assert_eq!(g.delete_vertex(0).unwrap().order(), g.order() - 1);
        }
        let first = g.edges().next();
        if let Some((u, v)) = first {
            prop_assert_eq!(g.contract_edge(u, v).unwrap().order(), g.order() - 1);
        }
        prop_assert_eq!(g, before);
    }

    #[test]
    fn add_then_delete_restores_exactly(g in graph(10)) {
        let first = g.non_edges().next();
        if let Some((u, v)) = first {
            let h = g.add_edge(u, v).unwrap().delete_edge(u, v).unwrap();
            prop_assert_eq!(h, g);
        }
    }

    #[test]
    fn relabelling_preserves_canonical_form(g in graph(12), seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let p = common::random_perm(&mut r, g.order());
        let h = g.relabel(&p);
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn canonical_form_is_idempotent(g in graph(12)) {
        let c = canonical_form(&g);
        prop_assert_eq!(canonical_form(&c.to_graph()), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph(14)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(&text).unwrap(), g);
    }
}

#[test]
fn isomorphism_matches_brute_force_on_small_graphs() {
    let mut r = common::rng(7);
    for _ in 0..400 {
        let n = 2 + (r.next_u32() % 6) as usize;
        let m = (r.next_u32() as usize) % (n * (n - 1) / 2 + 1);
        let g = common::random_graph_m(&mut r, n, m);
        let h = common::random_graph_m(&mut r, n, m);
        assert_eq!(are_isomorphic(&g, &h), brute_isomorphic(&g, &h), "{g} vs {h}");
    }
}

#[test]
fn different_degree_multisets_are_never_isomorphic() {
    let mut r = common::rng(11);
    let mut checked = 0;
    while checked < 500 {
        let n = 5 + (r.next_u32() % 8) as usize;
        let m = (r.next_u32() as usize) % (n * (n - 1) / 2 + 1);
        let g = common::random_graph_m(&mut r, n, m);
        let h = common::random_graph_m(&mut r, n, m);
        let (mut dg, mut dh) = (g.degrees(), h.degrees());
        dg.sort_unstable();
        dh.sort_unstable();
        if dg != dh {
            assert!(!are_isomorphic(&g, &h));
            checked += 1;
        }
    }
}
