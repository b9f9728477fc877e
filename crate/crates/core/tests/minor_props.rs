mod common;

use common::{family_corpus, k5};
use minorkit::families::*;
use minorkit::minor::{forbidden_edges, has_minor_oracle};
use minorkit::{find_minor, has_minor, is_planar, verify_embedding, Graph};
use proptest::prelude::*;
use rand::Rng;

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn every_witness_verifies(host in graph(1, 9), pattern in graph(1, 5)) {
        if let Some(w) = find_minor(&host, &pattern) {
            prop_assert!(verify_embedding(&host, &pattern, &w));
        }
    }

    #[test]
    fn small_cases_agree_with_oracle(host in graph(1, 7), pattern in graph(1, 4)) {
        prop_assert_eq!(has_minor(&host, &pattern), has_minor_oracle(&host, &pattern).unwrap());
    }

    #[test]
    fn declared_planar_respects_euler(g in graph(3, 10)) {
        if is_planar(&g) {
            prop_assert!(g.size() <= 3 * g.order() - 6);
        }
    }
}

#[test]
fn adding_an_edge_keeps_a_minor() {
    let mut r = common::rng(17);
    let mut positive = 0;
    for _ in 0..200 {
        let n = r.gen_range(5..=9);
        let p = r.gen_range(0.3..0.8);
        let g = common::random_graph(&mut r, n, p);
        let k = r.gen_range(3..=5);
        let h = common::random_graph(&mut r, k, 0.6);
        let Some((u, v)) = g.non_edges().nth(r.gen_range(0..=n)) else {
            continue;
        };
        if has_minor(&g, &h) {
            positive += 1;
            assert!(has_minor(&g.add_edge(u, v).unwrap(), &h), "{g} + {u}{v} lost {h}");
        }
    }
    assert!(positive > 50);
}

#[test]
fn minor_relation_is_transitive_on_named_graphs() {
    let corpus = family_corpus();
    let small: Vec<&(String, Graph)> = corpus.iter().filter(|(_, g)| g.order() <= 10).collect();
    let mut relation = Vec::new();
    for (a, ga) in &small {
        for (b, gb) in &small {
            if ga.order() <= gb.order() && has_minor(gb, ga) {
                relation.push((a.clone(), b.clone()));
            }
        }
    }
    for (a, b) in &relation {
        for (b2, c) in &relation {
            if b == b2 {
                assert!(relation.contains(&(a.clone(), c.clone())), "{a} <= {b} <= {c}");
            }
        }
    }
}

#[test]
fn planarity_of_named_graphs() {
    let planar = [
        "cube",
        "terrahawk",
        "aw:6",
        "aw:8",
        "dw:5",
        "ladder:4",
        "c2:6",
        "c2:8",
        "oct",
    ];
    let nonplanar = [
        "wagner", "v8e", "v8f", "petersen", "lk33", "k33", "c2:5", "c2:7", "aw+:6", "mobius:3",
    ];
    for s in planar {
        assert!(is_planar(&common::named(s)), "{s}");
    }
    for s in nonplanar {
        assert!(!is_planar(&common::named(s)), "{s}");
    }
    assert!(!is_planar(&k5()));
}

#[test]
fn forbidden_set_witnesses_verify() {
    let g = cycle_sq(8).unwrap();
    let p = v8_plus_e();
    let set = forbidden_edges(&g, &p);
    assert_eq!(set.edges.len(), 8);
    for f in &set.edges {
        let h = g.add_edge(f.edge.0, f.edge.1).unwrap();
        assert!(verify_embedding(&h, &p, &f.witness));
    }
}

#[test]
fn embedding_json_re_verifies() {
    let (host, pattern) = (mobius(4).unwrap(), wagner());
    let w = find_minor(&host, &pattern).unwrap();
    let text = serde_json::to_string(&w).unwrap();
    let back = serde_json::from_str(&text).unwrap();
    assert!(verify_embedding(&host, &pattern, &back));
}
