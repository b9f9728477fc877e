mod common;

use std::collections::HashSet;

use minorkit::families::*;
use minorkit::growth::{grow_with_jobs, successors_i4c, GrowthReport};
use minorkit::{canonical_form, grow, is_internally_4_connected, verify_embedding, Bounds, Filter, Seed};

fn runs() -> Vec<GrowthReport> {
    vec![
        grow(
            &[Seed::new("k33", k33())],
            Filter::V8eFree,
            &Bounds::new(10, 20, 3),
        )
        .unwrap(),
        grow(
            &[Seed::new("c2:6", cycle_sq(6).unwrap())],
            Filter::V8eFree,
            &Bounds::new(9, 18, 2),
        )
        .unwrap(),
        grow(
            &[Seed::new("aw:6", aw(6).unwrap())],
            Filter::V8Free,
            &Bounds::new(9, 20, 1),
        )
        .unwrap(),
    ]
}

#[test]
fn report_invariants() {
    for report in runs() {
        let pattern = report.filter.pattern().unwrap();
        let mut canons = HashSet::new();
        for s in &report.survivors {
            assert!(canons.insert(s.canon.clone()), "duplicate survivor {}", s.canon);
            assert_eq!(canonical_form(&s.trace.replay(&report.seed).unwrap()), s.canon);
            assert_eq!(canonical_form(&s.graph), s.canon);
            assert!(is_internally_4_connected(&s.graph));
            assert!(s.graph.order() <= report.bounds.max_vertices);
            assert!(s.graph.size() <= report.bounds.max_edges);
        }
        for e in &report.eliminated {
            assert!(verify_embedding(&e.graph, &pattern, &e.witness), "{}", e.canon);
            assert!(!canons.contains(&e.canon));
        }
        let sorted: Vec<_> = report.survivors.iter().map(|s| &s.canon).collect();
        assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn worker_count_does_not_change_the_report() {
    let seeds = [Seed::new("c2:6", cycle_sq(6).unwrap()), Seed::new("k33", k33())];
    let b = Bounds::new(9, 18, 2);
    let one = grow_with_jobs(&seeds, Filter::V8eFree, &b, 1).unwrap();
    let many = grow_with_jobs(&seeds, Filter::V8eFree, &b, 6).unwrap();
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&many).unwrap()
    );
}

#[test]
fn report_round_trips_through_json() {
    let report = &runs()[0];
    let text = serde_json::to_string(report).unwrap();
    let back: GrowthReport = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, report);
}

#[test]
fn k33_chain_reaches_the_derived_graphs() {
    let report = &runs()[0];
    let canons: Vec<String> = report.survivors.iter().map(|s| s.canon.to_string()).collect();
    for want in [canonical_form(&wagner()), canonical_form(&petersen())] {
        assert!(canons.contains(&want.to_string()), "{want} missing");
    }
}

#[test]
fn successors_are_i4c_and_distinct() {
    assert!(successors_i4c(&k33(), 2).unwrap().is_empty());
    let succ = successors_i4c(&k33(), 3).unwrap();
    assert!(!succ.is_empty());
    assert!(succ
        .iter()
        .any(|g| canonical_form(g) == canonical_form(&wagner())));
    let mut seen = HashSet::new();
    for g in &succ {
        assert!(is_internally_4_connected(g));
        assert!(seen.insert(canonical_form(g)));
    }
}

#[test]
fn bad_inputs_are_rejected() {
    let seed = [Seed::new("v8e", v8_plus_e())];
    assert!(grow(&seed, Filter::V8eFree, &Bounds::new(10, 20, 1)).is_err());
    let k = [Seed::new("k33", k33())];
    assert!(grow(
        &k,
        Filter::V8eFree,
        &Bounds {
            max_ops: 4,
            ..Bounds::new(10, 20, 1)
        }
    )
    .is_err());
    assert!(grow(&k, Filter::V8eFree, &Bounds::new(5, 20, 1)).is_err());
}
