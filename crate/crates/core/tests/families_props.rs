mod common;

use minorkit::families::*;
use minorkit::{has_minor, is_planar, FamilySpec};

#[test]
fn size_formulas() {
    for n in 3..=10 {
        let (d, dp) = (dw(n).unwrap(), dw_plus(n).unwrap());
        assert_eq!((d.order(), d.size()), (n + 2, 3 * n));
        assert_eq!(dp.size(), 3 * n + 1);
        let (l, m) = (ladder(n).unwrap(), mobius(n).unwrap());
        assert_eq!((l.order(), l.size()), (2 * n, 3 * n - 2));
        assert_eq!((m.order(), m.size()), (2 * n, 3 * n));
        let a = aw(2 * n).unwrap();
        assert_eq!((a.order(), a.size()), (2 * n + 2, 4 * n));
        assert_eq!(aw_plus(2 * n).unwrap().size(), 4 * n + 1);
        if n >= 5 {
            let c = cycle_sq(n).unwrap();
            assert_eq!((c.order(), c.size()), (n, 2 * n));
        }
    }
    for (i, j) in [(0, 0), (1, 2), (3, 3)] {
        assert_eq!(k33_ij(i, j).unwrap().size(), 9 + i + j);
    }
    for (g, n, m) in [
        (wagner(), 8, 12),
        (v8_plus_e(), 8, 13),
        (v8_plus_f(), 8, 13),
        (terrahawk(), 9, 16),
        (cube(), 8, 12),
        (petersen(), 10, 15),
        (oct(), 6, 12),
        (line_graph(&k33()).unwrap(), 9, 18),
    ] {
        assert_eq!((g.order(), g.size()), (n, m));
    }
}

#[test]
fn generators_are_connected() {
    for (name, g) in common::family_corpus() {
        assert!(g.is_connected(), "{name}");
    }
}

#[test]
fn planarity_of_wheels_and_ladders() {
    for n in 3..=6 {
        assert!(is_planar(&dw(n).unwrap()), "dw {n}");
        assert!(!is_planar(&dw_plus(n).unwrap()), "dw+ {n}");
        assert!(is_planar(&aw(2 * n).unwrap()), "aw {}", 2 * n);
        assert!(!is_planar(&aw_plus(2 * n).unwrap()), "aw+ {}", 2 * n);
        assert!(is_planar(&ladder(n).unwrap()), "ladder {n}");
    }
}

#[test]
fn aw_plus_avoids_v8e() {
    for n in 3..=6 {
        assert!(
            !has_minor(&aw_plus(2 * n).unwrap(), &v8_plus_e()),
            "aw+ {}",
            2 * n
        );
    }
}

#[test]
fn distance_of_the_extra_chords() {
    // rim distance 3 for V8+e, 2 for V8+f
    let rim = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d.min(8 - d)
    };
    let extra = |g: &minorkit::Graph| {
        g.edges()
            .find(|&(a, b)| !wagner().has_edge(a, b))
            .map(|(a, b)| rim(a, b))
            .unwrap()
    };
    assert_eq!(extra(&v8_plus_e()), 3);
    assert_eq!(extra(&v8_plus_f()), 2);
}

#[test]
fn spec_strings_round_trip() {
    for s in ["aw+:6", "k33ij:2,1", "wagner", "lk33"] {
        let spec: FamilySpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
    }
    assert!("aw:7".parse::<FamilySpec>().unwrap().build().is_err());
    assert!("nope".parse::<FamilySpec>().is_err());
    assert!("aw".parse::<FamilySpec>().is_err());
}

#[test]
fn presentation_labels() {
    let spec: FamilySpec = "aw:6".parse().unwrap();
    assert_eq!(spec.edge_of("6u").unwrap(), (5, 6));
    assert_eq!(spec.edge_label(5, 6).unwrap(), "6u");
    let lad: FamilySpec = "ladder:3".parse().unwrap();
    assert_eq!(lad.edge_label(0, 3).unwrap(), "v1-u1");
}
