//! Generators for the named graphs, and a small registry mapping
//! `name[:params]` strings to them.
//!
//! Storage labels are 0-based. Each family also has presentation labels
//! (`1..k`, `u`, `v`, ...) so that edge lists can be printed the way they are
//! written by hand; see [`FamilySpec::labels`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

/// The cycle `0, 1, ..., n-1`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param("cycle", "needs n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
}

/// Rim `0..n`, hubs `u = n` and `v = n + 1` joined to every rim vertex.
pub fn dw(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param("dw", "needs n >= 3"));
    }
    let mut g = Graph::empty(n + 2)?;
    for i in 0..n {
        g.link(i, (i + 1) % n);
        g.link(i, n);
        g.link(i, n + 1);
    }
    Ok(g)
}

pub fn dw_plus(n: usize) -> Result<Graph> {
    let mut g = dw(n).map_err(|_| param("dw+", "needs n >= 3"))?;
    g.link(n, n + 1);
    Ok(g)
}

/// Alternating double wheel on a rim of length `rim` (even, at least 6).
/// Rim `0..rim`; `u = rim` is joined to the even rim vertices and
/// `v = rim + 1` to the odd ones, so with 1-based rim labels `u` sees
/// `1, 3, 5, ...` and `v` sees `2, 4, 6, ...`.
pub fn aw(rim: usize) -> Result<Graph> {
    if rim < 6 || rim % 2 == 1 {
        return Err(param("aw", "rim length must be even and at least 6"));
    }
    let mut g = Graph::empty(rim + 2)?;
    for i in 0..rim {
        g.link(i, (i + 1) % rim);
        g.link(i, rim + i % 2);
    }
    Ok(g)
}

pub fn aw_plus(rim: usize) -> Result<Graph> {
    let mut g = aw(rim).map_err(|_| param("aw+", "rim length must be even and at least 6"))?;
    g.link(rim, rim + 1);
    Ok(g)
}

/// `v_i = i - 1` and `u_i = n + i - 1` for `i = 1..n`.
pub fn ladder(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param("ladder", "needs n >= 3"));
    }
    let mut g = Graph::empty(2 * n)?;
    for i in 0..n {
        g.link(i, n + i);
        if i + 1 < n {
            g.link(i, i + 1);
            g.link(n + i, n + i + 1);
        }
    }
    Ok(g)
}

/// The ladder plus `v_1 u_n` and `v_n u_1`.
pub fn mobius(n: usize) -> Result<Graph> {
    let mut g = ladder(n).map_err(|_| param("mobius", "needs n >= 3"))?;
    g.link(0, 2 * n - 1);
    g.link(n - 1, n);
    Ok(g)
}

/// Square of the cycle `0..n`.
pub fn cycle_sq(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(param("c2", "needs n >= 5"));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        g.link(i, (i + 1) % n);
        g.link(i, (i + 2) % n);
    }
    Ok(g)
}

/// K_{3,3} with `i` edges added inside `{0,1,2}` and `j` inside `{3,4,5}`,
/// taken in the order `01, 12, 02` (shifted by 3 for the second side).
pub fn k33_ij(i: usize, j: usize) -> Result<Graph> {
    if i > 3 || j > 3 {
        return Err(param("k33ij", "i and j must lie in 0..=3"));
    }
    const INNER: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];
    let mut g = k33();
    for &(a, b) in &INNER[..i] {
        g.link(a, b);
    }
    for &(a, b) in &INNER[..j] {
        g.link(a + 3, b + 3);
    }
    Ok(g)
}

/// Rim `0..8` plus the four chords `{i, i+4}`.
pub fn wagner() -> Graph {
    let mut g = cycle(8).unwrap();
    for i in 0..4 {
        g.link(i, i + 4);
    }
    g
}

/// Wagner graph plus the rim chord `{0, 3}` (distance 3).
pub fn v8_plus_e() -> Graph {
    let mut g = wagner();
    g.link(0, 3);
    g
}

/// Wagner graph plus the rim chord `{0, 2}` (distance 2).
pub fn v8_plus_f() -> Graph {
    let mut g = wagner();
    g.link(0, 2);
    g
}

/// 3-cube on `0..8`, `x ~ y` when the labels differ in one bit.
pub fn cube() -> Graph {
    let mut g = Graph::empty(8).unwrap();
    for x in 0..8 {
        for b in 0..3 {
            g.link(x, x ^ (1 << b));
        }
    }
    g
}

/// Cube plus apex `8` joined to the face `{0, 1, 2, 3}`.
pub fn terrahawk() -> Graph {
    let mut g = Graph::empty(9).unwrap();
    for (a, b) in cube().edges() {
        g.link(a, b);
    }
    for x in 0..4 {
        g.link(8, x);
    }
    g
}

/// Outer 5-cycle `0..5`, inner pentagram on `5..10`, spokes `i ~ 5 + i`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for i in 0..5 {
        g.link(i, (i + 1) % 5);
        g.link(5 + i, 5 + (i + 2) % 5);
        g.link(i, 5 + i);
    }
    g
}

/// Octahedron K_{2,2,2}: K6 minus the matching `01, 23, 45`.
pub fn oct() -> Graph {
    let mut g = Graph::complete(6).unwrap();
    for i in 0..3 {
        g.unlink(2 * i, 2 * i + 1);
    }
    g
}

/// Vertices are the edges of `g` in ascending order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut l = Graph::empty(edges.len())?;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                l.link(i, j);
            }
        }
    }
    Ok(l)
}

/// `g + a1a3 + a2a4` for a path `a1 a2 a3 a4` of `g`.
pub fn add_cross_chords(g: &Graph, a1: usize, a2: usize, a3: usize, a4: usize) -> Result<Graph> {
    let p = [a1, a2, a3, a4];
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
    if p.iter().any(|&x| x >= g.order())
        || !distinct
        || !(g.has_edge(a1, a2) && g.has_edge(a2, a3) && g.has_edge(a3, a4))
    {
        return Err(Error::NotAPath(p));
    }
    for (x, y) in [(a1, a3), (a2, a4)] {
        if g.has_edge(x, y) {
            return Err(Error::EdgePresent(x.min(y), x.max(y)));
        }
    }
    g.add_edge(a1, a3)?.add_edge(a2, a4)
}

fn param(family: &str, reason: &str) -> Error {
    Error::FamilyParam {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

/// Names accepted by [`FamilySpec`].
pub const FAMILY_NAMES: &[&str] = &[
    "wagner",
    "v8e",
    "v8f",
    "dw",
    "dw+",
    "aw",
    "aw+",
    "ladder",
    "mobius",
    "c2",
    "k33ij",
    "terrahawk",
    "cube",
    "petersen",
    "oct",
    "lk33",
    "k33",
];

/// A named family member, written `name` or `name:p1,p2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(name: &str, params: &[usize]) -> Result<Self> {
        if !FAMILY_NAMES.contains(&name) {
            return Err(Error::UnknownFamily(name.to_string()));
        }
        let want = match name {
            "k33ij" => 2,
            "dw" | "dw+" | "aw" | "aw+" | "ladder" | "mobius" | "c2" => 1,
            _ => 0,
        };
        if params.len() != want {
            return Err(param(
                name,
                &format!("expects {want} parameter(s), got {}", params.len()),
            ));
        }
        Ok(FamilySpec {
            name: name.to_string(),
            params: params.to_vec(),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        let p = |i: usize| self.params[i];
        match self.name.as_str() {
            "wagner" => Ok(wagner()),
            "v8e" => Ok(v8_plus_e()),
            "v8f" => Ok(v8_plus_f()),
            "dw" => dw(p(0)),
            "dw+" => dw_plus(p(0)),
            "aw" => aw(p(0)),
            "aw+" => aw_plus(p(0)),
            "ladder" => ladder(p(0)),
            "mobius" => mobius(p(0)),
            "c2" => cycle_sq(p(0)),
            "k33ij" => k33_ij(p(0), p(1)),
            "terrahawk" => Ok(terrahawk()),
            "cube" => Ok(cube()),
            "petersen" => Ok(petersen()),
            "oct" => Ok(oct()),
            "lk33" => line_graph(&k33()),
            "k33" => Ok(k33()),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    /// Presentation label of every stored vertex.
    pub fn labels(&self) -> Result<Vec<String>> {
        let g = self.build()?;
        let n = g.order();
        let numbered = |k: usize| (1..=k).map(|i| i.to_string()).collect::<Vec<_>>();
        Ok(match self.name.as_str() {
            "dw" | "dw+" | "aw" | "aw+" => {
                let mut l = numbered(n - 2);
                l.push("u".into());
                l.push("v".into());
                l
            }
            "ladder" | "mobius" => {
                let k = n / 2;
                (1..=k)
                    .map(|i| format!("v{i}"))
                    .chain((1..=k).map(|i| format!("u{i}")))
                    .collect()
            }
            "lk33" => k33()
                .edges()
                .map(|(a, b)| format!("x{}y{}", a + 1, b - 2))
                .collect(),
            _ => numbered(n),
        })
    }

    /// Human-readable description of the storage labelling.
    pub fn labeling_doc(&self) -> String {
        match self.name.as_str() {
            "wagner" => "rim 1..8 -> 0..7; chords {i, i+4}".into(),
            "v8e" => "wagner labelling; extra chord 14 -> (0,3)".into(),
            "v8f" => "wagner labelling; extra chord 13 -> (0,2)".into(),
            "dw" | "dw+" | "aw" | "aw+" => {
                let k = self.params[0];
                let hubs = if self.name.starts_with("aw") {
                    "; u sees odd rim labels, v sees even ones"
                } else {
                    ""
                };
                format!("rim 1..{k} -> 0..{}; u -> {k}; v -> {}{hubs}", k - 1, k + 1)
            }
            "ladder" | "mobius" => {
                let k = self.params[0];
                format!("v1..v{k} -> 0..{}; u1..u{k} -> {k}..{}", k - 1, 2 * k - 1)
            }
            "c2" => {
                let k = self.params[0];
                format!("cycle 1..{k} -> 0..{}", k - 1)
            }
            "k33" => "X1 = 1,2,3 -> 0,1,2; X2 = 4,5,6 -> 3,4,5".into(),
            "k33ij" => "X1 = 1,2,3 -> 0,1,2; X2 = 4,5,6 -> 3,4,5; inner edges added in order 12, 23, 13".into(),
            "terrahawk" => "cube 1..8 -> 0..7 (bit adjacency); apex 9 -> 8 on face 1,2,3,4".into(),
            "cube" => "1..8 -> 0..7, adjacent when labels differ in one bit".into(),
            "petersen" => "outer 1..5 -> 0..4; inner 6..10 -> 5..9 as a pentagram; spokes i -> i+5".into(),
            "oct" => "1..6 -> 0..5; missing edges 12, 34, 56".into(),
            "lk33" => "vertex xiyj is the K33 edge between side-1 vertex i and side-2 vertex j, in lexicographic order".into(),
            _ => String::new(),
        }
    }

    /// Storage vertex carrying a presentation label.
    pub fn vertex_of(&self, label: &str) -> Result<usize> {
        self.labels()?
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| param(&self.name, &format!("no vertex labelled {label:?}")))
    }

    /// Presentation form of a storage edge: `15` when both labels are single
    /// characters, `v1-u2` otherwise.
    pub fn edge_label(&self, u: usize, v: usize) -> Result<String> {
        let labels = self.labels()?;
        let get = |x: usize| {
            labels
                .get(x)
                .cloned()
                .ok_or_else(|| param(&self.name, &format!("no vertex {x}")))
        };
        let (a, b) = (get(u.min(v))?, get(u.max(v))?);
        Ok(if a.len() == 1 && b.len() == 1 {
            format!("{a}{b}")
        } else {
            format!("{a}-{b}")
        })
    }

    /// Parses a two-character edge such as `15` or `6u` into storage labels.
    /// Only meaningful for families whose labels are single characters.
    pub fn edge_of(&self, text: &str) -> Result<(usize, usize)> {
        let chars: Vec<char> = text.chars().collect();
        if chars.len() != 2 {
            return Err(param(&self.name, &format!("edge {text:?} is not two labels")));
        }
        let a = self.vertex_of(&chars[0].to_string())?;
        let b = self.vertex_of(&chars[1].to_string())?;
        Ok((a.min(b), a.max(b)))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| param(name, &format!("bad parameter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::new(name, &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_formulas() {
        for n in 3..=10 {
            let d = dw(n).unwrap();
            assert_eq!((d.order(), d.size()), (n + 2, 3 * n));
            assert_eq!(dw_plus(n).unwrap().size(), 3 * n + 1);
            let l = ladder(n).unwrap();
            assert_eq!((l.order(), l.size()), (2 * n, 3 * n - 2));
            assert_eq!(mobius(n).unwrap().size(), 3 * n);
            let a = aw(2 * n).unwrap();
            assert_eq!((a.order(), a.size()), (2 * n + 2, 4 * n));
            assert!(a.degrees()[..2 * n].iter().all(|&d| d == 3));
        }
        for n in 5..=10 {
            assert_eq!(cycle_sq(n).unwrap().size(), 2 * n);
        }
        assert_eq!(terrahawk().size(), 16);
        assert_eq!((petersen().order(), petersen().size()), (10, 15));
        assert_eq!((oct().order(), oct().size()), (6, 12));
        assert_eq!(v8_plus_e().size(), 13);
        assert_eq!(v8_plus_f().size(), 13);
        let l = line_graph(&k33()).unwrap();
        assert_eq!((l.order(), l.size()), (9, 18));
        assert_eq!(ladder(5).unwrap().size(), 13);
    }

    #[test]
    fn parameter_errors() {
        assert!(dw(2).is_err());
        assert!(aw(7).is_err());
        assert!(aw(4).is_err());
        assert!(cycle_sq(4).is_err());
        assert!(k33_ij(4, 0).is_err());
        assert!(matches!(
            "foo".parse::<FamilySpec>(),
            Err(Error::UnknownFamily(_))
        ));
        assert!("aw".parse::<FamilySpec>().is_err());
        assert!("aw:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn cross_chords() {
        let p4 = path(4).unwrap();
        let x = add_cross_chords(&p4, 0, 1, 2, 3).unwrap();
        assert_eq!(x, Graph::complete(4).unwrap().delete_edge(0, 3).unwrap());
        assert!(matches!(
            add_cross_chords(&p4, 0, 2, 1, 3),
            Err(Error::NotAPath(_))
        ));
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            add_cross_chords(&k4, 0, 1, 2, 3),
            Err(Error::EdgePresent(..))
        ));
    }

    #[test]
    fn spec_round_trip_and_labels() {
        let s: FamilySpec = "aw+:6".parse().unwrap();
        assert_eq!(s.to_string(), "aw+:6");
        assert_eq!(s.labels().unwrap(), ["1", "2", "3", "4", "5", "6", "u", "v"]);
        assert_eq!(s.edge_of("6u").unwrap(), (5, 6));
        let k: FamilySpec = "k33ij:1,2".parse().unwrap();
        assert_eq!(k.build().unwrap().size(), 12);
        for name in FAMILY_NAMES {
            let params: &[usize] = match *name {
                "k33ij" => &[1, 1],
                "aw" | "aw+" => &[8],
                "dw" | "dw+" | "ladder" | "mobius" | "c2" => &[5],
                _ => &[],
            };
            let spec = FamilySpec::new(name, params).unwrap();
            let g = spec.build().unwrap();
            assert_eq!(spec.labels().unwrap().len(), g.order(), "{name}");
            assert!(g.is_connected(), "{name}");
            assert!(!spec.labeling_doc().is_empty(), "{name}");
        }
    }
}
