//! Reference implementations used only by tests. None of them calls into the
//! library's canonical-form, connectivity or minor code.
#![allow(dead_code)]

use std::collections::VecDeque;

use itertools::Itertools;
use minorkit::families::*;
use minorkit::{FamilySpec, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// G(n, p) sample.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Uniform sample with exactly `m` edges.
pub fn random_graph_m(rng: &mut StdRng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    for i in 0..m {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    Graph::from_edges(n, pairs).unwrap()
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

fn adj(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Isomorphism by trying every permutation; for n up to about 8.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let (a, b) = (adj(g), adj(h));
    (0..n)
        .permutations(n)
        .any(|p| (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

/// Number of internally vertex-disjoint s-t paths, by unit-capacity max flow
/// on the split digraph (vertex w becomes w_in -> w_out).
fn menger(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let node = |v: usize, out: bool| 2 * v + out as usize;
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[node(v, false)][node(v, true)] = if v == s || v == t { n as i32 } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[node(u, true)][node(v, false)] = n as i32;
        cap[node(v, true)][node(u, false)] = n as i32;
    }
    let (src, dst) = (node(s, true), node(t, false));
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut q = VecDeque::from([src]);
        while let Some(x) = q.pop_front() {
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            return flow;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Vertex connectivity as the minimum Menger number over non-adjacent pairs.
pub fn flow_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let a = adj(g);
    (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| !a[u][v])
        .map(|(u, v)| menger(g, u, v))
        .min()
        .unwrap_or(n - 1)
}

/// Named graphs used as a small fixed corpus.
pub fn family_corpus() -> Vec<(String, Graph)> {
    let specs = [
        "wagner",
        "v8e",
        "v8f",
        "dw:4",
        "dw+:4",
        "dw+:5",
        "aw:6",
        "aw+:6",
        "aw:8",
        "aw+:8",
        "ladder:4",
        "mobius:3",
        "mobius:4",
        "c2:5",
        "c2:6",
        "c2:7",
        "c2:8",
        "k33ij:1,0",
        "k33ij:2,1",
        "terrahawk",
        "cube",
        "petersen",
        "oct",
        "lk33",
        "k33",
    ];
    specs
        .iter()
        .map(|s| (s.to_string(), s.parse::<FamilySpec>().unwrap().build().unwrap()))
        .collect()
}

pub fn k5() -> Graph {
    Graph::complete(5).unwrap()
}

pub fn k4n(n: usize) -> Graph {
    Graph::from_edges(4 + n, (0..4).flat_map(|a| (4..4 + n).map(move |b| (a, b)))).unwrap()
}

pub fn named(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().build().unwrap()
}

pub fn v8e() -> Graph {
    v8_plus_e()
}
