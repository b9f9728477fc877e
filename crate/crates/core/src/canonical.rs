//! Canonical labelling by equitable refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell
//! and recurse. Each discrete leaf gives a vertex ordering; the canonical
//! form is the graph6 string of the ordering whose upper-triangle bit string
//! is lexicographically largest. Leaves that reproduce the current best
//! matrix yield automorphisms, which are used to skip sibling branches lying
//! in the same orbit of the pointwise stabiliser of the current prefix.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::io::{decode_graph6, encode_graph6};

/// graph6 string of the canonically relabelled graph. Two graphs have equal
/// canonical forms exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        decode_graph6(&self.0).expect("canonical form is valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Canon({})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(encode_graph6(&canonical_graph(g)))
}

/// `g` relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.visit(vec![g.vertices().bits()], &mut prefix);
    let (_, order) = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && sorted_degrees(g) == sorted_degrees(h)
        && canonical_form(g) == canonical_form(h)
}

/// One representative per isomorphism class, ordered by canonical form. The
/// first graph seen in each class is the one kept.
pub fn dedup<I: IntoIterator<Item = Graph>>(graphs: I) -> Vec<Graph> {
    dedup_keyed(graphs).into_values().collect()
}

pub fn dedup_keyed<I: IntoIterator<Item = Graph>>(graphs: I) -> BTreeMap<CanonicalForm, Graph> {
    let mut out = BTreeMap::new();
    for g in graphs {
        out.entry(canonical_form(&g)).or_insert(g);
    }
    out
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

struct Search<'a> {
    g: &'a Graph,
    /// Best leaf code so far and its vertex order.
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms found so far, as images `gamma[v]`.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !tried.is_empty() && self.same_orbit(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` is in the orbit of an already explored sibling under the
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(self.g, &order);
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best_code, best_order)) => match code.cmp(best_code) {
                std::cmp::Ordering::Greater => self.best = Some((code, order)),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0; order.len()];
                    for (a, b) in best_order.iter().zip(&order) {
                        gamma[*a] = *b;
                    }
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.autos.push(gamma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }
}

/// Upper-triangle bits of the relabelled matrix, column-major, packed
/// most-significant first so that word order equals bit order.
fn leaf_code(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; total.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        let row = g.row(order[j]);
        for &oi in &order[..j] {
            if row >> oi & 1 == 1 {
                code[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

/// Refines an ordered partition to the coarsest equitable refinement. Cells
/// split by neighbour count into each splitter cell, fragments ordered by
/// increasing count, so the result is invariant under relabelling.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut scratch: Vec<u64> = Vec::with_capacity(cells.len() + 4);
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            scratch.clear();
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    scratch.push(cell);
                    continue;
                }
                // (count, members) groups, at most 65 distinct counts
                let mut groups: [u64; 65] = [0; 65];
                let mut used: u128 = 0;
                let mut c = cell;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    let k = (g.row(v) & splitter).count_ones() as usize;
                    groups[k] |= 1u64 << v;
                    used |= 1u128 << k;
                }
                if used.count_ones() == 1 {
                    scratch.push(cell);
                    continue;
                }
                changed = true;
                while used != 0 {
                    let k = used.trailing_zeros() as usize;
                    used &= used - 1;
                    scratch.push(groups[k]);
                }
            }
            std::mem::swap(cells, &mut scratch);
            w += 1;
        }
        if !changed {
            break;
        }
    }
}
