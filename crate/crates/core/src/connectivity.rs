//! Separations, vertex connectivity, and the quasi/internal 4-connectivity
//! predicates.
//!
//! Everything here is exhaustive over small cut candidates. That is cheap for
//! the graph sizes this crate targets and keeps the predicates literal.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A k-separation given by its cut and the private parts of the two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Separation {
    pub cut: VertexSet,
    pub interior1: VertexSet,
    pub interior2: VertexSet,
}

impl Separation {
    pub fn order(&self) -> usize {
        self.cut.len()
    }

    /// Checks the separation invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let parts = [self.cut, self.interior1, self.interior2];
        !self.interior1.is_empty()
            && !self.interior2.is_empty()
            && parts.iter().tuple_combinations().all(|(a, b)| a.is_disjoint(*b))
            && self.cut.union(self.interior1).union(self.interior2) == g.vertices()
            && g.neighborhood(self.interior1).is_disjoint(self.interior2)
    }

    /// Vertex count of the smaller side (cut included).
    pub fn small_side(&self) -> usize {
        self.cut.len() + self.interior1.len().min(self.interior2.len())
    }
}

/// Whether deleting `cut` leaves a disconnected graph (at least two
/// components).
pub fn separates(g: &Graph, cut: VertexSet) -> bool {
    let rest = g.vertices().difference(cut);
    rest.len() >= 2 && !g.is_connected_within(rest)
}

/// Size of a smallest vertex cut; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "vertex connectivity needs at least 2 vertices, got {n}"
        )));
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    for k in 0..n - 1 {
        if has_cut_of_size(g, k) {
            return Ok(k);
        }
    }
    unreachable!("a non-complete graph has a cut of size at most n - 2")
}

fn has_cut_of_size(g: &Graph, k: usize) -> bool {
    (0..g.order())
        .combinations(k)
        .any(|c| separates(g, c.into_iter().collect()))
}

/// `n >= k + 1` and no cut of fewer than `k` vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.order() > k && (0..k).all(|s| !has_cut_of_size(g, s))
}

/// All k-separations up to swapping sides. For each k-subset `X` (in
/// lexicographic order) whose removal disconnects `g`, the components of
/// `g - X` are split into two nonempty groups in every possible way; the
/// group holding the component with the smallest vertex is `interior1`.
pub fn enumerate_separations(g: &Graph, k: usize) -> Vec<Separation> {
    let mut out = Vec::new();
    if k > g.order() {
        return out;
    }
    for cut in (0..g.order()).combinations(k) {
        let cut: VertexSet = cut.into_iter().collect();
        let comps = g.components_within(g.vertices().difference(cut));
        if comps.len() < 2 {
            continue;
        }
        let c = comps.len() - 1;
        for choice in 0u64..(1u64 << c) - 1 {
            let mut side1 = comps[0];
            let mut side2 = VertexSet::EMPTY;
            for (i, comp) in comps[1..].iter().enumerate() {
                if choice >> i & 1 == 1 {
                    side1 = side1.union(*comp);
                } else {
                    side2 = side2.union(*comp);
                }
            }
            out.push(Separation {
                cut,
                interior1: side1,
                interior2: side2,
            });
        }
    }
    out
}

pub fn enumerate_3_separations(g: &Graph) -> Vec<Separation> {
    enumerate_separations(g, 3)
}

/// 3-connected, at least five vertices, and every 3-separation has a side
/// with exactly four vertices.
pub fn is_quasi_4_connected(g: &Graph) -> bool {
    g.order() >= 5
        && is_k_connected(g, 3)
        && enumerate_3_separations(g)
            .iter()
            .all(|s| s.interior1.len() == 1 || s.interior2.len() == 1)
}

/// Quasi 4-connected, and the cut of every 3-separation is independent.
pub fn is_internally_4_connected(g: &Graph) -> bool {
    g.order() >= 5
        && is_k_connected(g, 3)
        && enumerate_3_separations(g)
            .iter()
            .all(|s| (s.interior1.len() == 1 || s.interior2.len() == 1) && is_independent(g, s.cut))
}

pub fn is_independent(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| g.neighbors(v).is_disjoint(set))
}

/// Some degree-3 vertex lies on a triangle.
pub fn has_cubic_vertex_in_triangle(g: &Graph) -> bool {
    (0..g.order()).any(|v| {
        let nb = g.neighbors(v);
        nb.len() == 3 && !is_independent(g, nb)
    })
}
