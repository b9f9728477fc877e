//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex. All structural
//! operations return new values; a [`Graph`] is never mutated through the
//! public API.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn first(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::first(n).bits();
        for v in 0..n {
            g.rows[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.link(u, v);
        }
        Ok(g)
    }

    /// Number of vertices, `|G|`.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, `||G||`.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::first(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Union of the neighbourhoods of the vertices in `set`.
    #[inline]
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        let mut acc = 0;
        for v in set {
            acc |= self.rows[v];
        }
        VertexSet(acc)
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !(2u64 << u).wrapping_sub(1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertices().bits();
        (0..self.n).flat_map(move |u| {
            VertexSet(!self.rows[u] & all & !(2u64 << u).wrapping_sub(1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.bits();
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let comp = self.reach(start, within.bits());
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Whether `within` induces a connected subgraph (the empty set counts as
    /// connected).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.min() {
            None => true,
            Some(v) => self.reach(1u64 << v, within.bits()) == within.bits(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    #[inline]
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Removes `v`; labels above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.drop_vertex(v))
    }

    /// Contracts edge `uv` and simplifies. The merged vertex keeps label
    /// `min(u, v)`; labels above `max(u, v)` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        Ok(self.merge(u.min(v), u.max(v)))
    }

    /// Splits `v` into adjacent vertices `x` and `y` with `N(x) = X + y` and
    /// `N(y) = Y + x`. `x` reuses label `v` and `y` gets the new label `n`.
    pub fn split_vertex(&self, v: usize, x: VertexSet, y: VertexSet) -> Result<Graph> {
        self.check_vertex(v)?;
        let nbrs = self.neighbors(v);
        if nbrs.len() < 4 {
            return Err(Error::DegreeTooSmall {
                vertex: v,
                degree: nbrs.len(),
            });
        }
        if x.union(y) != nbrs {
            return Err(Error::CoverViolated(v));
        }
        if x.len() < 2 || y.len() < 2 {
            return Err(Error::SideTooSmall(x.len().min(y.len())));
        }
        if self.n >= MAX_VERTICES {
            return Err(Error::Capacity(self.n + 1));
        }
        let mut g = self.clone();
        let new = g.n;
        g.n += 1;
        g.rows.push(0);
        for w in nbrs {
            g.unlink(v, w);
        }
        for w in x {
            g.link(v, w);
        }
        for w in y {
            g.link(new, w);
        }
        g.link(v, new);
        Ok(g)
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph {
            n: self.n,
            rows: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `keep`, relabelled by order-preserving compaction.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let verts: Vec<usize> = keep.intersection(self.vertices()).to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph {
            n: verts.len(),
            rows: vec![0; verts.len()],
        };
        for (i, &v) in verts.iter().enumerate() {
            for w in self.neighbors(v).intersection(keep) {
                g.rows[i] |= 1u64 << index[w];
            }
        }
        g
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        Graph { n: rows.len(), rows }
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
    }

    /// Merge `b` into `a` (no adjacency requirement) and drop `b`.
    pub(crate) fn merge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        let combined = (g.rows[a] | g.rows[b]) & !(1u64 << a) & !(1u64 << b);
        for w in VertexSet(g.rows[b]) {
            g.rows[w] &= !(1u64 << b);
        }
        g.rows[b] = 0;
        for w in VertexSet(g.rows[a]) {
            g.rows[w] &= !(1u64 << a);
        }
        g.rows[a] = 0;
        for w in VertexSet(combined) {
            g.link(a, w);
        }
        g.drop_vertex(b)
    }

    fn drop_vertex(&self, v: usize) -> Graph {
        let low = (1u64 << v) - 1;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(w, _)| w != v)
            .map(|(_, &r)| (r & low) | ((r >> 1) & !low))
            .collect();
        Graph::from_rows(rows)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::encode_graph6(self))
    }
}

impl std::str::FromStr for Graph {
    type Err = Error;

    /// Parses graph6, the inverse of `Display`.
    fn from_str(s: &str) -> Result<Self> {
        crate::io::decode_graph6(s)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&crate::io::encode_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::io::decode_graph6(&s).map_err(serde::de::Error::custom)
    }
}
