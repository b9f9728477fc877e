//! Exact minor containment.
//!
//! For a connected pattern `H` on `k` vertices and a connected host `G`,
//! `H` is a minor of `G` exactly when `V(G)` can be partitioned into `k`
//! connected blocks whose quotient graph contains `H` as a spanning
//! subgraph (vertices left out of a model can always be absorbed into a
//! neighbouring branch set). The engine enumerates such partitions block by
//! block, each block being a connected set grown from the smallest
//! unassigned vertex, and prunes on
//!
//! * the number and connectivity of the vertices still unassigned,
//! * an upper bound on each block's final quotient degree, matched against
//!   the pattern's degree sequence.
//!
//! Disconnected patterns fall back to the same search with an extra "unused"
//! choice per vertex. Patterns of minimum degree at least three first have
//! the host series-reduced (degree <= 1 vertices deleted, degree-2 vertices
//! suppressed), which does not change the answer for such patterns.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A model of a pattern in a host: one connected branch set per pattern
/// vertex and, for each pattern edge, a host edge joining the two sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorEmbedding {
    /// Indexed by pattern vertex.
    pub branch_sets: Vec<VertexSet>,
    /// `((a, b), (u, v))` with `a < b` a pattern edge, `u` in the branch set
    /// of `a` and `v` in that of `b`.
    pub edge_witness: Vec<((usize, usize), (usize, usize))>,
}

impl MinorEmbedding {
    fn from_branch_sets(host: &Graph, pattern: &Graph, branch_sets: Vec<VertexSet>) -> Self {
        let edge_witness = pattern
            .edges()
            .map(|(a, b)| {
                let (sa, sb) = (branch_sets[a], branch_sets[b]);
                let u = sa
                    .iter()
                    .find(|&u| !host.neighbors(u).is_disjoint(sb))
                    .expect("adjacent branch sets");
                let v = host.neighbors(u).intersection(sb).min().unwrap();
                ((a, b), (u, v))
            })
            .collect();
        MinorEmbedding {
            branch_sets,
            edge_witness,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct EmbeddingRepr {
    branch_sets: BTreeMap<usize, Vec<usize>>,
    witnesses: BTreeMap<String, [usize; 2]>,
}

impl Serialize for MinorEmbedding {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EmbeddingRepr {
            branch_sets: self
                .branch_sets
                .iter()
                .enumerate()
                .map(|(a, set)| (a, set.to_vec()))
                .collect(),
            witnesses: self
                .edge_witness
                .iter()
                .map(|&((a, b), (u, v))| (format!("{a}-{b}"), [u, v]))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MinorEmbedding {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = EmbeddingRepr::deserialize(d)?;
        let mut branch_sets = Vec::with_capacity(repr.branch_sets.len());
        for (i, (a, set)) in repr.branch_sets.into_iter().enumerate() {
            if a != i {
                return Err(D::Error::custom("branch sets must cover pattern vertices 0..k"));
            }
            if set.iter().any(|&v| v >= crate::graph::MAX_VERTICES) {
                return Err(D::Error::custom("branch set vertex out of range"));
            }
            branch_sets.push(set.into_iter().collect());
        }
        let mut edge_witness = Vec::with_capacity(repr.witnesses.len());
        for (key, [u, v]) in repr.witnesses {
            let (a, b) = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| D::Error::custom(format!("bad witness key {key:?}")))?;
            edge_witness.push(((a, b), (u, v)));
        }
        edge_witness.sort();
        Ok(MinorEmbedding {
            branch_sets,
            edge_witness,
        })
    }
}

/// Searches for a model of `pattern` in `host`.
pub fn find_minor(host: &Graph, pattern: &Graph) -> Option<MinorEmbedding> {
    let k = pattern.order();
    if k == 0 {
        return Some(MinorEmbedding {
            branch_sets: Vec::new(),
            edge_witness: Vec::new(),
        });
    }
    if host.order() < k || host.size() < pattern.size() {
        return None;
    }
    let info = PatternInfo::new(pattern);
    let blocks = if pattern.is_connected() {
        let (reduced, groups) = if pattern.min_degree() >= 3 {
            series_reduce(host)
        } else {
            (host.clone(), (0..host.order()).map(|v| 1u64 << v).collect())
        };
        if reduced.order() < k || reduced.size() < pattern.size() {
            return None;
        }
        reduced
            .components()
            .into_iter()
            .filter(|c| c.len() >= k)
            .find_map(|c| ModelSearch::run(&reduced, &info, c.bits(), false))
            .map(|b| expand(&b, &groups))
    } else {
        ModelSearch::run(host, &info, host.vertices().bits(), true)
            .map(|b| b.into_iter().map(VertexSet::from_bits).collect())
    }?;
    Some(MinorEmbedding::from_branch_sets(host, pattern, blocks))
}

pub fn has_minor(host: &Graph, pattern: &Graph) -> bool {
    find_minor(host, pattern).is_some()
}

/// Checks a claimed model directly against `host` and `pattern`.
pub fn verify_embedding(host: &Graph, pattern: &Graph, emb: &MinorEmbedding) -> bool {
    let k = pattern.order();
    if emb.branch_sets.len() != k {
        return false;
    }
    let n = host.order();
    let mut owner = vec![usize::MAX; n];
    for (a, set) in emb.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for v in set.iter() {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = a;
        }
    }
    // each branch set connected, by a plain stack search
    for (a, set) in emb.branch_sets.iter().enumerate() {
        let start = set.iter().next().unwrap();
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if host.has_edge(x, y) && owner[y] == a && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != set.len() {
            return false;
        }
    }
    let mut covered = HashSet::new();
    for &((a, b), (u, v)) in &emb.edge_witness {
        if a >= k || b >= k || !pattern.has_edge(a, b) {
            return false;
        }
        if u >= n || v >= n || !host.has_edge(u, v) || owner[u] != a || owner[v] != b {
            return false;
        }
        covered.insert((a.min(b), a.max(b)));
    }
    pattern.edges().all(|e| covered.contains(&e))
}

/// Brute-force reference: explores every graph reachable from `host` by
/// deleting edges, contracting edges and deleting vertices, deduplicated by
/// canonical form, and reports whether one of them is isomorphic to
/// `pattern`.
pub fn has_minor_oracle(host: &Graph, pattern: &Graph) -> Result<bool> {
    if host.order() > 8 {
        return Err(Error::OracleGuard(host.order()));
    }
    let (k, m) = (pattern.order(), pattern.size());
    let target = canonical_form(pattern);
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut stack = Vec::new();
    if host.order() >= k && host.size() >= m {
        seen.insert(canonical_form(host));
        stack.push(host.clone());
    }
    while let Some(g) = stack.pop() {
        if g.order() == k && g.size() == m && canonical_form(&g) == target {
            return Ok(true);
        }
        let mut children = Vec::new();
        for (u, v) in g.edges() {
            children.push(g.delete_edge(u, v).unwrap());
            children.push(g.contract_edge(u, v).unwrap());
        }
        for v in 0..g.order() {
            children.push(g.delete_vertex(v).unwrap());
        }
        for c in children {
            if c.order() < k || c.size() < m {
                continue;
            }
            if seen.insert(canonical_form(&c)) {
                stack.push(c);
            }
        }
    }
    Ok(false)
}

/// Planarity by Wagner's theorem: no K5 minor and no K_{3,3} minor.
pub fn is_planar(g: &Graph) -> bool {
    let k5 = Graph::complete(5).unwrap();
    let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
    !has_minor(g, &k33) && !has_minor(g, &k5)
}

/// One forbidden non-edge with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenEdge {
    pub edge: (usize, usize),
    pub witness: MinorEmbedding,
}

/// The non-edges `e` of `graph` for which `graph + e` has a `pattern` minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenEdgeSet {
    pub graph: Graph,
    pub pattern: Graph,
    pub edges: Vec<ForbiddenEdge>,
}

impl ForbiddenEdgeSet {
    pub fn contains(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.iter().any(|f| f.edge == e)
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|f| f.edge).collect()
    }
}

/// Exact forbidden-edge set; non-edges are tested in parallel and reported in
/// ascending order.
pub fn forbidden_edges(g: &Graph, pattern: &Graph) -> ForbiddenEdgeSet {
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    let edges = non_edges
        .par_iter()
        .filter_map(|&(u, v)| {
            let h = g.add_edge(u, v).unwrap();
            find_minor(&h, pattern).map(|witness| ForbiddenEdge {
                edge: (u, v),
                witness,
            })
        })
        .collect();
    ForbiddenEdgeSet {
        graph: g.clone(),
        pattern: pattern.clone(),
        edges,
    }
}

fn expand(blocks: &[u64], groups: &[u64]) -> Vec<VertexSet> {
    blocks
        .iter()
        .map(|&b| VertexSet::from_bits(VertexSet::from_bits(b).iter().fold(0, |acc, v| acc | groups[v])))
        .collect()
}

/// Deletes vertices of degree at most one and suppresses degree-2 vertices
/// until neither exists. Returns the reduced graph and, per reduced vertex,
/// the set of original vertices merged into it.
fn series_reduce(g: &Graph) -> (Graph, Vec<u64>) {
    let n = g.order();
    let mut rows: Vec<u64> = (0..n).map(|v| g.row(v)).collect();
    let mut groups: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    let mut alive = g.vertices().bits();
    loop {
        let pick = VertexSet::from_bits(alive)
            .iter()
            .find(|&v| rows[v].count_ones() <= 2);
        let Some(v) = pick else { break };
        let nb = rows[v];
        alive &= !(1u64 << v);
        for w in VertexSet::from_bits(nb) {
            rows[w] &= !(1u64 << v);
        }
        rows[v] = 0;
        if nb.count_ones() == 2 {
            let a = nb.trailing_zeros() as usize;
            let b = (nb & (nb - 1)).trailing_zeros() as usize;
            rows[a] |= 1u64 << b;
            rows[b] |= 1u64 << a;
            groups[a] |= groups[v];
        }
    }
    let keep: Vec<usize> = VertexSet::from_bits(alive).to_vec();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let new_rows = keep
        .iter()
        .map(|&v| {
            VertexSet::from_bits(rows[v])
                .iter()
                .fold(0u64, |acc, w| acc | 1u64 << index[w])
        })
        .collect();
    let new_groups = keep.iter().map(|&v| groups[v]).collect();
    (Graph::from_rows(new_rows), new_groups)
}

struct PatternInfo {
    k: usize,
    m: usize,
    deg: Vec<usize>,
    degs_asc: Vec<usize>,
    /// Pattern vertices in matching order.
    order: Vec<usize>,
    /// For each position, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
}

impl PatternInfo {
    fn new(p: &Graph) -> Self {
        let k = p.order();
        let deg = p.degrees();
        let mut degs_asc = deg.clone();
        degs_asc.sort_unstable();
        let mut order: Vec<usize> = Vec::with_capacity(k);
        let mut placed = 0u64;
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| ((p.row(v) & placed).count_ones(), deg[v], std::cmp::Reverse(v)))
                .unwrap();
            order.push(next);
            placed |= 1u64 << next;
        }
        let back = (0..k)
            .map(|t| (0..t).filter(|&s| p.has_edge(order[s], order[t])).collect())
            .collect();
        PatternInfo {
            k,
            m: p.size(),
            deg,
            degs_asc,
            order,
            back,
        }
    }
}

struct ModelSearch<'a> {
    host: &'a Graph,
    pat: &'a PatternInfo,
    allow_unused: bool,
    blocks: Vec<u64>,
    block_nbrs: Vec<u64>,
    unassigned: u64,
    found: Option<Vec<u64>>,
}

impl<'a> ModelSearch<'a> {
    /// Searches within `region`; on success returns the branch sets indexed
    /// by pattern vertex.
    fn run(host: &'a Graph, pat: &'a PatternInfo, region: u64, allow_unused: bool) -> Option<Vec<u64>> {
        let mut s = ModelSearch {
            host,
            pat,
            allow_unused,
            blocks: Vec::with_capacity(pat.k),
            block_nbrs: Vec::with_capacity(pat.k),
            unassigned: region,
            found: None,
        };
        s.extend();
        s.found
    }

    fn extend(&mut self) -> bool {
        let k = self.pat.k;
        if self.blocks.len() == k {
            if !self.allow_unused && self.unassigned != 0 {
                return false;
            }
            return self.check_quotient();
        }
        if self.unassigned == 0 {
            return false;
        }
        let r = self.unassigned.trailing_zeros() as usize;
        let rbit = 1u64 << r;
        if self.allow_unused && (self.unassigned.count_ones() as usize) > k - self.blocks.len() {
            self.unassigned &= !rbit;
            let ok = self.extend();
            self.unassigned |= rbit;
            if ok {
                return true;
            }
        }
        let ext = self.host.row(r) & self.unassigned & !rbit;
        self.grow_block(rbit, ext, 0)
    }

    /// Enumerates each connected set containing `set`, extended only through
    /// `ext` and never through `forb`, exactly once.
    fn grow_block(&mut self, set: u64, ext: u64, forb: u64) -> bool {
        if self.try_block(set) {
            return true;
        }
        let still_needed = self.pat.k - self.blocks.len() - 1;
        let cap = self.unassigned.count_ones() as usize - still_needed;
        if set.count_ones() as usize >= cap {
            return false;
        }
        let mut ext_local = ext;
        let mut forb_local = forb;
        while ext_local != 0 {
            let v = ext_local.trailing_zeros() as usize;
            let vbit = 1u64 << v;
            ext_local &= !vbit;
            let grown = self.host.row(v) & self.unassigned & !set & !forb_local & !vbit;
            if self.grow_block(set | vbit, ext_local | grown, forb_local) {
                return true;
            }
            forb_local |= vbit;
        }
        false
    }

    fn try_block(&mut self, set: u64) -> bool {
        let rest = self.unassigned & !set;
        let need = self.pat.k - self.blocks.len() - 1;
        let rest_count = rest.count_ones() as usize;
        if rest_count < need {
            return false;
        }
        if !self.allow_unused {
            if need == 0 && rest != 0 {
                return false;
            }
            if need > 0 && self.host.components_within(VertexSet::from_bits(rest)).len() > need {
                return false;
            }
        }
        let nbrs = self.host.neighborhood(VertexSet::from_bits(set)).bits() & !set;
        self.blocks.push(set);
        self.block_nbrs.push(nbrs);
        let ok = self.degrees_feasible(rest, need) && {
            let saved = self.unassigned;
            self.unassigned = rest;
            let ok = self.extend();
            self.unassigned = saved;
            ok
        };
        self.blocks.pop();
        self.block_nbrs.pop();
        ok
    }

    /// Each existing block can reach at most (adjacent blocks) +
    /// min(unassigned neighbours, blocks still to come) in the quotient; the
    /// sorted bounds must dominate the smallest pattern degrees.
    fn degrees_feasible(&self, rest: u64, need: usize) -> bool {
        let b = self.blocks.len();
        let mut ub: [usize; 64] = [0; 64];
        for (i, (slot, &nb)) in ub.iter_mut().zip(&self.block_nbrs).enumerate() {
            let adjacent = (0..b).filter(|&j| j != i && nb & self.blocks[j] != 0).count();
            *slot = adjacent + ((nb & rest).count_ones() as usize).min(need);
        }
        let ub = &mut ub[..b];
        ub.sort_unstable();
        ub.iter().zip(&self.pat.degs_asc).all(|(u, d)| u >= d)
    }

    fn check_quotient(&mut self) -> bool {
        let k = self.pat.k;
        let mut q = vec![0u64; k];
        let mut edges = 0;
        for i in 0..k {
            for j in i + 1..k {
                if self.block_nbrs[i] & self.blocks[j] != 0 {
                    q[i] |= 1u64 << j;
                    q[j] |= 1u64 << i;
                    edges += 1;
                }
            }
        }
        if edges < self.pat.m {
            return false;
        }
        let qdeg: Vec<usize> = q.iter().map(|r| r.count_ones() as usize).collect();
        let mut map = vec![usize::MAX; k];
        if spanning_match(self.pat, &q, &qdeg, &mut map, 0, 0) {
            let mut out = vec![0u64; k];
            for (t, &a) in self.pat.order.iter().enumerate() {
                out[a] = self.blocks[map[t]];
            }
            self.found = Some(out);
            true
        } else {
            false
        }
    }
}

/// Maps pattern positions `t..` injectively into quotient vertices so that
/// every pattern edge lands on a quotient edge.
fn spanning_match(
    pat: &PatternInfo,
    q: &[u64],
    qdeg: &[usize],
    map: &mut [usize],
    t: usize,
    used: u64,
) -> bool {
    if t == pat.k {
        return true;
    }
    let need = pat.deg[pat.order[t]];
    let mut cand = !used & VertexSet::first(pat.k).bits();
    for &s in &pat.back[t] {
        cand &= q[map[s]];
    }
    while cand != 0 {
        let c = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if qdeg[c] < need {
            continue;
        }
        map[t] = c;
        if spanning_match(pat, q, qdeg, map, t + 1, used | 1u64 << c) {
            return true;
        }
    }
    false
}
