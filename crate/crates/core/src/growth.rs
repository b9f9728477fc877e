//! Seed-rooted generation by edge additions and vertex splits.
//!
//! A *stage* is a sequence of at most `max_ops` primitive operations. Every
//! graph met along the way is classified once (by canonical form): if it
//! contains the filter pattern it is eliminated and never expanded, since
//! both operations preserve minors. Otherwise it is expanded further while
//! the stage has operations left, and if it is internally 4-connected it
//! becomes a survivor and seeds the next stage with a fresh budget.
//!
//! Each round expands the current layer in parallel, then merges the
//! results sequentially in layer order, so reports do not depend on the
//! number of worker threads.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::connectivity::is_internally_4_connected;
use crate::error::{Error, Result};
use crate::families::{v8_plus_e, wagner};
use crate::graph::{Graph, VertexSet};
use crate::minor::{find_minor, MinorEmbedding};

/// One primitive operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Op {
    AddEdge {
        u: usize,
        v: usize,
    },
    /// `x` keeps label `v`; `y` gets the next free label.
    Split {
        v: usize,
        x: VertexSet,
        y: VertexSet,
    },
}

impl Op {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Op::AddEdge { u, v } => {
                if g.has_edge(*u, *v) {
                    return Err(Error::EdgePresent(*u.min(v), *u.max(v)));
                }
                g.add_edge(*u, *v)
            }
            Op::Split { v, x, y } => g.split_vertex(*v, *x, *y),
        }
    }
}

/// How a graph was reached: the index of its seed and the operations applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpTrace {
    pub seed: usize,
    pub steps: Vec<Op>,
}

impl OpTrace {
    pub fn replay(&self, seeds: &[Seed]) -> Result<Graph> {
        let seed = seeds
            .get(self.seed)
            .ok_or_else(|| Error::Precondition(format!("trace refers to missing seed {}", self.seed)))?;
        self.steps
            .iter()
            .try_fold(seed.graph.clone(), |g, op| op.apply(&g))
    }

    fn then(&self, op: Op) -> OpTrace {
        let mut steps = self.steps.clone();
        steps.push(op);
        OpTrace {
            seed: self.seed,
            steps,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    pub name: String,
    #[serde(rename = "graph6")]
    pub graph: Graph,
}

impl Seed {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Seed {
            name: name.into(),
            graph,
        }
    }
}

/// An internally 4-connected graph that passed the filter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthNode {
    #[serde(rename = "graph6")]
    pub graph: Graph,
    pub canon: CanonicalForm,
    pub trace: OpTrace,
    /// Number of completed stages.
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eliminated {
    #[serde(rename = "graph6")]
    pub graph: Graph,
    pub canon: CanonicalForm,
    pub witness: MinorEmbedding,
}

/// Which graphs may survive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Filter {
    #[serde(rename = "v8e-free")]
    V8eFree,
    #[serde(rename = "v8-free")]
    V8Free,
    #[serde(rename = "always")]
    Always,
}

impl Filter {
    /// The excluded minor, if any.
    pub fn pattern(self) -> Option<Graph> {
        match self {
            Filter::V8eFree => Some(v8_plus_e()),
            Filter::V8Free => Some(wagner()),
            Filter::Always => None,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::V8eFree => "v8e-free",
            Filter::V8Free => "v8-free",
            Filter::Always => "always",
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v8e-free" | "v8e-minor-free" => Ok(Filter::V8eFree),
            "v8-free" | "v8-minor-free" => Ok(Filter::V8Free),
            "always" => Ok(Filter::Always),
            other => Err(Error::Precondition(format!("unknown filter {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_stages: usize,
    /// Operations per stage, 1 to 3.
    #[serde(default = "default_max_ops")]
    pub max_ops: usize,
    /// Restrict splits to disjoint covers creating a degree-3 vertex.
    #[serde(default = "default_degree3_only")]
    pub degree3_only: bool,
}

fn default_max_ops() -> usize {
    3
}

fn default_degree3_only() -> bool {
    true
}

impl Bounds {
    pub fn new(max_vertices: usize, max_edges: usize, max_stages: usize) -> Self {
        Bounds {
            max_vertices,
            max_edges,
            max_stages,
            max_ops: default_max_ops(),
            degree3_only: default_degree3_only(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_edges == 0 || self.max_stages == 0 {
            return Err(Error::Bounds("bounds must be positive".into()));
        }
        if !(1..=3).contains(&self.max_ops) {
            return Err(Error::Bounds(format!(
                "max_ops must be 1..=3, got {}",
                self.max_ops
            )));
        }
        if self.max_vertices > crate::graph::MAX_VERTICES {
            return Err(Error::Capacity(self.max_vertices));
        }
        Ok(())
    }

    fn admits(&self, g: &Graph) -> bool {
        g.order() <= self.max_vertices && g.size() <= self.max_edges
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub seed: Vec<Seed>,
    pub filter: Filter,
    pub bounds: Bounds,
    /// Distinct isomorphism classes classified, seeds included.
    pub explored: usize,
    /// Sorted by canonical form.
    pub survivors: Vec<GrowthNode>,
    /// Sorted by canonical form.
    pub eliminated: Vec<Eliminated>,
    /// Survivors whose expansion was cut short by the vertex or edge bound,
    /// or which were reached in the last stage.
    pub truncated: Vec<CanonicalForm>,
}

impl GrowthReport {
    pub fn survivor(&self, canon: &CanonicalForm) -> Option<&GrowthNode> {
        self.survivors
            .binary_search_by(|n| n.canon.cmp(canon))
            .ok()
            .map(|i| &self.survivors[i])
    }
}

/// One representative per isomorphism class of `g + e`, sorted by
/// canonical form.
pub fn edge_additions(g: &Graph) -> Vec<Graph> {
    graphs_of(addition_moves(g))
}

/// One representative per isomorphism class of the splits of `g`, sorted
/// by canonical form.
pub fn vertex_splits(g: &Graph, degree3_only: bool) -> Vec<Graph> {
    graphs_of(split_moves(g, (0..g.order()).collect(), degree3_only))
}

/// As [`vertex_splits`], restricted to splits of `v`.
pub fn vertex_splits_at(g: &Graph, v: usize, degree3_only: bool) -> Vec<Graph> {
    graphs_of(split_moves(g, vec![v], degree3_only))
}

/// Internally 4-connected graphs reachable from `g` in 1 to `max_ops`
/// operations (intermediates unrestricted), sorted by canonical form.
pub fn successors_i4c(g: &Graph, max_ops: usize) -> Result<Vec<Graph>> {
    let n = g.order() + max_ops;
    let bounds = Bounds {
        max_vertices: n,
        max_edges: n * (n - 1) / 2,
        max_stages: 1,
        max_ops,
        degree3_only: true,
    };
    let report = grow(&[Seed::new("g", g.clone())], Filter::Always, &bounds)?;
    Ok(report
        .survivors
        .into_iter()
        .filter(|s| s.depth > 0)
        .map(|s| s.graph)
        .collect())
}

/// [`grow`] on a dedicated pool of `jobs` threads.
pub fn grow_with_jobs(seeds: &[Seed], filter: Filter, bounds: &Bounds, jobs: usize) -> Result<GrowthReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| grow(seeds, filter, bounds))
}

pub fn grow(seeds: &[Seed], filter: Filter, bounds: &Bounds) -> Result<GrowthReport> {
    bounds.validate()?;
    for s in seeds {
        if !is_internally_4_connected(&s.graph) {
            return Err(Error::Precondition(format!(
                "seed {} ({}) is not internally 4-connected",
                s.name, s.graph
            )));
        }
        if !bounds.admits(&s.graph) {
            return Err(Error::Bounds(format!("seed {} exceeds the bounds", s.name)));
        }
    }
    let pattern = filter.pattern();
    let mut run = Run {
        pattern: pattern.as_ref(),
        passed: HashMap::new(),
        survivors: BTreeMap::new(),
        eliminated: BTreeMap::new(),
        truncated: BTreeSet::new(),
        explored: 0,
    };

    let seed_items = seeds
        .iter()
        .enumerate()
        .map(|(i, s)| Item {
            graph: s.graph.clone(),
            canon: canonical_form(&s.graph),
            trace: OpTrace {
                seed: i,
                steps: Vec::new(),
            },
        })
        .collect();
    let (mut frontier, _) = run.classify(seed_items, 0);

    for stage in 0..bounds.max_stages {
        let mut seen: HashSet<CanonicalForm> = frontier.iter().map(|c| c.canon.clone()).collect();
        let mut layer = std::mem::take(&mut frontier);
        for _ in 0..bounds.max_ops {
            if layer.is_empty() {
                break;
            }
            let expansions: Vec<(Vec<Item>, bool)> =
                layer.par_iter().map(|item| expand(item, bounds)).collect();
            let mut fresh = Vec::new();
            for (parent, (children, cut)) in layer.iter().zip(expansions) {
                if cut && run.survivors.contains_key(&parent.canon) {
                    run.truncated.insert(parent.canon.clone());
                }
                for child in children {
                    if seen.insert(child.canon.clone()) {
                        fresh.push(child);
                    }
                }
            }
            // classes met before keep their verdict; only passing ones go on
            let (known, unknown): (Vec<Item>, Vec<Item>) =
                fresh.into_iter().partition(|c| run.passed.contains_key(&c.canon));
            let (new_survivors, new_passed) = run.classify(unknown, stage + 1);
            frontier.extend(new_survivors);
            layer = known
                .into_iter()
                .filter(|c| run.passed[&c.canon])
                .chain(new_passed)
                .collect();
        }
    }
    for (canon, node) in &run.survivors {
        if node.depth == bounds.max_stages {
            run.truncated.insert(canon.clone());
        }
    }

    Ok(GrowthReport {
        seed: seeds.to_vec(),
        filter,
        bounds: *bounds,
        explored: run.explored,
        survivors: run.survivors.into_values().collect(),
        eliminated: run.eliminated.into_values().collect(),
        truncated: run.truncated.into_iter().collect(),
    })
}

#[derive(Clone)]
struct Item {
    graph: Graph,
    canon: CanonicalForm,
    trace: OpTrace,
}

struct Run<'a> {
    pattern: Option<&'a Graph>,
    /// Verdict per class: true when it passed the filter.
    passed: HashMap<CanonicalForm, bool>,
    survivors: BTreeMap<CanonicalForm, GrowthNode>,
    eliminated: BTreeMap<CanonicalForm, Eliminated>,
    truncated: BTreeSet<CanonicalForm>,
    explored: usize,
}

impl Run<'_> {
    /// Classifies unseen classes in order. Returns the new survivors and all
    /// items that passed the filter.
    fn classify(&mut self, items: Vec<Item>, depth: usize) -> (Vec<Item>, Vec<Item>) {
        let pattern = self.pattern;
        let verdicts: Vec<(Option<MinorEmbedding>, bool)> = items
            .par_iter()
            .map(|item| match pattern.and_then(|p| find_minor(&item.graph, p)) {
                Some(w) => (Some(w), false),
                None => (None, is_internally_4_connected(&item.graph)),
            })
            .collect();
        let mut survivors = Vec::new();
        let mut passed = Vec::new();
        for (item, (witness, i4c)) in items.into_iter().zip(verdicts) {
            if self.passed.contains_key(&item.canon) {
                continue;
            }
            self.explored += 1;
            self.passed.insert(item.canon.clone(), witness.is_none());
            if let Some(witness) = witness {
                self.eliminated.insert(
                    item.canon.clone(),
                    Eliminated {
                        graph: item.graph,
                        canon: item.canon,
                        witness,
                    },
                );
                continue;
            }
            if i4c {
                self.survivors.insert(
                    item.canon.clone(),
                    GrowthNode {
                        graph: item.graph.clone(),
                        canon: item.canon.clone(),
                        trace: item.trace.clone(),
                        depth,
                    },
                );
                survivors.push(item.clone());
            }
            passed.push(item);
        }
        (survivors, passed)
    }
}

/// Children of `item` within the bounds, one per class, plus whether some
/// child was dropped for exceeding them.
fn expand(item: &Item, bounds: &Bounds) -> (Vec<Item>, bool) {
    let g = &item.graph;
    let mut cut = false;
    let mut moves = Vec::new();
    if g.size() < bounds.max_edges {
        moves.extend(addition_moves(g));
    } else if g.non_edges().next().is_some() {
        cut = true;
    }
    if g.order() < bounds.max_vertices {
        for m in split_moves(g, (0..g.order()).collect(), bounds.degree3_only) {
            if m.1.size() <= bounds.max_edges {
                moves.push(m);
            } else {
                cut = true;
            }
        }
    } else if g.max_degree() >= 4 {
        cut = true;
    }
    let children = moves
        .into_iter()
        .map(|(op, graph, canon)| Item {
            graph,
            canon,
            trace: item.trace.then(op),
        })
        .collect();
    (children, cut)
}

type Move = (Op, Graph, CanonicalForm);

fn graphs_of(moves: Vec<Move>) -> Vec<Graph> {
    moves.into_iter().map(|(_, g, _)| g).collect()
}

/// First move per class, sorted by canonical form.
fn dedup_moves(moves: impl Iterator<Item = (Op, Graph)>) -> Vec<Move> {
    let mut out: BTreeMap<CanonicalForm, (Op, Graph)> = BTreeMap::new();
    for (op, g) in moves {
        out.entry(canonical_form(&g)).or_insert((op, g));
    }
    out.into_iter().map(|(c, (op, g))| (op, g, c)).collect()
}

fn addition_moves(g: &Graph) -> Vec<Move> {
    dedup_moves(g.non_edges().map(|(u, v)| {
        let op = Op::AddEdge { u, v };
        let h = g.add_edge(u, v).expect("non-edge");
        (op, h)
    }))
}

fn split_moves(g: &Graph, at: Vec<usize>, degree3_only: bool) -> Vec<Move> {
    let mut ops = Vec::new();
    for v in at {
        let nb = g.neighbors(v).to_vec();
        let d = nb.len();
        if d < 4 {
            continue;
        }
        if degree3_only {
            // the new vertex y takes exactly two neighbours
            for i in 0..d {
                for j in i + 1..d {
                    let y: VertexSet = [nb[i], nb[j]].into_iter().collect();
                    ops.push((v, g.neighbors(v).difference(y), y));
                }
            }
        } else {
            // each neighbour goes to x, to y, or to both
            let mut assign = vec![0u8; d];
            loop {
                let (mut x, mut y) = (VertexSet::EMPTY, VertexSet::EMPTY);
                for (k, &w) in nb.iter().enumerate() {
                    if assign[k] != 1 {
                        x.insert(w);
                    }
                    if assign[k] != 0 {
                        y.insert(w);
                    }
                }
                if x.len() >= 2 && y.len() >= 2 {
                    ops.push((v, x, y));
                }
                let Some(k) = assign.iter().position(|&a| a < 2) else {
                    break;
                };
                assign[k] += 1;
                assign[..k].fill(0);
            }
        }
    }
    dedup_moves(ops.into_iter().map(|(v, x, y)| {
        let h = g.split_vertex(v, x, y).expect("valid split");
        (Op::Split { v, x, y }, h)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::are_isomorphic;
    use crate::families::{aw, aw_plus, k33, terrahawk, v8_plus_f};
    use crate::minor::{is_planar, verify_embedding};

    #[test]
    fn wagner_has_two_additions() {
        let adds = edge_additions(&wagner());
        assert_eq!(adds.len(), 2);
        assert!(adds.iter().any(|g| are_isomorphic(g, &v8_plus_e())));
        assert!(adds.iter().any(|g| are_isomorphic(g, &v8_plus_f())));
        assert!(edge_additions(&Graph::complete(6).unwrap()).is_empty());
        let aw6 = aw(6).unwrap();
        assert!(edge_additions(&aw6)
            .iter()
            .any(|g| are_isomorphic(g, &aw_plus(6).unwrap())));
    }

    #[test]
    fn split_shapes() {
        assert!(vertex_splits(&k33(), true).is_empty());
        assert!(vertex_splits(&k33(), false).is_empty());
        let awp = aw_plus(6).unwrap();
        assert_eq!(vertex_splits_at(&awp, 6, true).len(), 1);
        for h in vertex_splits(&awp, false) {
            assert_eq!(h.order(), awp.order() + 1);
            assert!(h.size() > awp.size());
        }
        assert!(vertex_splits(&awp, false).len() >= vertex_splits(&awp, true).len());
    }

    #[test]
    fn k6_explores_only_itself() {
        let k6 = Graph::complete(6).unwrap();
        let r = grow(&[Seed::new("k6", k6)], Filter::Always, &Bounds::new(6, 15, 1)).unwrap();
        assert_eq!(r.explored, 1);
        assert_eq!(r.survivors.len(), 1);
        assert_eq!(r.truncated.len(), 1);
    }

    #[test]
    fn bad_bounds_and_seeds() {
        let k6 = Graph::complete(6).unwrap();
        assert!(matches!(
            grow(
                &[Seed::new("k6", k6.clone())],
                Filter::Always,
                &Bounds::new(6, 15, 0)
            ),
            Err(Error::Bounds(_))
        ));
        assert!(matches!(
            grow(
                &[Seed::new("k4", Graph::complete(4).unwrap())],
                Filter::Always,
                &Bounds::new(6, 15, 1)
            ),
            Err(Error::Precondition(_))
        ));
        assert!(successors_i4c(&Graph::complete(4).unwrap(), 1).is_err());
    }

    #[test]
    fn wagner_successors() {
        // both single additions put a cubic vertex on a triangle, and the
        // Wagner graph is cubic, so one operation reaches nothing
        assert!(successors_i4c(&wagner(), 1).unwrap().is_empty());
        assert!(!is_internally_4_connected(&v8_plus_e()));
        assert!(!is_internally_4_connected(&v8_plus_f()));
        let two = successors_i4c(&wagner(), 2).unwrap();
        assert!(!two.is_empty());
        for g in two {
            assert!(is_internally_4_connected(&g));
            let d = g.size() - 12;
            assert!((1..=2).contains(&d));
        }
    }

    #[test]
    fn terrahawk_one_step() {
        let p = v8_plus_e();
        for g in successors_i4c(&terrahawk(), 1).unwrap() {
            assert!(is_planar(&g) || has_pattern(&g, &p));
        }
    }

    fn has_pattern(g: &Graph, p: &Graph) -> bool {
        crate::minor::has_minor(g, p)
    }

    #[test]
    fn report_invariants() {
        let seeds = [Seed::new("aw:6", aw(6).unwrap())];
        let r = grow(&seeds, Filter::V8eFree, &Bounds::new(9, 20, 1)).unwrap();
        let p = v8_plus_e();
        for n in &r.survivors {
            assert_eq!(canonical_form(&n.trace.replay(&seeds).unwrap()), n.canon);
            assert_eq!(n.trace.replay(&seeds).unwrap(), n.graph);
            assert!(n.graph.order() <= 9 && n.graph.size() <= 20);
        }
        for e in &r.eliminated {
            assert!(verify_embedding(&e.graph, &p, &e.witness));
        }
        let canons: BTreeSet<_> = r.survivors.iter().map(|n| &n.canon).collect();
        assert_eq!(canons.len(), r.survivors.len());
        let again = grow_with_jobs(&seeds, Filter::V8eFree, &Bounds::new(9, 20, 1), 1).unwrap();
        assert_eq!(again, r);
    }
}
