//! Brute-force extremal oracles.
//!
//! Graphs are generated one vertex at a time, isomorphism classes being
//! merged by canonical form after every level. Every constraint supported here
//! (forbidden subgraphs, `ν <= a`, `Δ <= b`, `e <= m`) is inherited by induced
//! subgraphs, so a class on `k + 1` vertices satisfying the constraint always
//! arises from a class on `k` vertices that satisfies it too, and rejected
//! graphs never need to be extended.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::canon::{canonize, CanonicalForm};
use crate::graph::family::GraphFamily;
use crate::graph::matching::matching_number;
use crate::graph::subgraph::{Containment, SubgraphSearch};
use crate::graph::{Graph, VSet};

/// Largest `n` searched without an explicit override.
pub const EXHAUSTIVE_LIMIT: usize = 10;

#[derive(Debug, Clone, Default)]
pub struct Constraints {
    pub forbidden: GraphFamily,
    pub max_matching: Option<usize>,
    pub max_degree: Option<usize>,
    pub max_edges: Option<usize>,
}

impl Constraints {
    pub fn forbid(family: GraphFamily) -> Self {
        Constraints { forbidden: family, ..Default::default() }
    }

    pub fn matching_and_degree(nu: usize, delta: usize) -> Self {
        Constraints { max_matching: Some(nu), max_degree: Some(delta), ..Default::default() }
    }

    /// Is `child` admissible, given that `child - v` is? `v` is the last vertex.
    fn admits_extension(&self, child: &Graph, v: usize) -> bool {
        if let Some(m) = self.max_edges {
            if child.edge_count() > m {
                return false;
            }
        }
        if let Some(a) = self.max_matching {
            if matching_number(child) > a {
                return false;
            }
        }
        let search = SubgraphSearch::default();
        self.forbidden.iter().all(|f| !matches!(search.find_through(child, f, v).0, Containment::Found { .. }))
    }
}

#[derive(Debug, Clone)]
pub struct SearchJob {
    pub n: usize,
    pub constraints: Constraints,
    pub collect_witnesses: bool,
    /// Cap on candidate graphs examined; exceeding it ends the search early
    /// with `exhaustive = false`.
    pub budget: Option<u64>,
    /// Worker count; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
    /// Permit `n` above [`EXHAUSTIVE_LIMIT`].
    pub allow_large: bool,
}

impl SearchJob {
    pub fn new(n: usize, constraints: Constraints) -> Self {
        SearchJob { n, constraints, collect_witnesses: true, budget: None, threads: None, allow_large: false }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n > EXHAUSTIVE_LIMIT && !self.allow_large {
            return Err(Error::Precondition(format!(
                "exhaustive search is limited to n <= {EXHAUSTIVE_LIMIT} (got {}) unless explicitly overridden",
                self.n
            )));
        }
        if self.budget == Some(0) {
            return Err(Error::Precondition("budget must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub optimum: usize,
    #[serde(serialize_with = "serialize_family")]
    pub witnesses: GraphFamily,
    pub exhaustive: bool,
    pub nodes_explored: u64,
    /// Number of admissible isomorphism classes on `k` vertices, `k < n`.
    pub classes_per_level: Vec<usize>,
}

fn serialize_family<S: serde::Serializer>(fam: &GraphFamily, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(fam.iter().map(|g| g.to_string()))
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

/// Neighborhood choices for a new vertex attached to `g`.
fn neighborhoods(g: &Graph, c: &Constraints) -> (Vec<usize>, Option<usize>) {
    let allowed: Vec<usize> = (0..g.n())
        .filter(|&v| c.max_degree.is_none_or(|b| g.degree(v) < b))
        .collect();
    (allowed, c.max_degree)
}

fn for_each_child(g: &Graph, c: &Constraints, min_new_edges: usize, mut visit: impl FnMut(Graph, usize)) -> u64 {
    let (allowed, cap) = neighborhoods(g, c);
    let k = allowed.len();
    let base = g.edge_count();
    let mut examined = 0;
    for mask in 0u64..(1u64 << k) {
        let size = mask.count_ones() as usize;
        if cap.is_some_and(|b| size > b) || size < min_new_edges {
            continue;
        }
        if c.max_edges.is_some_and(|m| base + size > m) {
            continue;
        }
        examined += 1;
        let nbrs: VSet = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| allowed[i]).collect();
        let child = g.with_vertex(&nbrs).expect("within vertex limit");
        if c.admits_extension(&child, g.n()) {
            visit(child, base + size);
        }
    }
    examined
}

/// All admissible isomorphism classes on each vertex count `0..levels`.
fn grow(levels: usize, c: &Constraints, budget: Option<u64>, nodes: &mut u64) -> (Vec<Vec<Graph>>, bool) {
    let mut out = vec![vec![Graph::empty(0).expect("empty graph")]];
    for _ in 1..levels {
        let parents = out.last().expect("non-empty");
        if let Some(b) = budget {
            let planned: u64 = parents.iter().map(|g| 1u64 << neighborhoods(g, c).0.len()).sum();
            if *nodes + planned > b {
                return (out, false);
            }
        }
        let children: Vec<(u64, Vec<(CanonicalForm, Graph)>)> = parents
            .par_iter()
            .map(|g| {
                let mut kids = Vec::new();
                let examined = for_each_child(g, c, 0, |child, _| kids.push(canonize(&child)));
                (examined, kids)
            })
            .collect();
        let mut merged: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for (examined, kids) in children {
            *nodes += examined;
            for (form, g) in kids {
                merged.entry(form).or_insert(g);
            }
        }
        out.push(merged.into_values().collect());
    }
    (out, true)
}

/// Every admissible isomorphism class on exactly `n` vertices, in canonical
/// labeling and canonical-form order.
pub fn admissible_classes(n: usize, c: &Constraints) -> Vec<Graph> {
    let mut nodes = 0;
    let (mut levels, _) = grow(n + 1, c, None, &mut nodes);
    levels.pop().expect("level n")
}

/// Maximum edge count over `n`-vertex graphs satisfying the job's
/// constraints, with all optimal classes if requested.
pub fn search(job: &SearchJob) -> Result<SearchResult> {
    job.validate()?;
    with_pool(job.threads, || run(job))
}

fn run(job: &SearchJob) -> Result<SearchResult> {
    let c = &job.constraints;
    let mut nodes = 0u64;
    if job.n == 0 {
        let mut witnesses = GraphFamily::new();
        witnesses.insert(Graph::empty(0)?);
        return Ok(SearchResult { n: 0, optimum: 0, witnesses, exhaustive: true, nodes_explored: 0, classes_per_level: vec![] });
    }
    let (levels, complete) = grow(job.n, c, job.budget, &mut nodes);
    let classes_per_level = levels.iter().map(Vec::len).collect();
    let parents = levels.last().expect("non-empty");
    let mut exhaustive = complete;
    if let Some(b) = job.budget {
        let planned: u64 = parents.iter().map(|g| 1u64 << neighborhoods(g, c).0.len()).sum();
        if nodes + planned > b {
            exhaustive = false;
        }
    }
    if !exhaustive {
        // best we can certify: the densest admissible graph found, padded with isolated vertices
        let best = levels
            .iter()
            .flat_map(|l| l.iter())
            .max_by_key(|g| g.edge_count())
            .expect("at least the empty graph");
        let mut padded = Graph::empty(job.n)?;
        for (u, v) in best.edges() {
            padded.add_edge(u, v)?;
        }
        let mut witnesses = GraphFamily::new();
        if job.collect_witnesses {
            witnesses.insert(padded.clone());
        }
        return Ok(SearchResult {
            n: job.n,
            optimum: padded.edge_count(),
            witnesses,
            exhaustive,
            nodes_explored: nodes,
            classes_per_level,
        });
    }
    let per_parent: Vec<(u64, usize, Vec<Graph>)> = parents
        .par_iter()
        .map(|g| {
            let mut best = 0usize;
            let mut tops: Vec<Graph> = Vec::new();
            let examined = for_each_child(g, c, 0, |child, e| {
                if e > best {
                    best = e;
                    tops.clear();
                }
                if e == best && job.collect_witnesses {
                    tops.push(child);
                }
            });
            (examined, best, tops)
        })
        .collect();
    let optimum = per_parent.iter().map(|p| p.1).max().unwrap_or(0);
    let mut witnesses = GraphFamily::new();
    for (examined, best, tops) in per_parent {
        nodes += examined;
        if best == optimum {
            for g in tops {
                witnesses.insert(g);
            }
        }
    }
    Ok(SearchResult { n: job.n, optimum, witnesses, exhaustive: true, nodes_explored: nodes, classes_per_level })
}

/// `ex(n, family)` by exhaustive search.
pub fn exact_ex(job: &SearchJob) -> Result<SearchResult> {
    if job.constraints.forbidden.is_empty() {
        return Err(Error::Precondition("exact_ex needs a non-empty forbidden family".into()));
    }
    if job.constraints.forbidden.iter().any(|f| f.edge_count() == 0) {
        return Err(Error::Precondition("forbidden members must have at least one edge".into()));
    }
    search(job)
}

/// `max { e(G) : |G| = n, ν(G) <= nu, Δ(G) <= delta }` by exhaustive search.
pub fn f_oracle(n: usize, nu: usize, delta: usize) -> Result<SearchResult> {
    search(&SearchJob::new(n, Constraints::matching_and_degree(nu, delta)))
}

/// The optimum attainers of `job`, up to isomorphism.
pub fn extremal_witnesses(job: &SearchJob) -> Result<GraphFamily> {
    let mut job = job.clone();
    job.collect_witnesses = true;
    Ok(exact_ex(&job)?.witnesses)
}
