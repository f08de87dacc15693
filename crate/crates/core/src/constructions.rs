//! Candidate extremal graphs and freeness certificates for them.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ballooning::uniform_balloon;
use crate::cracking::{apex_skeleton, cracking_family};
use crate::error::{Error, Result};
use crate::formulas::{predict_ex_balloon, predict_ex_decomposition, turan_edges, TuranPrediction};
use crate::graph::family::GraphFamily;
use crate::graph::named::{complete, disjoint_union, empty, join, matching, turan, turan_parts};
use crate::graph::params::is_bipartite;
use crate::graph::subgraph::{is_valid_embedding, Containment, SearchStats, SubgraphSearch};
use crate::graph::Graph;

/// Default node budget of a single containment test.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// `A ∇ T_{n-|A|, parts}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexJoinDescriptor {
    pub apex: Graph,
    pub n: usize,
    pub parts: usize,
    pub label: String,
}

impl ApexJoinDescriptor {
    pub fn new(apex: Graph, n: usize, parts: usize, label: impl Into<String>) -> Result<Self> {
        if n < apex.n() {
            return Err(Error::InvalidParameter(format!("n = {n} is smaller than the apex order {}", apex.n())));
        }
        if parts == 0 {
            return Err(Error::InvalidParameter("at least one part is needed".into()));
        }
        Ok(ApexJoinDescriptor { apex, n, parts, label: label.into() })
    }

    /// `e(A) + |A|(n - |A|) + e(T_{n-|A|, parts})`.
    pub fn edge_count(&self) -> Result<u64> {
        let a = self.apex.n() as u64;
        let rest = self.n as u64 - a;
        Ok(self.apex.edge_count() as u64 + a * rest + turan_edges(rest, self.parts as u64)?)
    }
}

pub fn build_apex_join(d: &ApexJoinDescriptor) -> Result<Graph> {
    join(&d.apex, &turan(d.n - d.apex.n(), d.parts)?)
}

/// `H(n, k, i) = (M_{k-1} ∪ K_1) ∇ T_{n-2k+1, i}`.
pub fn h_graph(n: usize, k: usize, i: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k + 1 {
        return Err(Error::Precondition(format!("H(n,k,i) needs k >= 1 and n >= 2k + 1, got n = {n}, k = {k}")));
    }
    let apex = disjoint_union(&matching(k - 1)?, &complete(1)?)?;
    build_apex_join(&ApexJoinDescriptor::new(apex, n, i, format!("H({n},{k},{i})"))?)
}

/// `T_{n,2}` with `inner` placed inside its larger part.
pub fn turan_with_inner(n: usize, inner: &Graph) -> Result<Graph> {
    let parts = turan_parts(n, 2)?;
    if inner.n() > parts[0] {
        return Err(Error::InvalidParameter(format!("{} vertices do not fit in a part of size {}", inner.n(), parts[0])));
    }
    let mut g = turan(n, 2)?;
    for (u, v) in inner.edges() {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Verdict {
    Free,
    Contains { member: Graph, embedding: Vec<usize> },
    Indeterminate { budget: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FreenessCertificate {
    pub host: Graph,
    pub family_size: usize,
    pub verdict: Verdict,
    /// Settled by odd-cycle parity rather than search.
    pub by_parity: bool,
    pub stats: SearchStats,
}

impl FreenessCertificate {
    pub fn is_free(&self) -> bool {
        self.verdict == Verdict::Free
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CertifyOptions {
    pub budget: Option<u64>,
    /// Declare a bipartite host free of a family with no bipartite member.
    pub parity_shortcut: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { budget: Some(DEFAULT_BUDGET), parity_shortcut: false }
    }
}

/// Tests every member (concurrently); any containment wins, then any
/// exhausted budget, else the host is free. Among containments the first
/// member in family order is reported.
pub fn certify_free(host: &Graph, fam: &GraphFamily, opts: CertifyOptions) -> FreenessCertificate {
    let mut cert = FreenessCertificate {
        host: host.clone(),
        family_size: fam.len(),
        verdict: Verdict::Free,
        by_parity: false,
        stats: SearchStats::default(),
    };
    if opts.parity_shortcut && is_bipartite(host) && fam.iter().all(|f| !is_bipartite(f)) {
        cert.by_parity = true;
        return cert;
    }
    let search = SubgraphSearch { budget: opts.budget };
    let members: Vec<&Graph> = fam.iter().collect();
    let outcomes: Vec<(Containment, SearchStats)> = members.par_iter().map(|f| search.find(host, f)).collect();
    let mut exhausted = false;
    for (member, (outcome, stats)) in members.iter().zip(outcomes) {
        cert.stats.nodes += stats.nodes;
        match outcome {
            Containment::Found { embedding } if !matches!(cert.verdict, Verdict::Contains { .. }) => {
                assert!(is_valid_embedding(host, member, &embedding), "search returned an invalid witness");
                cert.verdict = Verdict::Contains { member: (*member).clone(), embedding };
            }
            Containment::BudgetExhausted => exhausted = true,
            _ => {}
        }
    }
    if exhausted && cert.verdict == Verdict::Free {
        cert.verdict = Verdict::Indeterminate { budget: opts.budget.unwrap_or(0) };
    }
    cert
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The host is tested against `(K_1 ∇ F•)°` with every cycle of length 5.
    Balloon,
    /// The host is tested against `C(K_1 ∇ F•)`.
    Decomposition,
}

/// Freeness of `A ∇ E_a` against `C(F)`, which by the definition of the
/// decomposition family implies freeness of `A ∇ T_{m,2}` against `F°` once
/// both parts have at most `a` vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RouteCheck {
    pub side: Graph,
    pub side_free: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LowerBoundReport {
    pub mode: Mode,
    pub prediction: TuranPrediction,
    pub host_edges: u64,
    pub edges_match: bool,
    pub certificate: FreenessCertificate,
    pub route: Option<RouteCheck>,
    /// `ex(n, family) >= e(host)`, present when the host is certified free.
    pub lower_bound: Option<String>,
}

impl LowerBoundReport {
    pub fn passed(&self) -> bool {
        self.edges_match && self.certificate.is_free() && self.route.as_ref().is_none_or(|r| r.consistent)
    }
}

/// Builds the predicted extremal graph for `F = K_1 ∇ F•`, compares its
/// edge count with the formula, and certifies it free.
pub fn verify_lower_bound(f_bullet: &Graph, n: usize, mode: Mode, opts: CertifyOptions) -> Result<LowerBoundReport> {
    let skeleton = apex_skeleton(f_bullet)?;
    let prediction = match mode {
        Mode::Balloon => predict_ex_balloon(f_bullet, n, 5)?,
        Mode::Decomposition => predict_ex_decomposition(f_bullet, n)?,
    };
    let d = prediction.descriptor().expect("numeric prediction").clone();
    let host = build_apex_join(&d)?;
    let host_edges = host.edge_count() as u64;
    let edges_match = Some(host_edges) == prediction.edge_count && host_edges == d.edge_count()?;
    let (family, family_name) = match mode {
        Mode::Balloon => {
            let fo = uniform_balloon(&skeleton, 5)?;
            ([fo].into_iter().collect::<GraphFamily>(), "F°")
        }
        Mode::Decomposition => (cracking_family(&skeleton)?, "C(F)"),
    };
    let certificate = certify_free(&host, &family, opts);
    let route = match mode {
        Mode::Balloon => {
            let larger = turan_parts(n - d.apex.n(), 2)?[0];
            let side = join(&d.apex, &empty(larger)?)?;
            let c = certify_free(&side, &cracking_family(&skeleton)?, opts);
            let side_free = c.is_free();
            Some(RouteCheck { side, side_free, consistent: !side_free || certificate.is_free() })
        }
        Mode::Decomposition => None,
    };
    let lower_bound = certificate.is_free().then(|| format!("ex({n}, {family_name}) >= {host_edges}"));
    Ok(LowerBoundReport { mode, prediction, host_edges, edges_match, certificate, route, lower_bound })
}
