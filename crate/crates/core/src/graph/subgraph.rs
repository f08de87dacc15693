//! Non-induced subgraph containment by backtracking.
//!
//! Pattern vertices are placed in a connectivity-then-degree order, so every
//! vertex after the first of its component has an already-placed neighbor and
//! its candidates are the intersection of the placed neighbors' host rows.
//! Host twins (vertices with equal open or equal closed neighborhoods) are
//! interchangeable: the transposition of two unused twins is a host
//! automorphism fixing every placed image, so only the lowest unused member
//! of a twin class is ever tried.

use serde::{Deserialize, Serialize};

use super::{Graph, VSet};

/// `embedding[p]` is the host vertex that pattern vertex `p` maps to.
pub type Embedding = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum Containment {
    Found { embedding: Embedding },
    NotFound,
    BudgetExhausted,
}

impl Containment {
    pub fn is_found(&self) -> bool {
        matches!(self, Containment::Found { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
}

/// Budgeted containment search; `budget` caps the number of tentative
/// vertex assignments.
#[derive(Debug, Clone, Copy)]
pub struct SubgraphSearch {
    pub budget: Option<u64>,
}

impl Default for SubgraphSearch {
    fn default() -> Self {
        SubgraphSearch { budget: None }
    }
}

impl SubgraphSearch {
    pub fn with_budget(budget: u64) -> Self {
        SubgraphSearch { budget: Some(budget) }
    }

    pub fn find(&self, host: &Graph, pattern: &Graph) -> (Containment, SearchStats) {
        self.run(host, pattern, None)
    }

    /// Only embeddings whose image contains `through` are accepted.
    pub fn find_through(&self, host: &Graph, pattern: &Graph, through: usize) -> (Containment, SearchStats) {
        self.run(host, pattern, Some(through))
    }

    fn run(&self, host: &Graph, pattern: &Graph, through: Option<usize>) -> (Containment, SearchStats) {
        let mut stats = SearchStats::default();
        if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
            return (Containment::NotFound, stats);
        }
        if pattern.n() == 0 {
            return match through {
                None => (Containment::Found { embedding: Vec::new() }, stats),
                Some(_) => (Containment::NotFound, stats),
            };
        }
        let hd = host.degrees();
        let pd = pattern.degrees();
        {
            let mut hs = hd.clone();
            let mut ps = pd.clone();
            hs.sort_unstable_by(|a, b| b.cmp(a));
            ps.sort_unstable_by(|a, b| b.cmp(a));
            if ps.iter().zip(&hs).any(|(p, h)| p > h) {
                return (Containment::NotFound, stats);
            }
        }
        let ctx = Context::new(host, &hd);
        let roots: Vec<Option<usize>> = match through {
            None => vec![None],
            Some(t) => {
                // one run per pattern vertex that could sit on `t`
                let mut seen_classes = Vec::new();
                let pcls = twin_classes(pattern);
                (0..pattern.n())
                    .filter(|&p| pd[p] <= hd[t])
                    .filter(|&p| {
                        if seen_classes.contains(&pcls[p]) {
                            false
                        } else {
                            seen_classes.push(pcls[p]);
                            true
                        }
                    })
                    .map(Some)
                    .collect()
            }
        };
        for root in roots {
            let plan = Plan::new(pattern, root);
            let mut state = State {
                ctx: &ctx,
                plan: &plan,
                images: vec![usize::MAX; pattern.n()],
                used: VSet::EMPTY,
                stats: &mut stats,
                budget: self.budget,
            };
            let pinned = root.map(|_| through.expect("root implies through"));
            match state.extend(0, pinned) {
                Step::Found => {
                    let mut emb = vec![0; pattern.n()];
                    for (i, &p) in plan.order.iter().enumerate() {
                        emb[p] = state.images[i];
                    }
                    return (Containment::Found { embedding: emb }, stats);
                }
                Step::Exhausted => return (Containment::BudgetExhausted, stats),
                Step::Dead => {}
            }
        }
        (Containment::NotFound, stats)
    }
}

pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    match SubgraphSearch::default().find(host, pattern).0 {
        Containment::Found { .. } => true,
        Containment::NotFound => false,
        Containment::BudgetExhausted => unreachable!("unbounded search"),
    }
}

pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    match SubgraphSearch::default().find(host, pattern).0 {
        Containment::Found { embedding } => Some(embedding),
        _ => None,
    }
}

/// Checks injectivity and adjacency preservation directly on the two graphs.
pub fn is_valid_embedding(host: &Graph, pattern: &Graph, embedding: &[usize]) -> bool {
    if embedding.len() != pattern.n() || embedding.iter().any(|&h| h >= host.n()) {
        return false;
    }
    let mut seen = vec![false; host.n()];
    for &h in embedding {
        if std::mem::replace(&mut seen[h], true) {
            return false;
        }
    }
    pattern.edges().all(|(u, v)| host.has_edge(embedding[u], embedding[v]))
}

/// Twin class id per vertex: a shared id means equal open neighborhoods
/// (independent twins) or equal closed neighborhoods (adjacent twins).
pub(crate) fn twin_classes(g: &Graph) -> Vec<usize> {
    use std::collections::HashMap;
    let n = g.n();
    let rows = g.rows();
    let mut open: HashMap<VSet, usize> = HashMap::new();
    let mut open_size = vec![0usize; n];
    let mut open_id = vec![0; n];
    for v in 0..n {
        let next = open.len();
        let id = *open.entry(rows[v]).or_insert(next);
        open_id[v] = id;
        open_size[id] += 1;
    }
    let mut closed: HashMap<VSet, usize> = HashMap::new();
    let mut class = vec![0; n];
    for v in 0..n {
        if open_size[open_id[v]] > 1 {
            class[v] = open_id[v];
        } else {
            let mut c = rows[v];
            c.insert(v);
            let next = closed.len();
            class[v] = n + *closed.entry(c).or_insert(next);
        }
    }
    class
}

struct Context {
    rows: Vec<VSet>,
    /// Lower members of the same twin class, per host vertex.
    lower_twins: Vec<VSet>,
    degree_at_least: Vec<VSet>,
    all: VSet,
}

impl Context {
    fn new(host: &Graph, degrees: &[usize]) -> Context {
        let n = host.n();
        let cls = twin_classes(host);
        let mut lower_twins = vec![VSet::EMPTY; n];
        for v in 0..n {
            for u in 0..v {
                if cls[u] == cls[v] {
                    lower_twins[v].insert(u);
                }
            }
        }
        let max_deg = degrees.iter().copied().max().unwrap_or(0);
        let mut degree_at_least = vec![VSet::EMPTY; max_deg + 1];
        for (v, &d) in degrees.iter().enumerate() {
            for set in degree_at_least.iter_mut().take(d + 1) {
                set.insert(v);
            }
        }
        Context { rows: host.rows(), lower_twins, degree_at_least, all: VSet::prefix(n) }
    }
}

struct Plan {
    order: Vec<usize>,
    /// Earlier positions adjacent to each position.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Plan {
    fn new(pattern: &Graph, root: Option<usize>) -> Plan {
        let n = pattern.n();
        let deg = pattern.degrees();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut links = vec![0usize; n];
        while order.len() < n {
            let next = if order.is_empty() && root.is_some() {
                root.unwrap()
            } else {
                (0..n)
                    .filter(|&v| !placed[v])
                    .max_by_key(|&v| (links[v], deg[v], std::cmp::Reverse(v)))
                    .expect("unplaced vertex")
            };
            placed[next] = true;
            order.push(next);
            for u in pattern.neighbors(next) {
                links[u] += 1;
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| pattern.neighbors(v).map(|u| pos[u]).filter(|&j| j < i).collect())
            .collect();
        let degree = order.iter().map(|&v| deg[v]).collect();
        Plan { order, back, degree }
    }
}

enum Step {
    Found,
    Dead,
    Exhausted,
}

struct State<'a> {
    ctx: &'a Context,
    plan: &'a Plan,
    images: Vec<usize>,
    used: VSet,
    stats: &'a mut SearchStats,
    budget: Option<u64>,
}

impl State<'_> {
    fn extend(&mut self, i: usize, pinned: Option<usize>) -> Step {
        if i == self.plan.order.len() {
            return Step::Found;
        }
        let mut cand = match self.plan.back[i].split_first() {
            None => self.ctx.all,
            Some((&j, rest)) => {
                let mut c = self.ctx.rows[self.images[j]];
                for &k in rest {
                    c = c.and(&self.ctx.rows[self.images[k]]);
                }
                c
            }
        };
        cand = cand.and_not(&self.used);
        match self.ctx.degree_at_least.get(self.plan.degree[i]) {
            Some(ok) => cand = cand.and(ok),
            None => return Step::Dead,
        }
        if let Some(t) = pinned {
            if !cand.contains(t) {
                return Step::Dead;
            }
            cand = VSet::EMPTY;
            cand.insert(t);
        }
        for h in cand.iter() {
            if pinned.is_none() && !self.ctx.lower_twins[h].and_not(&self.used).is_empty() {
                continue;
            }
            self.stats.nodes += 1;
            if let Some(b) = self.budget {
                if self.stats.nodes > b {
                    return Step::Exhausted;
                }
            }
            self.images[i] = h;
            self.used.insert(h);
            match self.extend(i + 1, None) {
                Step::Dead => {}
                other => return other,
            }
            self.used.remove(h);
        }
        Step::Dead
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn basic_containments() {
        assert!(contains_subgraph(&complete(4).unwrap(), &complete(3).unwrap()));
        assert!(!contains_subgraph(&turan(6, 2).unwrap(), &cycle(5).unwrap()));
        let g = petersen();
        assert!(contains_subgraph(&g, &g));
        assert!(contains_subgraph(&g, &cycle(5).unwrap()));
        assert!(!contains_subgraph(&g, &cycle(4).unwrap()));
        assert!(contains_subgraph(&g, &Graph::empty(0).unwrap()));
        assert!(contains_subgraph(&g, &Graph::empty(10).unwrap()));
        assert!(!contains_subgraph(&g, &Graph::empty(11).unwrap()));
    }

    #[test]
    fn witnesses_are_valid() {
        let host = complete_bipartite(3, 4).unwrap();
        let pat = cycle(6).unwrap();
        let emb = find_embedding(&host, &pat).unwrap();
        assert!(is_valid_embedding(&host, &pat, &emb));
        assert!(!is_valid_embedding(&host, &pat, &[0, 0, 1, 2, 3, 4]));
    }

    #[test]
    fn twins_do_not_hide_embeddings() {
        // all host vertices are twins here; the search must still place a
        // perfect matching plus isolated vertices
        let host = complete(8).unwrap();
        let pat = disjoint_union(&matching(3).unwrap(), &Graph::empty(2).unwrap()).unwrap();
        assert!(contains_subgraph(&host, &pat));
        let host = complete_bipartite(4, 4).unwrap();
        assert!(contains_subgraph(&host, &cycle(8).unwrap()));
        assert!(!contains_subgraph(&host, &cycle(7).unwrap()));
    }

    #[test]
    fn through_vertex() {
        // triangle 0-1-2 plus pendant 3 attached to 2
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let k3 = complete(3).unwrap();
        let s = SubgraphSearch::default();
        assert!(s.find_through(&g, &k3, 0).0.is_found());
        assert!(!s.find_through(&g, &k3, 3).0.is_found());
        match s.find_through(&g, &path(3).unwrap(), 3).0 {
            Containment::Found { embedding } => assert!(embedding.contains(&3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_is_reported() {
        let host = join(&complete(1).unwrap(), &turan(9, 2).unwrap()).unwrap();
        let pat = disjoint_union(&cycle(5).unwrap(), &cycle(5).unwrap()).unwrap();
        let (c, stats) = SubgraphSearch::with_budget(3).find(&host, &pat);
        assert_eq!(c, Containment::BudgetExhausted);
        assert_eq!(stats.nodes, 4);
        assert_eq!(SubgraphSearch::default().find(&host, &pat).0, Containment::NotFound);
    }
}
