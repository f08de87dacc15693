//! Cracking, the families `C(F, U)` and `C(F)`, and a brute-force
//! decomposition family to compare them against.
//!
//! Cracking an independent set `U` replaces each `u ∈ U` of degree `d` by
//! fresh vertices `u_1..u_d`, one per incident edge `uv_i`. A Type I edge
//! becomes `u_i v_i`; a Type II edge becomes `u_i w_i` with `w_i` fresh.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{admissible_classes, Constraints};
use crate::graph::canon::{canonical_form_colored, canonize};
use crate::graph::family::GraphFamily;
use crate::graph::named::{complete, disjoint_union, empty, join, turan};
use crate::graph::params::{bipartition, chromatic_number, independent_covering_number, is_bipartite};
use crate::graph::subgraph::{Containment, SubgraphSearch};
use crate::graph::{Graph, VSet};

/// Assignments beyond this many cracked edges are refused.
pub const MAX_CRACKED_EDGES: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeType {
    TypeI,
    TypeII,
}

/// An independent set with a type for every edge it touches. Edges are keyed
/// as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrackAssignment {
    set: Vec<usize>,
    types: BTreeMap<(usize, usize), EdgeType>,
}

impl CrackAssignment {
    pub fn new(f: &Graph, set: &[usize], types: impl IntoIterator<Item = ((usize, usize), EdgeType)>) -> Result<Self> {
        let set = check_independent(f, set)?;
        let mut map = BTreeMap::new();
        for ((u, v), t) in types {
            map.insert((u.min(v), u.max(v)), t);
        }
        let touched = touched_edges(f, &set);
        if map.len() != touched.len() || touched.iter().any(|e| !map.contains_key(e)) {
            return Err(Error::InvalidParameter(
                "edge types must cover exactly the edges incident to the cracked set".into(),
            ));
        }
        Ok(CrackAssignment { set, types: map })
    }

    /// Every touched edge gets type `t`.
    pub fn uniform(f: &Graph, set: &[usize], t: EdgeType) -> Result<Self> {
        let set = check_independent(f, set)?;
        let types = touched_edges(f, &set).into_iter().map(|e| (e, t)).collect();
        Ok(CrackAssignment { set, types })
    }

    pub fn set(&self) -> &[usize] {
        &self.set
    }

    pub fn edge_type(&self, u: usize, v: usize) -> Option<EdgeType> {
        self.types.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn type_ii_count(&self) -> usize {
        self.types.values().filter(|&&t| t == EdgeType::TypeII).count()
    }
}

fn check_independent(f: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    let mut s: Vec<usize> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= f.n()) {
        return Err(Error::VertexOutOfRange { v, n: f.n() });
    }
    for (i, &u) in s.iter().enumerate() {
        if let Some(&v) = s[i + 1..].iter().find(|&&v| f.has_edge(u, v)) {
            return Err(Error::InvalidParameter(format!("cracked set is not independent: {u} ~ {v}")));
        }
    }
    Ok(s)
}

/// Edges with an endpoint in the (independent, sorted) set, as `(min, max)`.
fn touched_edges(f: &Graph, set: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = set.iter().flat_map(|&u| f.neighbors(u).map(move |v| (u.min(v), u.max(v)))).collect();
    out.sort_unstable();
    out
}

/// Builds the cracked graph. Uncracked vertices come first in increasing
/// order; then, per cracked vertex and per neighbor in increasing order,
/// the copy `u_i` followed by its pendant `w_i` when the edge is Type II.
pub fn crack(f: &Graph, a: &CrackAssignment) -> Result<Graph> {
    let cracked: VSet = a.set.iter().copied().collect();
    let mut index = vec![usize::MAX; f.n()];
    let mut next = 0;
    for v in (0..f.n()).filter(|v| !cracked.contains(*v)) {
        index[v] = next;
        next += 1;
    }
    let degrees: usize = a.set.iter().map(|&u| f.degree(u)).sum();
    let mut g = Graph::empty(next + degrees + a.type_ii_count())?;
    for (u, v) in f.edges() {
        if !cracked.contains(u) && !cracked.contains(v) {
            g.add_edge(index[u], index[v])?;
        }
    }
    for &u in &a.set {
        for v in f.neighbors(u) {
            let copy = next;
            next += 1;
            match a.edge_type(u, v).expect("validated assignment") {
                EdgeType::TypeI => {
                    g.add_edge(copy, index[v])?;
                }
                EdgeType::TypeII => {
                    g.add_edge(copy, next)?;
                    next += 1;
                }
            }
        }
    }
    Ok(g)
}

fn drop_isolated(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    g.induced(&keep)
}

/// `C(F, U)`: all `2^m` type assignments on the `m` edges touching `U`.
///
/// Members are taken up to isolated vertices, which a cracking creates when
/// every neighbor of an uncracked vertex is cracked along Type II edges.
pub fn crack_family(f: &Graph, set: &[usize]) -> Result<GraphFamily> {
    let set = check_independent(f, set)?;
    let edges = touched_edges(f, &set);
    let m = edges.len();
    if m > MAX_CRACKED_EDGES {
        return Err(Error::Precondition(format!(
            "{m} edges touch the cracked set; at most {MAX_CRACKED_EDGES} are enumerated"
        )));
    }
    let family = (0u64..1 << m)
        .into_par_iter()
        .fold(GraphFamily::new, |mut fam, mask| {
            let types = edges.iter().enumerate().map(|(i, &e)| {
                (e, if mask >> i & 1 == 1 { EdgeType::TypeII } else { EdgeType::TypeI })
            });
            let a = CrackAssignment { set: set.clone(), types: types.collect() };
            let (form, canon) = canonize(&drop_isolated(&crack(f, &a).expect("valid assignment")));
            fam.insert_canonical(form, canon);
            fam
        })
        .reduce(GraphFamily::new, |mut x, y| {
            x.merge(y);
            x
        });
    Ok(family)
}

/// All independent sets of `g`, including the empty set, in lexicographic order.
pub fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn go(g: &Graph, from: usize, allowed: VSet, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for v in allowed.iter().filter(|&v| v >= from) {
            cur.push(v);
            let mut next = allowed.and_not(&g.neighbor_set(v));
            next.remove(v);
            go(g, v + 1, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, 0, VSet::prefix(g.n()), &mut Vec::new(), &mut out);
    out
}

/// One independent set per orbit of `Aut(g)` acting on independent sets.
pub fn independent_set_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    independent_sets(g)
        .into_iter()
        .filter(|s| {
            let mut colors = vec![0u32; g.n()];
            for &v in s {
                colors[v] = 1;
            }
            seen.insert(canonical_form_colored(g, &colors))
        })
        .collect()
}

/// `C(F)`, the union of `C(F, U)` over all independent `U`.
pub fn cracking_family(f: &Graph) -> Result<GraphFamily> {
    cracking_family_over(f, &independent_set_orbits(f))
}

/// `C(F)` without the symmetry reduction; every independent set is cracked.
pub fn cracking_family_unreduced(f: &Graph) -> Result<GraphFamily> {
    cracking_family_over(f, &independent_sets(f))
}

fn cracking_family_over(f: &Graph, sets: &[Vec<usize>]) -> Result<GraphFamily> {
    let parts: Vec<GraphFamily> = sets.par_iter().map(|s| crack_family(f, s)).collect::<Result<_>>()?;
    let mut fam = GraphFamily::new();
    for p in parts {
        fam.merge(p);
    }
    Ok(fam)
}

/// `q(fam)`: the least independent covering number of a bipartite member.
pub fn q_of_family(fam: &GraphFamily) -> Result<usize> {
    fam.iter()
        .filter(|g| is_bipartite(g))
        .map(|g| independent_covering_number(g).expect("bipartite"))
        .min()
        .ok_or_else(|| Error::Domain("family has no bipartite member".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Tree,
    EvenCycle,
}

/// Classifies the components of an `F•`: each must be a tree with at least
/// one edge or an even cycle.
pub fn f_bullet_components(f_bullet: &Graph) -> Result<Vec<ComponentKind>> {
    if f_bullet.n() == 0 {
        return Err(Error::InvalidParameter("F• must have at least one component".into()));
    }
    f_bullet
        .components()
        .into_iter()
        .map(|c| {
            let sub = f_bullet.induced(&c);
            let (n, e) = (sub.n(), sub.edge_count());
            if n >= 2 && e == n - 1 {
                Ok(ComponentKind::Tree)
            } else if n >= 4 && n % 2 == 0 && e == n && sub.degrees().iter().all(|&d| d == 2) {
                Ok(ComponentKind::EvenCycle)
            } else {
                Err(Error::InvalidParameter(format!(
                    "component on vertices {c:?} is neither a non-trivial tree nor an even cycle"
                )))
            }
        })
        .collect()
}

/// `K_1 ∇ F•` with the apex `w` at index 0.
pub fn apex_skeleton(f_bullet: &Graph) -> Result<Graph> {
    join(&complete(1)?, f_bullet)
}

/// Color classes `(A, B)` of `F•` with `|A|` as small as possible, as
/// vertices of `F•`.
pub fn small_color_class(f_bullet: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    let color = bipartition(f_bullet).ok_or(Error::NotBipartite)?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for comp in f_bullet.components() {
        let (zero, one): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| color[v] == 0);
        if one.len() < zero.len() {
            a.extend(one);
            b.extend(zero);
        } else {
            a.extend(zero);
            b.extend(one);
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    Ok((a, b))
}

/// The graphs `J_1..J_4` of `C(K_1 ∇ F•)` with `w` the apex and `(A, B)`
/// from [`small_color_class`]:
///
/// 1. crack `B`, every edge Type I;
/// 2. crack `B`, every edge Type II;
/// 3. crack `B`, edges to `w` Type I and edges to `A` Type II;
/// 4. crack `{w}`, edges to `A` Type I and edges to `B` Type II.
pub fn fixture_j(f_bullet: &Graph, which: u8) -> Result<Graph> {
    f_bullet_components(f_bullet)?;
    let f = apex_skeleton(f_bullet)?;
    let (a, b) = small_color_class(f_bullet)?;
    let a: Vec<usize> = a.iter().map(|v| v + 1).collect();
    let b: Vec<usize> = b.iter().map(|v| v + 1).collect();
    let assignment = match which {
        1 => CrackAssignment::uniform(&f, &b, EdgeType::TypeI)?,
        2 => CrackAssignment::uniform(&f, &b, EdgeType::TypeII)?,
        3 => {
            let types = b
                .iter()
                .flat_map(|&u| f.neighbors(u).map(move |v| ((u, v), if v == 0 { EdgeType::TypeI } else { EdgeType::TypeII })));
            CrackAssignment::new(&f, &b, types.collect::<Vec<_>>())?
        }
        4 => {
            let types = f
                .neighbors(0)
                .map(|v| ((0, v), if a.contains(&v) { EdgeType::TypeI } else { EdgeType::TypeII }));
            CrackAssignment::new(&f, &[0], types.collect::<Vec<_>>())?
        }
        _ => return Err(Error::InvalidParameter(format!("fixture index must be 1..=4, got {which}"))),
    };
    crack(&f, &assignment)
}

#[derive(Debug, Clone)]
pub struct DecompositionParams {
    pub r: usize,
    pub t_max: usize,
    pub size_cap: usize,
    /// Node budget for each embedding test.
    pub budget: Option<u64>,
    /// Only candidates whose edge count lies in this range are examined.
    pub edge_range: Option<(usize, usize)>,
}

impl DecompositionParams {
    /// `t_max` defaults to `|Fo|`.
    pub fn new(fo: &Graph, r: usize, size_cap: usize) -> Self {
        DecompositionParams { r, t_max: fo.n(), size_cap, budget: None, edge_range: None }
    }
}

#[derive(Debug, Clone)]
pub struct DecompositionMember {
    pub graph: Graph,
    /// Least `t` for which the embedding exists.
    pub t: usize,
    /// Has exactly `size_cap` vertices, so larger relatives went unexamined.
    pub at_size_cap: bool,
}

#[derive(Debug, Clone)]
pub enum Decomposition {
    Complete { family: GraphFamily, members: Vec<DecompositionMember>, candidates: usize },
    /// Some embedding test ran out of budget; `candidate` is the first
    /// graph (in enumeration order) whose test did.
    Indeterminate { candidate: Graph, budget: u64 },
}

/// `(M ∪ E_t) ∇ T_{(r-1)t, r-1}`.
pub fn decomposition_host(m: &Graph, r: usize, t: usize) -> Result<Graph> {
    join(&disjoint_union(m, &empty(t)?)?, &turan((r - 1) * t, r - 1)?)
}

type Probe = std::result::Result<bool, ()>;

fn embeds(fo: &Graph, m: &Graph, p: &DecompositionParams, t: usize) -> Probe {
    let host = decomposition_host(m, p.r, t).map_err(|_| ())?;
    let search = SubgraphSearch { budget: p.budget };
    match search.find(&host, fo).0 {
        Containment::Found { .. } => Ok(true),
        Containment::NotFound => Ok(false),
        Containment::BudgetExhausted => Err(()),
    }
}

fn examine(fo: &Graph, m: &Graph, p: &DecompositionParams) -> std::result::Result<Option<DecompositionMember>, ()> {
    if !embeds(fo, m, p, p.t_max)? {
        return Ok(None);
    }
    for (u, v) in m.edges() {
        let mut smaller = m.clone();
        smaller.remove_edge(u, v);
        if embeds(fo, &smaller, p, p.t_max)? {
            return Ok(None);
        }
    }
    let mut t = 1;
    while t < p.t_max && !embeds(fo, m, p, t)? {
        t += 1;
    }
    Ok(Some(DecompositionMember { graph: m.clone(), t, at_size_cap: m.n() == p.size_cap }))
}

/// Minimal graphs `M` on at most `size_cap` vertices such that `Fo` embeds in
/// `(M ∪ E_t) ∇ T_{(r-1)t, r-1}` for some `t <= t_max`.
///
/// The embedding property is monotone in `M` and in `t`, so it is tested at
/// `t_max` and minimality is checked against single-edge deletions.
/// Candidates have no isolated vertices: an isolated vertex of `M` can be
/// traded for one more vertex of `E_t`.
pub fn decomposition_family_bruteforce(fo: &Graph, p: &DecompositionParams) -> Result<Decomposition> {
    if p.r < 2 {
        return Err(Error::InvalidParameter(format!("r must be at least 2, got {}", p.r)));
    }
    if p.t_max == 0 || p.size_cap == 0 {
        return Err(Error::InvalidParameter("t_max and size_cap must be positive".into()));
    }
    let chi = chromatic_number(fo)?;
    if chi != p.r + 1 {
        return Err(Error::Domain(format!(
            "decomposition families are computed for χ(Fo) = r + 1 = {}, but χ(Fo) = {chi}",
            p.r + 1
        )));
    }
    let (lo, hi) = p.edge_range.unwrap_or((1, usize::MAX));
    let constraints = Constraints { max_edges: p.edge_range.map(|r| r.1), ..Default::default() };
    let candidates: Vec<Graph> = (2..=p.size_cap)
        .flat_map(|n| admissible_classes(n, &constraints))
        .filter(|g| {
            let e = g.edge_count();
            e >= lo.max(1) && e <= hi && g.degrees().iter().all(|&d| d > 0)
        })
        .collect();
    let outcomes: Vec<_> = candidates.par_iter().map(|m| examine(fo, m, p)).collect();
    let mut family = GraphFamily::new();
    let mut members = Vec::new();
    for (m, outcome) in candidates.iter().zip(outcomes) {
        match outcome {
            Err(()) => {
                return Ok(Decomposition::Indeterminate { candidate: m.clone(), budget: p.budget.unwrap_or(0) });
            }
            Ok(Some(member)) => {
                family.insert(member.graph.clone());
                members.push(member);
            }
            Ok(None) => {}
        }
    }
    Ok(Decomposition::Complete { family, members, candidates: candidates.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballooning::uniform_balloon;
    use crate::graph::canon::is_isomorphic;
    use crate::graph::named::*;

    fn fam(gs: Vec<Graph>) -> GraphFamily {
        gs.into_iter().collect()
    }

    fn p3_k2() -> Graph {
        disjoint_union(&path(3).unwrap(), &complete(2).unwrap()).unwrap()
    }

    #[test]
    fn crack_triangle() {
        let k3 = complete(3).unwrap();
        let a = CrackAssignment::uniform(&k3, &[0], EdgeType::TypeI).unwrap();
        assert!(is_isomorphic(&crack(&k3, &a).unwrap(), &path(4).unwrap()));
        let a = CrackAssignment::new(&k3, &[0], [((0, 1), EdgeType::TypeI), ((2, 0), EdgeType::TypeII)]).unwrap();
        assert!(is_isomorphic(&crack(&k3, &a).unwrap(), &p3_k2()));
        let a = CrackAssignment::uniform(&k3, &[], EdgeType::TypeI).unwrap();
        assert_eq!(crack(&k3, &a).unwrap(), k3);
    }

    #[test]
    fn assignments_are_validated() {
        let k3 = complete(3).unwrap();
        assert!(CrackAssignment::uniform(&k3, &[0, 1], EdgeType::TypeI).is_err());
        assert!(CrackAssignment::new(&k3, &[0], [((0, 1), EdgeType::TypeI)]).is_err());
        assert!(CrackAssignment::new(&k3, &[0], [((0, 1), EdgeType::TypeI), ((0, 2), EdgeType::TypeI), ((1, 2), EdgeType::TypeI)]).is_err());
        assert!(crack_family(&k3, &[1, 2]).is_err());
        assert!(CrackAssignment::uniform(&k3, &[5], EdgeType::TypeI).is_err());
    }

    #[test]
    fn small_families() {
        let k3 = complete(3).unwrap();
        let expected = fam(vec![path(4).unwrap(), p3_k2(), matching(3).unwrap()]);
        assert_eq!(crack_family(&k3, &[0]).unwrap(), expected);
        assert_eq!(crack_family(&k3, &[]).unwrap(), fam(vec![k3.clone()]));
        let a = CrackAssignment::uniform(&complete(2).unwrap(), &[0], EdgeType::TypeII).unwrap();
        assert_eq!(crack(&complete(2).unwrap(), &a).unwrap().n(), 3);
        let k2 = complete(2).unwrap();
        assert_eq!(crack_family(&k2, &[0]).unwrap(), fam(vec![k2.clone()]));
        assert_eq!(cracking_family(&k2).unwrap(), fam(vec![k2]));
        let mut all = expected;
        all.insert(k3.clone());
        assert_eq!(cracking_family(&k3).unwrap(), all);
    }

    #[test]
    fn all_type_i_keeps_neighborhood() {
        // K_1 ∇ P_3 cracked at the apex: the P_3 stays, with a pendant at each vertex
        let f = apex_skeleton(&path(3).unwrap()).unwrap();
        let g = crack(&f, &CrackAssignment::uniform(&f, &[0], EdgeType::TypeI).unwrap()).unwrap();
        let expected = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_isomorphic(&g, &expected));
    }

    #[test]
    fn wheel_family_keeps_edge_count() {
        let w5 = wheel(2).unwrap();
        assert_eq!(w5.edge_count(), 8);
        let c = cracking_family(&w5).unwrap();
        assert!(c.len() > 1);
        assert!(c.iter().all(|j| j.edge_count() == 8));
    }

    #[test]
    fn symmetry_reduction_is_exact() {
        for f in [wheel(2).unwrap(), apex_skeleton(&matching(2).unwrap()).unwrap(), petersen(), path(5).unwrap()] {
            assert!(independent_set_orbits(&f).len() <= independent_sets(&f).len());
            assert_eq!(cracking_family(&f).unwrap(), cracking_family_unreduced(&f).unwrap());
        }
        // the triangle has one orbit of singletons
        assert_eq!(independent_set_orbits(&complete(3).unwrap()), vec![vec![], vec![0]]);
    }

    #[test]
    fn independent_sets_match_subset_filter() {
        let g = petersen();
        let brute = (0u32..1 << 10)
            .filter(|&m| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
            .count();
        assert_eq!(independent_sets(&g).len(), brute);
    }

    #[test]
    fn q_values() {
        assert_eq!(q_of_family(&cracking_family(&complete(3).unwrap()).unwrap()).unwrap(), 2);
        let c4 = apex_skeleton(&cycle(4).unwrap()).unwrap();
        assert_eq!(q_of_family(&cracking_family(&c4).unwrap()).unwrap(), 4);
        let m2 = apex_skeleton(&matching(2).unwrap()).unwrap();
        assert_eq!(q_of_family(&cracking_family(&m2).unwrap()).unwrap(), 3);
        assert!(matches!(q_of_family(&fam(vec![complete(3).unwrap()])), Err(Error::Domain(_))));
    }

    #[test]
    fn fixtures() {
        let c4 = cycle(4).unwrap();
        let j3 = fixture_j(&c4, 3).unwrap();
        assert!(is_isomorphic(&j3, &disjoint_union(&star(5).unwrap(), &matching(4).unwrap()).unwrap()));
        let m2 = matching(2).unwrap();
        let j2 = fixture_j(&m2, 2).unwrap();
        assert!(is_isomorphic(&j2, &disjoint_union(&star(3).unwrap(), &matching(4).unwrap()).unwrap()));
        for fb in [c4, m2, path(3).unwrap(), star(4).unwrap(), cycle(6).unwrap()] {
            let c = cracking_family(&apex_skeleton(&fb).unwrap()).unwrap();
            for which in 1..=4 {
                assert!(c.contains_isomorphic(&fixture_j(&fb, which).unwrap()), "J{which} of {fb:?}");
            }
            // J_4 has q = |F•|
            assert_eq!(independent_covering_number(&fixture_j(&fb, 4).unwrap()).unwrap(), fb.n());
        }
        assert!(fixture_j(&complete(3).unwrap(), 1).is_err());
        assert!(fixture_j(&Graph::empty(2).unwrap(), 1).is_err());
        assert!(fixture_j(&cycle(4).unwrap(), 5).is_err());
    }

    #[test]
    fn component_kinds() {
        let g = disjoint_union(&cycle(4).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(f_bullet_components(&g).unwrap(), vec![ComponentKind::EvenCycle, ComponentKind::Tree]);
        assert!(f_bullet_components(&cycle(5).unwrap()).is_err());
        assert!(f_bullet_components(&disjoint_union(&complete(2).unwrap(), &complete(1).unwrap()).unwrap()).is_err());
    }

    #[test]
    fn decomposition_of_c5() {
        let c5 = cycle(5).unwrap();
        let p = DecompositionParams::new(&c5, 2, 4);
        let Decomposition::Complete { family, members, .. } = decomposition_family_bruteforce(&c5, &p).unwrap() else {
            panic!("no budget was set");
        };
        assert_eq!(family, fam(vec![complete(2).unwrap()]));
        assert_eq!(members[0].t, 2);
        assert!(matches!(
            decomposition_family_bruteforce(&cycle(4).unwrap(), &DecompositionParams::new(&cycle(4).unwrap(), 2, 3)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn decomposition_budget_is_reported() {
        let fo = uniform_balloon(&complete(3).unwrap(), 5).unwrap();
        let mut p = DecompositionParams::new(&fo, 2, 3);
        p.budget = Some(5);
        assert!(matches!(decomposition_family_bruteforce(&fo, &p).unwrap(), Decomposition::Indeterminate { .. }));
    }

    #[test]
    fn decomposition_of_path_balloon() {
        let f = path(4).unwrap();
        let fo = uniform_balloon(&f, 5).unwrap();
        let mut p = DecompositionParams::new(&fo, 2, 7);
        p.t_max = 8;
        p.edge_range = Some((3, 3));
        let Decomposition::Complete { family, .. } = decomposition_family_bruteforce(&fo, &p).unwrap() else {
            panic!("no budget was set");
        };
        assert_eq!(family, cracking_family(&f).unwrap());
    }
}
