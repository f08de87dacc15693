use std::collections::BTreeMap;

use super::canon::{canonical_form, canonize, CanonicalForm};
use super::subgraph::{Containment, SearchStats, SubgraphSearch};
use super::Graph;
use crate::error::Result;

/// A finite set of pairwise non-isomorphic graphs.
///
/// Members are stored in canonical labeling, keyed and ordered by canonical
/// form, so two families built in different orders compare equal.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GraphFamily {
    members: BTreeMap<CanonicalForm, Graph>,
}

impl GraphFamily {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `g` unless an isomorphic member exists; returns whether it was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let (form, canon) = canonize(&g);
        self.insert_canonical(form, canon)
    }

    /// Inserts a graph already in canonical labeling under its form.
    pub(crate) fn insert_canonical(&mut self, form: CanonicalForm, canon: Graph) -> bool {
        if self.members.contains_key(&form) {
            return false;
        }
        self.members.insert(form, canon);
        true
    }

    pub fn contains_isomorphic(&self, g: &Graph) -> bool {
        self.members.contains_key(&canonical_form(g))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CanonicalForm, &Graph)> {
        self.members.iter()
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.members.keys()
    }

    /// Union; associative and commutative.
    pub fn merge(&mut self, other: GraphFamily) {
        for (form, g) in other.members {
            self.members.entry(form).or_insert(g);
        }
    }
}

impl FromIterator<Graph> for GraphFamily {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> Self {
        let mut fam = GraphFamily::new();
        for g in iter {
            fam.insert(g);
        }
        fam
    }
}

impl std::fmt::Debug for GraphFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.members.values().map(|g| g.to_string())).finish()
    }
}

/// Outcome of testing a host against every member of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyContainment {
    Free,
    /// Lowest-index member (in family order) that embeds, with its witness.
    Contains { member: usize, embedding: Vec<usize> },
    Indeterminate,
}

/// Members are tested in family order; the result does not depend on how
/// the search is scheduled.
pub fn family_containment(host: &Graph, family: &GraphFamily, search: SubgraphSearch) -> (FamilyContainment, SearchStats) {
    let mut stats = SearchStats::default();
    let mut indeterminate = false;
    for (i, member) in family.iter().enumerate() {
        let (c, s) = search.find(host, member);
        stats.nodes += s.nodes;
        match c {
            Containment::Found { embedding } => {
                return (FamilyContainment::Contains { member: i, embedding }, stats);
            }
            Containment::BudgetExhausted => indeterminate = true,
            Containment::NotFound => {}
        }
    }
    let verdict = if indeterminate { FamilyContainment::Indeterminate } else { FamilyContainment::Free };
    (verdict, stats)
}

/// `true` iff no member of `family` is a subgraph of `host`.
pub fn is_family_free(host: &Graph, family: &GraphFamily) -> bool {
    matches!(family_containment(host, family, SubgraphSearch::default()).0, FamilyContainment::Free)
}

/// Parses graph6 lines (blank lines and `#` comments skipped) into a family.
pub fn family_from_graph6_lines(text: &str) -> Result<GraphFamily> {
    let mut fam = GraphFamily::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        fam.insert(super::graph6::decode(line)?);
    }
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn membership_is_by_isomorphism() {
        let mut fam = GraphFamily::new();
        assert!(fam.insert(path(4).unwrap()));
        assert!(!fam.insert(Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap()));
        assert!(fam.insert(star(4).unwrap()));
        assert_eq!(fam.len(), 2);
        assert!(fam.contains_isomorphic(&Graph::from_edges(4, &[(3, 0), (3, 1), (3, 2)]).unwrap()));
    }

    #[test]
    fn freeness_examples() {
        let edgeful: GraphFamily = [complete(2).unwrap(), cycle(5).unwrap()].into_iter().collect();
        assert!(is_family_free(&Graph::empty(7).unwrap(), &edgeful));
        let tri: GraphFamily = [complete(3).unwrap()].into_iter().collect();
        assert!(!is_family_free(&complete(6).unwrap(), &tri));
        let m2: GraphFamily = [matching(2).unwrap()].into_iter().collect();
        assert!(is_family_free(&complete_bipartite(1, 8).unwrap(), &m2));
    }

    #[test]
    fn merge_is_order_independent() {
        let a: GraphFamily = [path(3).unwrap(), cycle(4).unwrap()].into_iter().collect();
        let b: GraphFamily = [cycle(4).unwrap(), complete(3).unwrap()].into_iter().collect();
        let mut ab = a.clone();
        ab.merge(b.clone());
        let mut ba = b;
        ba.merge(a);
        assert_eq!(ab, ba);
        assert_eq!(ab.len(), 3);
    }
}
