//! Exact graph parameters: degrees, covering and independence numbers,
//! bipartiteness and chromatic number.

use super::{Graph, VSet};
use crate::error::{Error, Result};

/// Largest graph handed to [`chromatic_number`]; it is meant for patterns, not hosts.
pub const CHROMATIC_LIMIT: usize = 64;

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Proper 2-coloring, if one exists. Each component's smallest vertex gets color 0.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let mut color = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// `β(G)`, the minimum vertex cover, by branching on a highest-degree vertex:
/// either it is in the cover or its whole neighborhood is.
pub fn covering_number(g: &Graph) -> usize {
    let rows = g.rows();
    let mut best = g.n();
    cover_search(&rows, VSet::prefix(g.n()), 0, &mut best);
    best
}

fn cover_search(rows: &[VSet], alive: VSet, taken: usize, best: &mut usize) {
    if taken >= *best {
        return;
    }
    let mut pick = None;
    let mut pick_deg = 0;
    let mut edges2 = 0;
    for v in alive.iter() {
        let d = rows[v].intersection_len(&alive);
        edges2 += d;
        if d > pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        *best = taken;
        return;
    };
    // each cover vertex removes at most pick_deg edges
    let edges = edges2 / 2;
    if taken + edges.div_ceil(pick_deg) >= *best {
        return;
    }
    let mut without_v = alive;
    without_v.remove(v);
    cover_search(rows, without_v, taken + 1, best);
    let nbrs = rows[v].and(&alive);
    cover_search(rows, without_v.and_not(&nbrs), taken + nbrs.len(), best);
}

/// `α(G)`, maximum independent set size, by include/exclude branching with a
/// greedy clique-cover style bound.
pub fn independence_number(g: &Graph) -> usize {
    let rows = g.rows();
    let mut best = 0;
    mis_search(&rows, VSet::prefix(g.n()), 0, &mut best);
    best
}

fn mis_search(rows: &[VSet], alive: VSet, size: usize, best: &mut usize) {
    if alive.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + alive.len() <= *best {
        return;
    }
    // vertices of degree <= 1 in the remaining graph can always be taken
    let mut v_max = None;
    let mut d_max = 0;
    for v in alive.iter() {
        let d = rows[v].intersection_len(&alive);
        if d <= 1 {
            let mut rest = alive.and_not(&rows[v]);
            rest.remove(v);
            return mis_search(rows, rest, size + 1, best);
        }
        if d > d_max {
            d_max = d;
            v_max = Some(v);
        }
    }
    let v = v_max.expect("non-empty");
    let mut with_v = alive.and_not(&rows[v]);
    with_v.remove(v);
    mis_search(rows, with_v, size + 1, best);
    let mut without_v = alive;
    without_v.remove(v);
    mis_search(rows, without_v, size, best);
}

/// `q(G)`: the minimum independent set meeting every edge of a bipartite graph.
///
/// In a connected bipartite component with an edge, an independent covering
/// must contain exactly one endpoint of every edge, and so is one whole color
/// class. The minimum therefore takes the smaller class of each non-trivial
/// component.
pub fn independent_covering_number(g: &Graph) -> Result<usize> {
    let color = bipartition(g).ok_or(Error::NotBipartite)?;
    Ok(g.components()
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let ones = c.iter().filter(|&&v| color[v] == 1).count();
            ones.min(c.len() - ones)
        })
        .sum())
}

/// `χ(G)` by DSatur branch and bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_LIMIT {
        return Err(Error::Precondition(format!(
            "chromatic number is computed for patterns of at most {CHROMATIC_LIMIT} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if is_bipartite(g) {
        return Ok(2);
    }
    let rows = g.rows();
    let mut colors = vec![usize::MAX; n];
    // greedy upper bound
    let mut best = max_degree(g) + 1;
    let mut state = Dsatur { rows: &rows, colors: &mut colors, best: &mut best };
    state.search(0, 0);
    Ok(best)
}

struct Dsatur<'a> {
    rows: &'a [VSet],
    colors: &'a mut Vec<usize>,
    best: &'a mut usize,
}

impl Dsatur<'_> {
    fn search(&mut self, colored: usize, used: usize) {
        let n = self.rows.len();
        if used >= *self.best {
            return;
        }
        if colored == n {
            *self.best = used;
            return;
        }
        // pick the uncolored vertex of maximum saturation, then degree
        let mut pick = 0;
        let mut key = (0usize, 0usize);
        let mut pick_mask = 0u64;
        let mut first = true;
        for v in 0..n {
            if self.colors[v] != usize::MAX {
                continue;
            }
            let mut mask = 0u64;
            for u in self.rows[v].iter() {
                if self.colors[u] != usize::MAX {
                    mask |= 1 << self.colors[u];
                }
            }
            let k = (mask.count_ones() as usize, self.rows[v].len());
            if first || k > key {
                first = false;
                key = k;
                pick = v;
                pick_mask = mask;
            }
        }
        for c in 0..used {
            if pick_mask >> c & 1 == 0 {
                self.colors[pick] = c;
                self.search(colored + 1, used);
                self.colors[pick] = usize::MAX;
            }
        }
        if used + 1 < *self.best {
            self.colors[pick] = used;
            self.search(colored + 1, used + 1);
            self.colors[pick] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// All vertex subsets; used as the oracle for covers and independent sets.
    fn subsets_oracle(g: &Graph) -> (usize, usize, Option<usize>) {
        let n = g.n();
        let edges: Vec<_> = g.edges().collect();
        let mut beta = n;
        let mut alpha = 0;
        let mut q: Option<usize> = None;
        for mask in 0u32..(1 << n) {
            let covers = edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1);
            let indep = edges.iter().all(|&(u, v)| !(mask >> u & 1 == 1 && mask >> v & 1 == 1));
            let size = mask.count_ones() as usize;
            if covers {
                beta = beta.min(size);
            }
            if indep {
                alpha = alpha.max(size);
            }
            if covers && indep {
                q = Some(q.map_or(size, |x| x.min(size)));
            }
        }
        (beta, alpha, q)
    }

    #[test]
    fn triangle_and_star() {
        let k3 = complete(3).unwrap();
        assert_eq!(covering_number(&k3), 2);
        assert_eq!(max_degree(&k3), 2);
        assert_eq!(chromatic_number(&k3).unwrap(), 3);
        assert_eq!(covering_number(&star(5).unwrap()), 1);
    }

    #[test]
    fn path_cover_by_enumeration() {
        let p4 = path(4).unwrap();
        let (beta, alpha, q) = subsets_oracle(&p4);
        assert_eq!((beta, alpha, q), (2, 2, Some(2)));
        assert_eq!(covering_number(&p4), 2);
        assert_eq!(independent_covering_number(&p4).unwrap(), 2);
    }

    #[test]
    fn independent_covering_examples() {
        assert_eq!(independent_covering_number(&complete_bipartite(2, 3).unwrap()).unwrap(), 2);
        let c6 = cycle(6).unwrap();
        assert_eq!(subsets_oracle(&c6).2, Some(3));
        assert_eq!(independent_covering_number(&c6).unwrap(), 3);
        assert_eq!(independent_covering_number(&cycle(5).unwrap()), Err(Error::NotBipartite));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_number(&cycle(7).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(6).unwrap()).unwrap(), 6);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&wheel(2).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&join(&complete(1).unwrap(), &cycle(5).unwrap()).unwrap()).unwrap(), 4);
        assert!(chromatic_number(&Graph::empty(65).unwrap()).is_err());
    }

    #[test]
    fn parameters_agree_with_subset_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(0..=12);
            let mut g = Graph::empty(n).unwrap();
            let p: f64 = rng.gen_range(0.1..0.7);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let (beta, alpha, q) = subsets_oracle(&g);
            assert_eq!(covering_number(&g), beta);
            assert_eq!(independence_number(&g), alpha);
            if is_bipartite(&g) {
                assert_eq!(Some(independent_covering_number(&g).unwrap()), q);
            }
        }
    }
}
