//! Standard graphs and the two graph-forming operations, join and
//! disjoint union.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// The named graph families the crate can build directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Named {
    /// `K_k`
    Complete { k: usize },
    /// `E_k`
    Empty { k: usize },
    /// `S_k`: a star on `k` vertices (`k - 1` leaves).
    Star { k: usize },
    /// `P_k`: a path on `k` vertices.
    Path { k: usize },
    /// `C_k`, `k >= 3`.
    Cycle { k: usize },
    /// `M_t`: `t` disjoint edges.
    Matching { t: usize },
    /// `T_{n,r}`: balanced complete `r`-partite graph.
    Turan { n: usize, r: usize },
    /// `K_{s,t}`
    CompleteBipartite { s: usize, t: usize },
}

impl Named {
    pub fn build(self) -> Result<Graph> {
        match self {
            Named::Complete { k } => complete(k),
            Named::Empty { k } => Graph::empty(k),
            Named::Star { k } => star(k),
            Named::Path { k } => path(k),
            Named::Cycle { k } => cycle(k),
            Named::Matching { t } => matching(t),
            Named::Turan { n, r } => turan(n, r),
            Named::CompleteBipartite { s, t } => complete_bipartite(s, t),
        }
    }
}

pub fn make_named(kind: Named) -> Result<Graph> {
    kind.build()
}

pub fn complete(k: usize) -> Result<Graph> {
    let mut g = Graph::empty(k)?;
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn empty(k: usize) -> Result<Graph> {
    Graph::empty(k)
}

/// Center is vertex 0.
pub fn star(k: usize) -> Result<Graph> {
    let mut g = Graph::empty(k)?;
    for v in 1..k {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

pub fn path(k: usize) -> Result<Graph> {
    let mut g = Graph::empty(k)?;
    for v in 1..k {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("cycle length must be at least 3, got {k}")));
    }
    let mut g = path(k)?;
    g.add_edge(k - 1, 0)?;
    Ok(g)
}

/// Edges `(2i, 2i+1)`.
pub fn matching(t: usize) -> Result<Graph> {
    let mut g = Graph::empty(2 * t)?;
    for i in 0..t {
        g.add_edge(2 * i, 2 * i + 1)?;
    }
    Ok(g)
}

/// Part sizes of `T_{n,r}` in vertex order: the first `n mod r` parts have
/// `ceil(n/r)` vertices.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 {
        return Err(Error::InvalidParameter("Turán graph needs r >= 1".into()));
    }
    let (q, extra) = (n / r, n % r);
    Ok((0..r).map(|i| q + usize::from(i < extra)).collect())
}

pub fn turan(n: usize, r: usize) -> Result<Graph> {
    let parts = turan_parts(n, r)?;
    complete_multipartite(&parts)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Sides `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    complete_multipartite(&[s, t])
}

/// `F ∇ H`: `F` on `0..|F|`, `H` shifted after it, all cross pairs adjacent.
pub fn join(f: &Graph, h: &Graph) -> Result<Graph> {
    let mut g = disjoint_union(f, h)?;
    for u in 0..f.n() {
        for v in 0..h.n() {
            g.add_edge(u, f.n() + v)?;
        }
    }
    Ok(g)
}

/// `F ∪ H` with `H` shifted after `F`.
pub fn disjoint_union(f: &Graph, h: &Graph) -> Result<Graph> {
    let off = f.n();
    let mut g = Graph::empty(off + h.n())?;
    for (u, v) in f.edges() {
        g.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        g.add_edge(off + u, off + v)?;
    }
    Ok(g)
}

/// Odd wheel `W_{2k+1} = K_1 ∇ C_{2k}`.
pub fn wheel(k: usize) -> Result<Graph> {
    join(&complete(1)?, &cycle(2 * k)?)
}

/// Fan `H_k = K_1 ∇ P_{k+1}`.
pub fn fan(k: usize) -> Result<Graph> {
    join(&complete(1)?, &path(k + 1)?)
}

/// Book `B_k = K_1 ∇ S_{k+1}`.
pub fn book(k: usize) -> Result<Graph> {
    join(&complete(1)?, &star(k + 1)?)
}

/// Friendship graph `F_k = K_1 ∇ M_k`.
pub fn friendship(k: usize) -> Result<Graph> {
    join(&complete(1)?, &matching(k)?)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_examples() {
        let t52 = turan(5, 2).unwrap();
        assert_eq!(t52.edge_count(), 6);
        assert_eq!(turan_parts(5, 2).unwrap(), vec![3, 2]);
        let t73 = turan(7, 3).unwrap();
        assert_eq!(turan_parts(7, 3).unwrap(), vec![3, 2, 2]);
        // 3*2 + 3*2 + 2*2
        assert_eq!(t73.edge_count(), 16);
        assert_eq!(turan(0, 3).unwrap().n(), 0);
        assert_eq!(turan(4, 1).unwrap().edge_count(), 0);
        assert!(turan(4, 0).is_err());
    }

    #[test]
    fn matching_and_cycle() {
        let m3 = matching(3).unwrap();
        assert_eq!((m3.n(), m3.edge_count()), (6, 3));
        assert!(m3.degrees().iter().all(|&d| d == 1));
        assert!(matches!(cycle(2), Err(Error::InvalidParameter(_))));
        assert!(Named::Cycle { k: 2 }.build().is_err());
    }

    #[test]
    fn join_examples() {
        let w5 = join(&complete(1).unwrap(), &cycle(4).unwrap()).unwrap();
        assert_eq!((w5.n(), w5.edge_count()), (5, 8));
        assert_eq!(wheel(2).unwrap(), w5);
        let c4 = cycle(4).unwrap();
        assert_eq!(join(&empty(0).unwrap(), &c4).unwrap(), c4);
        let g = join(&empty(2).unwrap(), &turan(4, 2).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 4 + 2 * 4));
    }

    #[test]
    fn union_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(disjoint_union(&k2, &k2).unwrap(), matching(2).unwrap());
        let c5 = cycle(5).unwrap();
        assert_eq!(disjoint_union(&empty(0).unwrap(), &c5).unwrap(), c5);
        let apex = disjoint_union(&matching(1).unwrap(), &complete(1).unwrap()).unwrap();
        assert_eq!((apex.n(), apex.edge_count()), (3, 1));
    }

    #[test]
    fn skeleton_shortcuts() {
        assert_eq!(fan(2).unwrap().edge_count(), 2 + 3);
        assert_eq!(book(2).unwrap().edge_count(), 2 + 3);
        assert_eq!(friendship(2).unwrap().edge_count(), 2 + 4);
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
    }
}
