//! Canonical labeling.
//!
//! Disconnected graphs are labeled component by component, and graphs whose
//! complement is disconnected are labeled through the complement. Everything
//! else goes through an individualization-refinement search: equitable
//! partition refinement, branching on the first smallest non-singleton cell,
//! and pruning with the automorphisms discovered at the leaves (orbit pruning
//! plus the usual jump back to the common ancestor of equivalent leaves).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, VSet};

/// Byte string identifying an isomorphism class (of vertex-colored graphs,
/// when colors are supplied).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Vertex count of the encoded graph.
    pub fn order(&self) -> usize {
        u16::from_le_bytes([self.0[0], self.0[1]]) as usize
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_colored(g, &vec![0; g.n()])
}

/// Canonical form of `g` with vertex colors; isomorphisms must preserve colors.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    let lab = canonical_order(g, colors);
    CanonicalForm(encode(g, colors, &lab))
}

/// Canonical form together with the canonically relabeled graph.
pub fn canonize(g: &Graph) -> (CanonicalForm, Graph) {
    let colors = vec![0; g.n()];
    let lab = canonical_order(g, &colors);
    let form = CanonicalForm(encode(g, &colors, &lab));
    (form, g.relabel(&invert(&lab)))
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let lab = canonical_order(g, &vec![0; g.n()]);
    invert(&lab)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn is_isomorphic(f: &Graph, h: &Graph) -> bool {
    if f.n() != h.n() || f.edge_count() != h.edge_count() {
        return false;
    }
    let mut df = f.degrees();
    let mut dh = h.degrees();
    df.sort_unstable();
    dh.sort_unstable();
    df == dh && canonical_form(f) == canonical_form(h)
}

fn invert(lab: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

/// Form bytes: order (u16 LE), a colored flag and colors in position order if
/// any color is non-zero, then the upper triangle row by row, bit-packed.
fn encode(g: &Graph, colors: &[u32], lab: &[usize]) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(3 + n * (n - n.min(1)) / 16 + 1);
    out.extend_from_slice(&(n as u16).to_le_bytes());
    if colors.iter().any(|&c| c != 0) {
        out.push(1);
        for &v in lab {
            out.extend_from_slice(&colors[v].to_le_bytes());
        }
    } else {
        out.push(0);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for i in 0..n {
        for j in i + 1..n {
            acc = acc << 1 | u8::from(g.has_edge(lab[i], lab[j]));
            nbits += 1;
            if nbits == 8 {
                out.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(acc << (8 - nbits));
    }
    out
}

/// Canonical vertex order: `lab[pos]` is the vertex placed at `pos`.
fn canonical_order(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut parts: Vec<(Vec<u8>, Vec<usize>)> = comps
            .into_iter()
            .map(|comp| {
                let sub = g.induced(&comp);
                let sub_colors: Vec<u32> = comp.iter().map(|&v| colors[v]).collect();
                let lab = canonical_order(&sub, &sub_colors);
                let code = encode(&sub, &sub_colors, &lab);
                (code, lab.into_iter().map(|i| comp[i]).collect())
            })
            .collect();
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        return parts.into_iter().flat_map(|(_, lab)| lab).collect();
    }
    let co = g.complement();
    if !co.is_connected() {
        return canonical_order(&co, colors);
    }
    Search::new(g, colors).run()
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    code: Vec<VSet>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search {
    rows: Vec<VSet>,
    initial: Cells,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &Graph, colors: &[u32]) -> Search {
        let mut by_color: Vec<(u32, usize)> = (0..g.n()).map(|v| (colors[v], v)).collect();
        by_color.sort_unstable();
        let mut initial: Cells = Vec::new();
        let mut last = None;
        for (c, v) in by_color {
            if last != Some(c) {
                initial.push(Vec::new());
                last = Some(c);
            }
            initial.last_mut().unwrap().push(v);
        }
        Search { rows: g.rows(), initial, first: None, best: None, generators: Vec::new() }
    }

    fn run(mut self) -> Vec<usize> {
        let cells = std::mem::take(&mut self.initial);
        let mut path = Vec::new();
        self.descend(cells, &mut path);
        self.best.expect("search reaches a leaf").lab
    }

    /// Returns the level to jump back to, if an automorphism made the rest of
    /// some ancestor's current subtree redundant.
    fn descend(&mut self, mut cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        refine(&self.rows, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            return self.leaf(&cells, path);
        };
        let level = path.len();
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit_as_any(path, v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn same_orbit_as_any(&self, path: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if path.iter().all(|&x| gen[x] == x) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gen[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let pos = invert(&lab);
        let code: Vec<VSet> = lab
            .iter()
            .map(|&v| self.rows[v].iter().map(|u| pos[u]).collect())
            .collect();
        let leaf = Leaf { code, lab, path: path.to_vec() };
        let Some(first) = &self.first else {
            self.best = Some(Leaf { code: leaf.code.clone(), lab: leaf.lab.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if first.code == leaf.code {
            let jump = common_prefix(&first.path, path);
            let gen = automorphism(&first.lab, &leaf.lab);
            self.generators.push(gen);
            return Some(jump);
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.code.cmp(&best.code) {
            std::cmp::Ordering::Equal => {
                let jump = common_prefix(&best.path, path);
                let gen = automorphism(&best.lab, &leaf.lab);
                self.generators.push(gen);
                Some(jump)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The automorphism sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

/// Refine an ordered partition to the coarsest equitable refinement.
/// Cells split in place, sub-cells ordered by neighbor count.
fn refine(rows: &[VSet], cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter: VSet = cells[si].iter().copied().collect();
            let mut out: Cells = Vec::with_capacity(cells.len() + 2);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    out.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cell.iter().map(|&v| (rows[v].intersection_len(&splitter), v)).collect();
                keyed.sort_unstable();
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    out.push(cell.clone());
                    continue;
                }
                split = true;
                let mut cur = Vec::new();
                let mut key = keyed[0].0;
                for (k, v) in keyed {
                    if k != key {
                        out.push(std::mem::take(&mut cur));
                        key = k;
                    }
                    cur.push(v);
                }
                out.push(cur);
            }
            if split {
                *cells = out;
                changed = true;
            }
            si += 1;
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn shuffled(g: &Graph, rng: &mut impl Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(rng);
        g.relabel(&perm)
    }

    /// Brute-force isomorphism over all bijections, for small graphs.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        fn go(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let i = map.len();
            if i == a.n() {
                return true;
            }
            for t in 0..b.n() {
                if used[t] {
                    continue;
                }
                if (0..i).all(|j| a.has_edge(i, j) == b.has_edge(t, map[j])) {
                    used[t] = true;
                    map.push(t);
                    if go(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[t] = false;
                }
            }
            false
        }
        a.n() == b.n() && a.edge_count() == b.edge_count() && go(a, b, &mut Vec::new(), &mut vec![false; b.n()])
    }

    #[test]
    fn relabeling_invariance_on_named_graphs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let graphs = vec![
            cycle(5).unwrap(),
            petersen(),
            complete(7).unwrap(),
            matching(6).unwrap(),
            star(9).unwrap(),
            turan(11, 3).unwrap(),
            wheel(3).unwrap(),
            disjoint_union(&cycle(6).unwrap(), &cycle(6).unwrap()).unwrap(),
            Graph::empty(5).unwrap(),
        ];
        for g in &graphs {
            let form = canonical_form(g);
            for _ in 0..30 {
                assert_eq!(canonical_form(&shuffled(g, &mut rng)), form);
            }
            assert_eq!(canonical_graph(g), canonical_graph(&shuffled(g, &mut rng)));
            assert!(is_isomorphic(g, &canonical_graph(g)));
        }
    }

    #[test]
    fn path_is_not_star() {
        assert!(!is_isomorphic(&path(4).unwrap(), &star(4).unwrap()));
    }

    #[test]
    fn k33_is_prism_with_antipodal_matching() {
        let mut g = cycle(6).unwrap();
        for i in 0..3 {
            g.add_edge(i, i + 3).unwrap();
        }
        assert!(brute_isomorphic(&complete_bipartite(3, 3).unwrap(), &g));
        assert!(is_isomorphic(&complete_bipartite(3, 3).unwrap(), &g));
    }

    #[test]
    fn agrees_with_brute_force_on_random_pairs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..400 {
            let n = rng.gen_range(1..=7);
            let m = rng.gen_range(0..=n * (n - 1) / 2);
            let mk = |rng: &mut rand::rngs::StdRng| {
                let mut g = Graph::empty(n).unwrap();
                while g.edge_count() < m {
                    let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    if u != v {
                        g.add_edge(u, v).unwrap();
                    }
                }
                g
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            assert_eq!(is_isomorphic(&a, &b), brute_isomorphic(&a, &b), "{a:?} {b:?}");
        }
    }

    #[test]
    fn colors_restrict_isomorphism() {
        let p3 = path(3).unwrap();
        let end = canonical_form_colored(&p3, &[1, 0, 0]);
        let other_end = canonical_form_colored(&p3, &[0, 0, 1]);
        let middle = canonical_form_colored(&p3, &[0, 1, 0]);
        assert_eq!(end, other_end);
        assert_ne!(end, middle);
        assert_ne!(canonical_form(&p3), middle);
    }
}
