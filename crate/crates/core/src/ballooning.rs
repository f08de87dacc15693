//! Odd-ballooning: every skeleton edge `uv` becomes an odd cycle through
//! `u` and `v` that keeps `uv` as one of its edges, with all other cycle
//! vertices fresh.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

/// A skeleton together with an odd cycle length for each of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalloonSpec {
    skeleton: Graph,
    lengths: BTreeMap<(usize, usize), usize>,
}

impl BalloonSpec {
    /// `lengths` must name every skeleton edge exactly once (either orientation).
    pub fn new(skeleton: Graph, lengths: impl IntoIterator<Item = ((usize, usize), usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((u, v), len) in lengths {
            let key = (u.min(v), u.max(v));
            if !skeleton.has_edge(key.0, key.1) {
                return Err(Error::InvalidParameter(format!("{u},{v} is not an edge of the skeleton")));
            }
            check_length(len)?;
            if map.insert(key, len).is_some() {
                return Err(Error::InvalidParameter(format!("edge {},{} has two lengths", key.0, key.1)));
            }
        }
        if let Some((u, v)) = skeleton.edges().find(|e| !map.contains_key(e)) {
            return Err(Error::InvalidParameter(format!("edge {u},{v} has no cycle length")));
        }
        Ok(BalloonSpec { skeleton, lengths: map })
    }

    /// Every edge gets the same length.
    pub fn uniform(skeleton: Graph, len: usize) -> Result<Self> {
        check_length(len)?;
        let lengths: Vec<_> = skeleton.edges().map(|e| (e, len)).collect();
        Self::new(skeleton, lengths)
    }

    pub fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    pub fn length(&self, u: usize, v: usize) -> Option<usize> {
        self.lengths.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn lengths(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.lengths.iter().map(|(&e, &l)| (e, l))
    }

    /// All cycle lengths are at least five, the regime the extremal
    /// predictions are stated for.
    pub fn long_cycles(&self) -> bool {
        self.lengths.values().all(|&l| l >= 5)
    }

    /// `graph6 ; edge u,v = l ; ...`
    pub fn to_text(&self) -> String {
        let mut s = graph6::encode(&self.skeleton);
        for ((u, v), l) in self.lengths() {
            s.push_str(&format!(" ; edge {u},{v} = {l}"));
        }
        s
    }

    /// Parses the text form. Clauses are `edge u,v = l` (the word `edge` is
    /// optional) or `default = l`, which covers every edge not listed.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut parts = text.trim().split(';').map(str::trim);
        let g6 = parts.next().filter(|s| !s.is_empty()).ok_or_else(|| Error::Parse("missing skeleton".into()))?;
        let skeleton = graph6::decode(g6)?;
        let mut explicit = Vec::new();
        let mut default = None;
        for clause in parts.filter(|c| !c.is_empty()) {
            let (lhs, rhs) = clause
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected `edge u,v = l`, got `{clause}`")))?;
            let len: usize = rhs.trim().parse().map_err(|_| Error::Parse(format!("bad length in `{clause}`")))?;
            let lhs = lhs.trim();
            if lhs == "default" {
                default = Some(len);
                continue;
            }
            let lhs = lhs.strip_prefix("edge").unwrap_or(lhs).trim();
            let (u, v) = lhs
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `u,v` in `{clause}`")))?;
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex in `{clause}`")));
            explicit.push(((parse(u)?, parse(v)?), len));
        }
        if let Some(d) = default {
            let listed: Vec<(usize, usize)> = explicit.iter().map(|&((u, v), _)| (u.min(v), u.max(v))).collect();
            let missing: Vec<_> = skeleton.edges().filter(|e| !listed.contains(e)).collect();
            explicit.extend(missing.into_iter().map(|e| (e, d)));
        }
        Self::new(skeleton, explicit)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SpecJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SpecJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let skeleton = graph6::decode(&raw.skeleton)?;
        Self::new(skeleton, raw.lengths.into_iter().map(|e| ((e.u, e.v), e.length)))
    }

    /// Accepts either serialization.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_text(text)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    skeleton: String,
    lengths: Vec<EdgeLength>,
}

#[derive(Serialize, Deserialize)]
struct EdgeLength {
    u: usize,
    v: usize,
    length: usize,
}

impl From<&BalloonSpec> for SpecJson {
    fn from(spec: &BalloonSpec) -> Self {
        SpecJson {
            skeleton: graph6::encode(&spec.skeleton),
            lengths: spec.lengths().map(|((u, v), length)| EdgeLength { u, v, length }).collect(),
        }
    }
}

fn check_length(len: usize) -> Result<()> {
    if len < 3 || len % 2 == 0 {
        Err(Error::InvalidParameter(format!("cycle lengths must be odd and at least 3, got {len}")))
    } else {
        Ok(())
    }
}

/// The ballooned graph and, per skeleton edge, its cycle as a vertex
/// sequence `u, fresh.., v` (closed by the edge `vu`).
#[derive(Debug, Clone)]
pub struct Balloon {
    pub graph: Graph,
    pub cycles: Vec<((usize, usize), Vec<usize>)>,
}

/// Builds `F°`. Skeleton vertices keep their indices; fresh vertices follow
/// in edge order.
pub fn odd_balloon(spec: &BalloonSpec) -> Result<Balloon> {
    let (n, _) = balloon_sizes(spec);
    let mut g = Graph::empty(n)?;
    let mut next = spec.skeleton.n();
    let mut cycles = Vec::with_capacity(spec.lengths.len());
    for ((u, v), len) in spec.lengths() {
        let mut cyc = Vec::with_capacity(len);
        cyc.push(u);
        cyc.extend(next..next + len - 2);
        next += len - 2;
        cyc.push(v);
        for w in cyc.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
        g.add_edge(v, u)?;
        cycles.push(((u, v), cyc));
    }
    Ok(Balloon { graph: g, cycles })
}

/// `(|F| + Σ(ℓ_e − 2), Σ ℓ_e)` without building the graph.
pub fn balloon_sizes(spec: &BalloonSpec) -> (usize, usize) {
    let extra: usize = spec.lengths.values().map(|l| l - 2).sum();
    let edges: usize = spec.lengths.values().sum();
    (spec.skeleton.n() + extra, edges)
}

/// Every skeleton edge ballooned to a cycle of length `len`.
pub fn uniform_balloon(skeleton: &Graph, len: usize) -> Result<Graph> {
    Ok(odd_balloon(&BalloonSpec::uniform(skeleton.clone(), len)?)?.graph)
}
