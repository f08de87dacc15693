//! Closed-form evaluators and predicted Turán numbers.
//!
//! All arithmetic is exact: integers for edge counts, rationals for the
//! asymptotic density term.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::constructions::ApexJoinDescriptor;
use crate::cracking::{f_bullet_components, ComponentKind};
use crate::error::{Error, Result};
use crate::graph::named::{complete, disjoint_union, empty, matching};
use crate::graph::Graph;

/// `e(T_{n,r})`.
pub fn turan_edges(n: u64, r: u64) -> Result<u64> {
    if r == 0 {
        return Err(Error::InvalidParameter("a Turán graph needs at least one part".into()));
    }
    let (q, rem) = (n / r, n % r);
    let squares = rem * (q + 1) * (q + 1) + (r - rem) * q * q;
    Ok((n * n - squares) / 2)
}

/// `f(n, ν, Δ)`: the most edges in an `n`-vertex graph with matching number
/// at most `ν` and maximum degree at most `Δ`, for `n >= 2ν + 1`.
///
/// No vertex has degree above `n - 1`, so `Δ` is first lowered to `n - 1`;
/// the case analysis overcounts otherwise (it gives 4 for `f(4, 1, 5)`).
pub fn f_chvatal_hanson(n: u64, nu: u64, delta: u64) -> Result<u64> {
    if nu == 0 || delta == 0 {
        return Err(Error::InvalidParameter("ν and Δ must be positive".into()));
    }
    if n <= 2 * nu {
        return Err(Error::Precondition(format!("need n >= 2ν + 1 = {}, got n = {n}", 2 * nu + 1)));
    }
    Ok(chvatal_hanson_cases(n, nu, delta.min(n - 1)))
}

fn chvatal_hanson_cases(n: u64, nu: u64, delta: u64) -> u64 {
    let half = (delta + 1) / 2;
    if delta <= 2 * nu {
        let window = 2 * nu + nu / half;
        if n <= window {
            if delta % 2 == 1 {
                (n * delta / 2).min(nu * delta + (delta - 1) / 2 * (2 * (n - nu) / (delta + 3)))
            } else {
                n * delta / 2
            }
        } else {
            nu * delta + (nu / half) * (delta / 2)
        }
    } else if n <= nu + delta {
        ((2 * nu + 1) * nu).max(nu * (n + delta - nu) / 2)
    } else {
        nu * delta
    }
}

/// An `n` beyond which `f(n, ν, Δ)` is constant, equal to [`f_limit`].
pub fn f_stable_from(nu: u64, delta: u64) -> Result<u64> {
    if nu == 0 || delta == 0 {
        return Err(Error::InvalidParameter("ν and Δ must be positive".into()));
    }
    Ok(if delta <= 2 * nu { 2 * nu + nu / delta.div_ceil(2) + 1 } else { nu + delta + 1 })
}

/// `f(ν, Δ)`, the large-`n` value of `f(n, ν, Δ)`.
pub fn f_limit(nu: u64, delta: u64) -> Result<u64> {
    if nu == 0 || delta == 0 {
        return Err(Error::InvalidParameter("ν and Δ must be positive".into()));
    }
    if delta <= 2 * nu {
        Ok(nu * delta + (nu / delta.div_ceil(2)) * (delta / 2))
    } else {
        Ok(nu * delta)
    }
}

/// `h(n, k, i) = e((M_{k-1} ∪ K_1) ∇ T_{n-2k+1, i})`.
pub fn h_edges(n: u64, k: u64, i: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if n < 2 * k + 1 {
        return Err(Error::Precondition(format!("need n >= 2k + 1 = {}, got n = {n}", 2 * k + 1)));
    }
    let rest = n - 2 * k + 1;
    Ok((k - 1) + (2 * k - 1) * rest + turan_edges(rest, i)?)
}

/// Leading term `(1 - 1/(χ-1)) n(n-1)/2` of `ex(n, F)` for `χ(F) = chi`.
pub fn erdos_stone_asymptotic(n: u64, chi: u64) -> Result<Ratio<u128>> {
    if chi < 2 {
        return Err(Error::InvalidParameter(format!("chromatic number must be at least 2, got {chi}")));
    }
    let pairs = Ratio::new(n as u128 * n.saturating_sub(1) as u128, 2);
    Ok(Ratio::new(chi as u128 - 2, chi as u128 - 1) * pairs)
}

/// `ex(n, F_t) = e(T_{n,2}) + f(t-1, t-1)` for the friendship graph
/// `F_t = K_1 ∇ M_t`, valid for `n >= 50 t²`.
pub fn ex_friendship(t: u64, n: u64) -> Result<u64> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let extra = if t == 1 { 0 } else { f_limit(t - 1, t - 1)? };
    Ok(turan_edges(n, 2)? + extra)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    AllEvenCycles,
    AllSingleEdges,
    MixedTrees,
    ChiAtLeast4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Construction {
    ApexJoin(ApexJoinDescriptor),
    Symbolic { statement: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranPrediction {
    pub case_tag: CaseTag,
    pub n: usize,
    pub construction: Construction,
    pub edge_count: Option<u64>,
    /// The predictions hold for sufficiently large `n` without an explicit
    /// threshold; they are unconfirmed unless `n` reaches a trusted bound.
    pub conjectural: bool,
}

impl TuranPrediction {
    /// Marks the prediction as established when `n >= trust_from`.
    pub fn trusted_from(mut self, trust_from: Option<usize>) -> Self {
        self.conjectural = trust_from.is_none_or(|t| self.n < t);
        self
    }

    pub fn descriptor(&self) -> Option<&ApexJoinDescriptor> {
        match &self.construction {
            Construction::ApexJoin(d) => Some(d),
            Construction::Symbolic { .. } => None,
        }
    }
}

/// Which of the three component patterns `F•` has.
pub fn classify(f_bullet: &Graph) -> Result<CaseTag> {
    let kinds = f_bullet_components(f_bullet)?;
    Ok(if kinds.iter().all(|&k| k == ComponentKind::EvenCycle) {
        CaseTag::AllEvenCycles
    } else if f_bullet.components().iter().all(|c| c.len() == 2) {
        CaseTag::AllSingleEdges
    } else {
        CaseTag::MixedTrees
    })
}

/// `M_{k-1} ∪ K_1`.
fn h_apex(k: usize) -> Result<Graph> {
    disjoint_union(&matching(k - 1)?, &complete(1)?)
}

fn predict(f_bullet: &Graph, n: usize, parts: usize) -> Result<TuranPrediction> {
    let tag = classify(f_bullet)?;
    if n < f_bullet.n() + 1 {
        return Err(Error::Precondition(format!(
            "the construction needs n >= |F•| + 1 = {}, got {n}",
            f_bullet.n() + 1
        )));
    }
    let e = f_bullet.edge_count();
    let (apex, label) = match tag {
        CaseTag::AllEvenCycles => {
            let k = f_bullet.n() / 2;
            (h_apex(k)?, format!("H({n},{k},{parts})"))
        }
        CaseTag::AllSingleEdges => (complete(e)?, format!("K_{e} ∇ T_{{{},{parts}}}", n - e)),
        _ => (empty(e)?, format!("E_{e} ∇ T_{{{},{parts}}}", n - e)),
    };
    let d = ApexJoinDescriptor::new(apex, n, parts, label)?;
    let count = d.edge_count()?;
    if tag == CaseTag::AllEvenCycles {
        debug_assert_eq!(count, h_edges(n as u64, (f_bullet.n() / 2) as u64, parts as u64)?);
    }
    Ok(TuranPrediction { case_tag: tag, n, construction: Construction::ApexJoin(d), edge_count: Some(count), conjectural: true })
}

/// The extremal graph predicted for `(K_1 ∇ F•)°` when every cycle has
/// length at least `min_cycle_length >= 5`.
pub fn predict_ex_balloon(f_bullet: &Graph, n: usize, min_cycle_length: usize) -> Result<TuranPrediction> {
    if min_cycle_length < 5 {
        return Err(Error::Domain(format!(
            "cycle length {min_cycle_length} is outside the prediction's hypothesis (all lengths at least 5)"
        )));
    }
    predict(f_bullet, n, 2)
}

/// The extremal graph predicted for the decomposition family of
/// `(K_1 ∇ F•)°`: the one-part analogue of [`predict_ex_balloon`].
pub fn predict_ex_decomposition(f_bullet: &Graph, n: usize) -> Result<TuranPrediction> {
    predict(f_bullet, n, 1)
}

/// For `χ(F) >= 4`: `EX(n, F°) = EX(n, F)`, with no numeric value.
pub fn predict_chi4(n: usize) -> TuranPrediction {
    TuranPrediction {
        case_tag: CaseTag::ChiAtLeast4,
        n,
        construction: Construction::Symbolic { statement: format!("EX({n},F°) = EX({n},F)") },
        edge_count: None,
        conjectural: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn turan_values() {
        assert_eq!(turan_edges(5, 2).unwrap(), 6);
        assert_eq!(turan_edges(7, 3).unwrap(), 16);
        assert_eq!(turan_edges(9, 1).unwrap(), 0);
        assert_eq!(turan_edges(0, 3).unwrap(), 0);
        assert!(turan_edges(4, 0).is_err());
        for n in 0..60u64 {
            assert_eq!(turan_edges(n, 2).unwrap(), n * n / 4);
        }
    }

    #[test]
    fn chvatal_hanson_cases() {
        for n in 4..20 {
            assert_eq!(f_chvatal_hanson(n, 1, 1).unwrap(), 1);
        }
        for n in 8..20 {
            assert_eq!(f_chvatal_hanson(n, 2, 5).unwrap(), 10);
        }
        for n in 7..20 {
            assert_eq!(f_chvatal_hanson(n, 2, 3).unwrap(), 7);
        }
        // Δ >= 2ν + 1 with n <= ν + Δ: a K_{2ν+1} or a near-star structure
        assert_eq!(f_chvatal_hanson(3, 1, 5).unwrap(), 3);
        assert_eq!(f_chvatal_hanson(6, 1, 5).unwrap(), 5);
        assert!(matches!(f_chvatal_hanson(4, 2, 2), Err(Error::Precondition(_))));
        // a 4-vertex graph with ν = 1 has at most 3 edges
        assert_eq!(super::chvatal_hanson_cases(4, 1, 5), 4);
        assert_eq!(f_chvatal_hanson(4, 1, 5).unwrap(), 3);
    }

    #[test]
    fn limits() {
        assert_eq!(f_limit(1, 1).unwrap(), 1);
        assert_eq!(f_limit(2, 2).unwrap(), 6);
        assert_eq!(f_limit(3, 7).unwrap(), 21);
        // C_5 beats nothing larger: two triangles need six vertices
        assert_eq!(f_chvatal_hanson(5, 2, 2).unwrap(), 5);
        for nu in 1..5u64 {
            for delta in 1..9u64 {
                let from = f_stable_from(nu, delta).unwrap();
                assert!(from > 2 * nu);
                for n in from..=30 {
                    assert_eq!(f_chvatal_hanson(n, nu, delta).unwrap(), f_limit(nu, delta).unwrap(), "{n} {nu} {delta}");
                }
            }
        }
    }

    #[test]
    fn h_values() {
        assert_eq!(h_edges(20, 2, 2).unwrap(), 124);
        assert_eq!(h_edges(20, 2, 1).unwrap(), 52);
        assert_eq!(h_edges(13, 1, 1).unwrap(), 12);
        assert!(h_edges(4, 2, 1).is_err());
    }

    #[test]
    fn asymptotics() {
        assert_eq!(erdos_stone_asymptotic(17, 2).unwrap(), Ratio::from_integer(0));
        assert_eq!(erdos_stone_asymptotic(10, 3).unwrap(), Ratio::new(45, 2));
        assert_eq!(erdos_stone_asymptotic(100, 4).unwrap(), Ratio::from_integer(3300));
        assert!(erdos_stone_asymptotic(10, 1).is_err());
    }

    #[test]
    fn friendship() {
        assert_eq!(ex_friendship(2, 12).unwrap(), 37);
        assert_eq!(ex_friendship(1, 12).unwrap(), 36);
        assert_eq!(ex_friendship(3, 10).unwrap(), 25 + 6);
    }

    #[test]
    fn balloon_predictions() {
        let p = predict_ex_balloon(&cycle(4).unwrap(), 20, 5).unwrap();
        assert_eq!((p.case_tag, p.edge_count), (CaseTag::AllEvenCycles, Some(124)));
        let p = predict_ex_balloon(&matching(2).unwrap(), 20, 5).unwrap();
        assert_eq!((p.case_tag, p.edge_count), (CaseTag::AllSingleEdges, Some(118)));
        let p = predict_ex_balloon(&path(3).unwrap(), 20, 5).unwrap();
        assert_eq!((p.case_tag, p.edge_count), (CaseTag::MixedTrees, Some(117)));
        let mixed = disjoint_union(&cycle(4).unwrap(), &complete(2).unwrap()).unwrap();
        assert_eq!(classify(&mixed).unwrap(), CaseTag::MixedTrees);
        assert!(matches!(predict_ex_balloon(&path(3).unwrap(), 20, 3), Err(Error::Domain(_))));
        assert!(predict_ex_balloon(&cycle(5).unwrap(), 20, 5).is_err());
        assert!(predict_ex_balloon(&cycle(4).unwrap(), 4, 5).is_err());
    }

    #[test]
    fn decomposition_predictions() {
        assert_eq!(predict_ex_decomposition(&cycle(4).unwrap(), 30).unwrap().edge_count, Some(82));
        assert_eq!(predict_ex_decomposition(&matching(2).unwrap(), 30).unwrap().edge_count, Some(57));
        assert_eq!(predict_ex_decomposition(&star(4).unwrap(), 30).unwrap().edge_count, Some(81));
    }

    #[test]
    fn symbolic_round_trip() {
        let p = predict_chi4(40);
        assert_eq!(p.edge_count, None);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<TuranPrediction>(&text).unwrap(), p);
        let q = predict_ex_balloon(&cycle(4).unwrap(), 20, 5).unwrap();
        let text = serde_json::to_string(&q).unwrap();
        assert_eq!(serde_json::from_str::<TuranPrediction>(&text).unwrap(), q);
    }

    #[test]
    fn thresholds() {
        let p = predict_ex_balloon(&cycle(4).unwrap(), 20, 5).unwrap();
        assert!(p.conjectural);
        assert!(!p.clone().trusted_from(Some(20)).conjectural);
        assert!(p.trusted_from(Some(21)).conjectural);
    }
}
