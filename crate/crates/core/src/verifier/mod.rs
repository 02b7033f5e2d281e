//! Evaluation of the double-domination bounds on concrete graphs, with
//! applicability gating, plus exhaustive and randomized scans.

mod audit;
mod scan;

pub use audit::{audit_pair, improvement_audit, Improvement, IMPROVEMENT_PAIRS};
pub use scan::{
    family_sweep, prufer_tree, random_graph, run_with_jobs, scan_exhaustive, scan_graphs,
    scan_random, scan_random_trees, EdgeProb, FamilyOutcome, FamilySweepReport, ScanMeta,
    ScanReport, TheoremStats, EXHAUSTIVE_MAX_ORDER, RANDOM_MAX_ORDER,
};

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{self, ParameterKind, ParameterResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// γ×2 ≤ α + i, no isolated vertex.
    T1AlphaI,
    /// γ×2 ≤ α + γ, no isolated vertex.
    T2AlphaGamma,
    /// γ×2 ≤ β + γ + |leaves| − |supports|, no isolated vertex, n ≥ 3.
    T3BetaGammaLeaf,
    /// γ×2 ≤ ⌊n/2⌋ + γ − 1 (without the −1 for n = 3, 5), δ ≥ 2.
    T4OrderDomination,
    /// α + β = n, every graph.
    T5Gallai,
    /// γ×2 ≤ min{α, n − α} + γ, δ ≥ 2.
    T6MinAlpha,
    /// γ×2 ≤ 2γ₂ − 1, no isolated vertex.
    T7TwoDomination,
    /// γ×2 ≤ 2γ₂ − 2 for trees of order at least 4.
    T7tTreeVariant,
    /// γ×2 ≤ γ₂ + γ, no isolated vertex.
    T8Gamma2Gamma,
    /// γ×2 ≤ min{2γₜ, 3γ}, claw-free without isolated vertex.
    T9ClawMin,
    /// γ×2 ≤ γₜ + γ, claw-free without isolated vertex.
    T10ClawTotalGamma,
}

use TheoremId::*;

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        T1AlphaI,
        T2AlphaGamma,
        T3BetaGammaLeaf,
        T4OrderDomination,
        T5Gallai,
        T6MinAlpha,
        T7TwoDomination,
        T7tTreeVariant,
        T8Gamma2Gamma,
        T9ClawMin,
        T10ClawTotalGamma,
    ];

    pub fn label(self) -> &'static str {
        match self {
            T1AlphaI => "T1",
            T2AlphaGamma => "T2",
            T3BetaGammaLeaf => "T3",
            T4OrderDomination => "T4",
            T5Gallai => "T5",
            T6MinAlpha => "T6",
            T7TwoDomination => "T7",
            T7tTreeVariant => "T7t",
            T8Gamma2Gamma => "T8",
            T9ClawMin => "T9",
            T10ClawTotalGamma => "T10",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            T1AlphaI => "γ×2 ≤ α + i",
            T2AlphaGamma => "γ×2 ≤ α + γ",
            T3BetaGammaLeaf => "γ×2 ≤ β + γ + |L| − |S|",
            T4OrderDomination => "γ×2 ≤ ⌊n/2⌋ + γ − 1 (n ≠ 3, 5)",
            T5Gallai => "α + β = n",
            T6MinAlpha => "γ×2 ≤ min{α, n − α} + γ",
            T7TwoDomination => "γ×2 ≤ 2γ₂ − 1",
            T7tTreeVariant => "γ×2(T) ≤ 2γ₂(T) − 2",
            T8Gamma2Gamma => "γ×2 ≤ γ₂ + γ",
            T9ClawMin => "γ×2 ≤ min{2γt, 3γ}",
            T10ClawTotalGamma => "γ×2 ≤ γt + γ",
        }
    }

    pub(crate) fn index(self) -> usize {
        TheoremId::ALL.iter().position(|&t| t == self).unwrap()
    }

    /// Whether the theorem's hypotheses hold on `g`.
    pub fn applies_to(self, g: &Graph) -> bool {
        let n = g.order();
        let isolate_free = !g.has_isolated_vertex();
        match self {
            T1AlphaI | T2AlphaGamma | T7TwoDomination | T8Gamma2Gamma => isolate_free,
            T3BetaGammaLeaf => isolate_free && n >= 3,
            T4OrderDomination | T6MinAlpha => g.min_degree() >= 2,
            T5Gallai => true,
            T7tTreeVariant => n >= 4 && g.is_tree(),
            T9ClawMin | T10ClawTotalGamma => isolate_free && g.is_claw_free(),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// One theorem evaluated on one graph. For inapplicable theorems the numeric
/// fields are zero and no witnesses are recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub id: TheoremId,
    pub applicable: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub tight: bool,
    pub witnesses: BTreeMap<ParameterKind, VertexSet>,
}

impl TheoremCheck {
    /// An applicable inequality with `lhs > rhs`, or a broken equality.
    pub fn violated(&self) -> bool {
        self.applicable
            && match self.id {
                T5Gallai => self.lhs != self.rhs,
                _ => self.lhs > self.rhs,
            }
    }
}

/// Lazily computed parameters of one graph; each is solved at most once.
pub struct ParamCache<'g> {
    g: &'g Graph,
    slots: [OnceCell<Result<ParameterResult>>; 7],
}

impl<'g> ParamCache<'g> {
    pub fn new(g: &'g Graph) -> Self {
        ParamCache {
            g,
            slots: Default::default(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn get(&self, kind: ParameterKind) -> Result<&ParameterResult> {
        let slot = ParameterKind::ALL
            .iter()
            .position(|&k| k == kind)
            .expect("only the seven bound parameters are cached");
        self.slots[slot]
            .get_or_init(|| solvers::compute(kind, self.g))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn value(&self, kind: ParameterKind) -> Result<i64> {
        self.get(kind).map(|r| r.value as i64)
    }

    pub fn check(&self, id: TheoremId) -> Result<TheoremCheck> {
        use ParameterKind::*;
        let g = self.g;
        if !id.applies_to(g) {
            return Ok(TheoremCheck {
                id,
                applicable: false,
                lhs: 0,
                rhs: 0,
                slack: 0,
                tight: false,
                witnesses: BTreeMap::new(),
            });
        }
        let n = g.order() as i64;
        let x2 = KTupleDomination(2);

        let (lhs_kinds, rhs_kinds): (&[ParameterKind], &[ParameterKind]) = match id {
            T1AlphaI => (&[x2], &[Independence, IndependentDomination]),
            T2AlphaGamma => (&[x2], &[Independence, Domination]),
            T3BetaGammaLeaf => (&[x2], &[VertexCover, Domination]),
            T4OrderDomination => (&[x2], &[Domination]),
            T5Gallai => (&[Independence, VertexCover], &[]),
            T6MinAlpha => (&[x2], &[Independence, Domination]),
            T7TwoDomination | T7tTreeVariant => (&[x2], &[KDomination(2)]),
            T8Gamma2Gamma => (&[x2], &[KDomination(2), Domination]),
            T9ClawMin | T10ClawTotalGamma => (&[x2], &[TotalDomination, Domination]),
        };

        let lhs = match id {
            T5Gallai => self.value(Independence)? + self.value(VertexCover)?,
            _ => self.value(x2)?,
        };
        let rhs = match id {
            T1AlphaI => self.value(Independence)? + self.value(IndependentDomination)?,
            T2AlphaGamma => self.value(Independence)? + self.value(Domination)?,
            T3BetaGammaLeaf => {
                self.value(VertexCover)? + self.value(Domination)? + g.leaves().len() as i64
                    - g.supports().len() as i64
            }
            T4OrderDomination => {
                let correction = if n == 3 || n == 5 { 0 } else { 1 };
                n / 2 + self.value(Domination)? - correction
            }
            T5Gallai => n,
            T6MinAlpha => {
                let alpha = self.value(Independence)?;
                alpha.min(n - alpha) + self.value(Domination)?
            }
            T7TwoDomination => 2 * self.value(KDomination(2))? - 1,
            T7tTreeVariant => 2 * self.value(KDomination(2))? - 2,
            T8Gamma2Gamma => self.value(KDomination(2))? + self.value(Domination)?,
            T9ClawMin => (2 * self.value(TotalDomination)?).min(3 * self.value(Domination)?),
            T10ClawTotalGamma => self.value(TotalDomination)? + self.value(Domination)?,
        };

        let mut witnesses = BTreeMap::new();
        for &k in lhs_kinds.iter().chain(rhs_kinds) {
            witnesses.insert(k, self.get(k)?.witness);
        }
        Ok(TheoremCheck {
            id,
            applicable: true,
            lhs,
            rhs,
            slack: rhs - lhs,
            tight: lhs == rhs,
            witnesses,
        })
    }
}

pub fn check_theorem(id: TheoremId, g: &Graph) -> Result<TheoremCheck> {
    ParamCache::new(g).check(id)
}

/// Every theorem on `g`, sharing one solver call per parameter.
pub fn check_all(g: &Graph) -> Result<Vec<TheoremCheck>> {
    let cache = ParamCache::new(g);
    TheoremId::ALL.iter().map(|&id| cache.check(id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn family(spec: FamilySpec) -> Graph {
        generate(spec).unwrap().0
    }

    #[test]
    fn c5_is_tight_for_the_order_bound() {
        let c = check_theorem(T4OrderDomination, &family(FamilySpec::Cycle { n: 5 })).unwrap();
        assert!(c.applicable);
        assert_eq!((c.lhs, c.rhs), (4, 4));
        assert!(c.tight);
    }

    #[test]
    fn star_is_not_claw_free() {
        let c = check_theorem(T9ClawMin, &family(FamilySpec::Star { n: 4 })).unwrap();
        assert!(!c.applicable);
        assert!(!c.violated());
    }

    #[test]
    fn k1_only_gallai_applies() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        let checks = check_all(&g).unwrap();
        let applicable: Vec<_> = checks
            .iter()
            .filter(|c| c.applicable)
            .map(|c| c.id)
            .collect();
        assert_eq!(applicable, vec![T5Gallai]);
        let t5 = &checks[T5Gallai.index()];
        assert_eq!((t5.lhs, t5.rhs), (1, 1));
    }

    #[test]
    fn h42_tightness() {
        let checks = check_all(&family(FamilySpec::H { t: 4, r: 2 })).unwrap();
        let t1 = &checks[T1AlphaI.index()];
        let t2 = &checks[T2AlphaGamma.index()];
        let t3 = &checks[T3BetaGammaLeaf.index()];
        assert!(t2.tight && t3.tight);
        assert_eq!(t1.slack, 3);
        assert_eq!(t2.witnesses.len(), 3);
    }

    #[test]
    fn gallai_violation_detection() {
        let mut c = check_theorem(T5Gallai, &family(FamilySpec::Path { n: 3 })).unwrap();
        assert!(!c.violated());
        c.lhs -= 1;
        assert!(c.violated());
    }

    #[test]
    fn ids_parse() {
        for id in TheoremId::ALL {
            assert_eq!(id.label().parse(), Ok(id));
        }
        assert_eq!("t7T".parse(), Ok(T7tTreeVariant));
    }
}
