//! Pairwise comparison of a newer bound against the older one it refines.

use serde::Serialize;

use super::{ParamCache, TheoremId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::ParameterKind;

/// `(new, old)` pairs.
pub const IMPROVEMENT_PAIRS: [(TheoremId, TheoremId); 4] = [
    (TheoremId::T6MinAlpha, TheoremId::T4OrderDomination),
    (TheoremId::T8Gamma2Gamma, TheoremId::T7TwoDomination),
    (TheoremId::T10ClawTotalGamma, TheoremId::T9ClawMin),
    (TheoremId::T2AlphaGamma, TheoremId::T1AlphaI),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Improvement {
    pub new: TheoremId,
    pub old: TheoremId,
    pub rhs_new: i64,
    pub rhs_old: i64,
    /// `rhs_new <= rhs_old`.
    pub improves: bool,
    /// `rhs_new < rhs_old`.
    pub strict: bool,
    /// Whether the known sufficient condition for improvement holds on this
    /// graph: `n >= 6` with α away from `n/2` (T6/T4), `γ <= γ₂ − 2`
    /// (T8/T7), and unconditionally for T10/T9 and T2/T1.
    pub condition: bool,
    /// Whether `condition` promises a strict improvement (T6/T4, T8/T7) or a
    /// non-strict one (T10/T9, T2/T1).
    pub condition_is_strict: bool,
}

impl Improvement {
    /// The promise made by `condition`, if it holds, is kept.
    pub fn consistent(&self) -> bool {
        !self.condition
            || if self.condition_is_strict {
                self.strict
            } else {
                self.improves
            }
    }
}

/// Compares one `(new, old)` pair from [`IMPROVEMENT_PAIRS`] on `g`.
pub fn audit_pair(new: TheoremId, old: TheoremId, g: &Graph) -> Result<Improvement> {
    audit_with(&ParamCache::new(g), new, old)
}

fn audit_with(cache: &ParamCache<'_>, new: TheoremId, old: TheoremId) -> Result<Improvement> {
    use ParameterKind::*;
    use TheoremId::*;
    let g = cache.graph();
    if !IMPROVEMENT_PAIRS.contains(&(new, old)) || !new.applies_to(g) || !old.applies_to(g) {
        return Err(Error::PairNotApplicable { new, old });
    }
    let rhs_new = cache.check(new)?.rhs;
    let rhs_old = cache.check(old)?.rhs;
    let (condition, condition_is_strict) = match new {
        T6MinAlpha => {
            let n = g.order() as i64;
            let alpha = cache.get(Independence)?.value as i64;
            // n even: α ∉ {n/2 − 1, n/2, n/2 + 1}; n odd: α ∉ {(n ± 1)/2, (n ± 3)/2}
            let near_half = if n % 2 == 0 {
                (2 * alpha - n).abs() <= 2
            } else {
                (2 * alpha - n).abs() <= 3
            };
            (n >= 6 && !near_half, true)
        }
        T8Gamma2Gamma => {
            let gamma = cache.get(Domination)?.value;
            let gamma2 = cache.get(KDomination(2))?.value;
            (gamma + 2 <= gamma2, true)
        }
        _ => (true, false),
    };
    Ok(Improvement {
        new,
        old,
        rhs_new,
        rhs_old,
        improves: rhs_new <= rhs_old,
        strict: rhs_new < rhs_old,
        condition,
        condition_is_strict,
    })
}

/// Every pair from [`IMPROVEMENT_PAIRS`] whose two theorems both apply to `g`.
pub fn improvement_audit(g: &Graph) -> Result<Vec<Improvement>> {
    let cache = ParamCache::new(g);
    IMPROVEMENT_PAIRS
        .iter()
        .filter(|(new, old)| new.applies_to(g) && old.applies_to(g))
        .map(|&(new, old)| audit_with(&cache, new, old))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use TheoremId::*;

    #[test]
    fn star_two_domination_gap() {
        let (g, _) = generate(FamilySpec::Star { n: 6 }).unwrap();
        let a = audit_pair(T8Gamma2Gamma, T7TwoDomination, &g).unwrap();
        assert_eq!((a.rhs_new, a.rhs_old), (6, 9));
        assert!(a.strict && a.condition && a.consistent());
    }

    #[test]
    fn inapplicable_pair() {
        let (g, _) = generate(FamilySpec::Star { n: 5 }).unwrap();
        assert!(matches!(
            audit_pair(T10ClawTotalGamma, T9ClawMin, &g),
            Err(Error::PairNotApplicable { .. })
        ));
        assert!(matches!(
            audit_pair(T1AlphaI, T2AlphaGamma, &g),
            Err(Error::PairNotApplicable { .. })
        ));
        // only T8/T7 and T2/T1 apply to a star
        let all = improvement_audit(&g).unwrap();
        assert_eq!(all.len(), 2);
    }
}
