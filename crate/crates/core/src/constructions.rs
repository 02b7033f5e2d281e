//! Constructive upper bounds on the double domination number.
//!
//! Each builder starts from two witness sets `S` and `D` (plus forced
//! vertices, for the leaf bound), adds at most one vertex per demand raised by
//! the vertices of `S ∩ D`, and returns the resulting set `W′` together with
//! the size bound it must respect. [`ConstructionCertificate::validate`]
//! re-checks the result independently of how it was built.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{self, satisfies, ParameterKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionTheorem {
    /// γ×2 ≤ α + γ (no isolated vertex).
    AlphaGamma,
    /// γ×2 ≤ β + γ + |leaves| − |supports| (no isolated vertex, n ≥ 3).
    BetaGamma,
    /// γ×2 ≤ γ₂ + γ (no isolated vertex).
    Gamma2Gamma,
    /// γ×2 ≤ γₜ + γ (claw-free, no isolated vertex).
    TotalGamma,
}

impl ConstructionTheorem {
    pub const ALL: [ConstructionTheorem; 4] = [
        ConstructionTheorem::AlphaGamma,
        ConstructionTheorem::BetaGamma,
        ConstructionTheorem::Gamma2Gamma,
        ConstructionTheorem::TotalGamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionTheorem::AlphaGamma => "alpha-gamma",
            ConstructionTheorem::BetaGamma => "beta-gamma",
            ConstructionTheorem::Gamma2Gamma => "gamma2-gamma",
            ConstructionTheorem::TotalGamma => "total-gamma",
        }
    }

    /// Parameters whose witnesses play the roles of `S` and `D`.
    pub fn witness_kinds(self) -> (ParameterKind, ParameterKind) {
        use ParameterKind::*;
        match self {
            ConstructionTheorem::AlphaGamma => (Independence, Domination),
            ConstructionTheorem::BetaGamma => (VertexCover, Domination),
            ConstructionTheorem::Gamma2Gamma => (KDomination(2), Domination),
            ConstructionTheorem::TotalGamma => (TotalDomination, Domination),
        }
    }

    /// Graph-level applicability; `Err` names the failed condition.
    pub fn applicable(self, g: &Graph) -> Result<()> {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
            return Err(Error::PreconditionViolated(format!(
                "isolated vertex present (vertex {v})"
            )));
        }
        match self {
            ConstructionTheorem::BetaGamma if g.order() < 3 => Err(Error::PreconditionViolated(
                format!("order {} is below 3", g.order()),
            )),
            ConstructionTheorem::TotalGamma => match g.find_claw() {
                Some((c, [a, b, d])) => Err(Error::PreconditionViolated(format!(
                    "not claw-free (centre {c}, leaves {a}, {b}, {d})"
                ))),
                None => Ok(()),
            },
            _ => Ok(()),
        }
    }

    pub fn build(self, g: &Graph, s: VertexSet, d: VertexSet) -> Result<ConstructionCertificate> {
        match self {
            ConstructionTheorem::AlphaGamma => build_thm_alpha_gamma(g, s, d),
            ConstructionTheorem::BetaGamma => build_thm_beta_gamma(g, s, d),
            ConstructionTheorem::Gamma2Gamma => build_thm_gamma2_gamma(g, s, d),
            ConstructionTheorem::TotalGamma => build_thm_total_gamma(g, s, d),
        }
    }
}

impl fmt::Display for ConstructionTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionTheorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ConstructionTheorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                format!("unknown theorem `{s}` (expected alpha-gamma, beta-gamma, gamma2-gamma or total-gamma)")
            })
    }
}

/// A requirement "the result must meet `candidates`", raised by `owner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Demand {
    pub owner: usize,
    pub candidates: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionCertificate {
    pub theorem: ConstructionTheorem,
    pub input_s: VertexSet,
    pub input_d: VertexSet,
    /// Vertices included regardless of demands (the leaves, for the β bound).
    pub forced: VertexSet,
    pub result_w: VertexSet,
    pub size_bound: usize,
    /// `result_w ∖ (S ∪ D ∪ forced)`.
    pub augmented: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateFailure {
    #[error("vertex {0} has fewer than two members of W′ in its closed neighbourhood")]
    NotDoubleDominating(usize),
    #[error("vertex {0} has no neighbour in W′")]
    NotTotalDominating(usize),
    #[error("|W′| = {size} exceeds the bound {bound}")]
    ExceedsBound { size: usize, bound: usize },
    #[error("W′ does not contain the input sets")]
    MissingInputs,
}

impl ConstructionCertificate {
    /// Re-checks the certificate against `g`: `W′` contains its inputs, is
    /// double dominating, respects the size bound and, for the claw-free
    /// bound, is also total dominating.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), CertificateFailure> {
        let w = self.result_w;
        if !(self.input_s | self.input_d | self.forced).is_subset(w) {
            return Err(CertificateFailure::MissingInputs);
        }
        if let Some(v) = (0..g.order()).find(|&v| (g.closed_neighbors(v) & w).len() < 2) {
            return Err(CertificateFailure::NotDoubleDominating(v));
        }
        if self.theorem == ConstructionTheorem::TotalGamma {
            if let Some(v) = (0..g.order()).find(|&v| !g.neighbors(v).intersects(w)) {
                return Err(CertificateFailure::NotTotalDominating(v));
            }
        }
        if w.len() > self.size_bound {
            return Err(CertificateFailure::ExceedsBound {
                size: w.len(),
                bound: self.size_bound,
            });
        }
        Ok(())
    }
}

/// One greedy pass over `demands` in ascending owner order (stable for equal
/// owners): a demand already met is skipped, otherwise its smallest candidate
/// is added. At most one vertex is added per demand.
pub fn minimal_augmentation(g: &Graph, base: VertexSet, demands: &[Demand]) -> Result<VertexSet> {
    g.check_set(base)?;
    let mut ordered: Vec<&Demand> = demands.iter().collect();
    ordered.sort_by_key(|d| d.owner);
    let mut w = base;
    for d in ordered {
        g.check_set(d.candidates)?;
        let Some(first) = d.candidates.first() else {
            return Err(Error::EmptyDemand(d.owner));
        };
        if !d.candidates.intersects(w) {
            w.insert(first);
        }
    }
    Ok(w)
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(what()))
    }
}

fn check_inputs(theorem: ConstructionTheorem, g: &Graph, s: VertexSet, d: VertexSet) -> Result<()> {
    g.check_set(s)?;
    g.check_set(d)?;
    theorem.applicable(g)?;
    let (s_kind, d_kind) = theorem.witness_kinds();
    require(satisfies(s_kind, g, s), || {
        format!("S = {s} is not a valid {s_kind} set")
    })?;
    require(satisfies(d_kind, g, d), || {
        format!("D = {d} is not a valid {d_kind} set")
    })
}

fn certificate(
    theorem: ConstructionTheorem,
    g: &Graph,
    (s, d, forced): (VertexSet, VertexSet, VertexSet),
    demands: &[Demand],
    size_bound: usize,
) -> Result<ConstructionCertificate> {
    let base = s | d | forced;
    let result_w = minimal_augmentation(g, base, demands)?;
    Ok(ConstructionCertificate {
        theorem,
        input_s: s,
        input_d: d,
        forced,
        result_w,
        size_bound,
        augmented: result_w - base,
    })
}

/// `S` a maximum independent set, `D` a dominating set. Every `x ∈ S ∩ D`
/// demands a vertex of `epn(x, S ∪ D)` when that set is non-empty, and a
/// neighbour otherwise.
pub fn build_thm_alpha_gamma(
    g: &Graph,
    s: VertexSet,
    d: VertexSet,
) -> Result<ConstructionCertificate> {
    let theorem = ConstructionTheorem::AlphaGamma;
    check_inputs(theorem, g, s, d)?;
    // The private-neighbour clique argument needs S to be maximum, not just maximal.
    let alpha = solvers::compute(ParameterKind::Independence, g)?.value;
    require(s.len() == alpha, || {
        format!("S = {s} is not a maximum independent set (α = {alpha})")
    })?;

    let union = s | d;
    let demands = (s & d)
        .iter()
        .map(|x| {
            let private = g.epn(x, union)?;
            let candidates = if private.is_empty() {
                g.neighbors(x)
            } else {
                private
            };
            Ok(Demand {
                owner: x,
                candidates,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    certificate(
        theorem,
        g,
        (s, d, VertexSet::EMPTY),
        &demands,
        s.len() + d.len(),
    )
}

/// `S` a vertex cover and `D` a dominating set, both containing every support
/// vertex. All leaves are forced in; every `x ∈ (S ∩ D) ∖ supports` demands a
/// neighbour.
pub fn build_thm_beta_gamma(
    g: &Graph,
    s: VertexSet,
    d: VertexSet,
) -> Result<ConstructionCertificate> {
    let theorem = ConstructionTheorem::BetaGamma;
    check_inputs(theorem, g, s, d)?;
    let leaves = g.leaves();
    let supports = g.supports();
    require(supports.is_subset(s & d), || {
        format!(
            "support vertices {supports} are not all in S ∩ D = {}",
            s & d
        )
    })?;

    let demands: Vec<Demand> = ((s & d) - supports)
        .iter()
        .map(|x| Demand {
            owner: x,
            candidates: g.neighbors(x),
        })
        .collect();
    let bound = s.len() + d.len() + leaves.len() - supports.len();
    certificate(theorem, g, (s, d, leaves), &demands, bound)
}

/// `S` a 2-dominating set, `D` a dominating set. Every `x ∈ S ∩ D` demands a
/// neighbour.
pub fn build_thm_gamma2_gamma(
    g: &Graph,
    s: VertexSet,
    d: VertexSet,
) -> Result<ConstructionCertificate> {
    let theorem = ConstructionTheorem::Gamma2Gamma;
    check_inputs(theorem, g, s, d)?;
    let demands: Vec<Demand> = (s & d)
        .iter()
        .map(|x| Demand {
            owner: x,
            candidates: g.neighbors(x),
        })
        .collect();
    certificate(
        theorem,
        g,
        (s, d, VertexSet::EMPTY),
        &demands,
        s.len() + d.len(),
    )
}

/// `S` a total dominating set, `D` a dominating set, `g` claw-free. Every
/// `x ∈ S ∩ D` with a non-empty `epn(x, S ∪ D)` demands a vertex of it.
pub fn build_thm_total_gamma(
    g: &Graph,
    s: VertexSet,
    d: VertexSet,
) -> Result<ConstructionCertificate> {
    let theorem = ConstructionTheorem::TotalGamma;
    check_inputs(theorem, g, s, d)?;
    let union = s | d;
    let mut demands = Vec::new();
    for x in s & d {
        let private = g.epn(x, union)?;
        if !private.is_empty() {
            demands.push(Demand {
                owner: x,
                candidates: private,
            });
        }
    }
    certificate(
        theorem,
        g,
        (s, d, VertexSet::EMPTY),
        &demands,
        s.len() + d.len(),
    )
}

/// Runs a construction on solver witnesses: lexicographically least optimal
/// sets, with every support vertex required for the β bound.
pub fn certify(theorem: ConstructionTheorem, g: &Graph) -> Result<ConstructionCertificate> {
    theorem.applicable(g)?;
    let (s_kind, d_kind) = theorem.witness_kinds();
    let required = match theorem {
        ConstructionTheorem::BetaGamma => g.supports(),
        _ => VertexSet::EMPTY,
    };
    let s = solvers::solve(s_kind, g, required)?.witness;
    let d = solvers::solve(d_kind, g, required)?.witness;
    theorem.build(g, s, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        graph(n, &e)
    }

    #[test]
    fn augmentation_examples() {
        let g = complete(4);
        let dem = |owner, c: &[usize]| Demand {
            owner,
            candidates: c.iter().copied().collect(),
        };
        assert_eq!(
            minimal_augmentation(
                &g,
                VertexSet::from([0]),
                &[dem(0, &[1, 2]), dem(1, &[1, 3])]
            ),
            Ok(VertexSet::from([0, 1]))
        );
        assert_eq!(
            minimal_augmentation(&g, VertexSet::from([0]), &[dem(0, &[1]), dem(1, &[2])]),
            Ok(VertexSet::from([0, 1, 2]))
        );
        assert_eq!(
            minimal_augmentation(&g, VertexSet::EMPTY, &[]),
            Ok(VertexSet::EMPTY)
        );
        assert_eq!(
            minimal_augmentation(&g, VertexSet::EMPTY, &[dem(3, &[])]),
            Err(Error::EmptyDemand(3))
        );
    }

    #[test]
    fn augmentation_orders_demands_by_owner() {
        let g = complete(4);
        let demands = [
            Demand {
                owner: 2,
                candidates: VertexSet::from([2, 3]),
            },
            Demand {
                owner: 1,
                candidates: VertexSet::from([3]),
            },
        ];
        // owner 1 first adds 3, which already meets owner 2's demand
        assert_eq!(
            minimal_augmentation(&g, VertexSet::EMPTY, &demands),
            Ok(VertexSet::from([3]))
        );
    }

    #[test]
    fn alpha_gamma_on_complete_graph() {
        for n in 2..=6 {
            let g = complete(n);
            let c = build_thm_alpha_gamma(&g, VertexSet::from([0]), VertexSet::from([0])).unwrap();
            assert_eq!(c.result_w, VertexSet::from([0, 1]));
            assert_eq!(c.size_bound, 2);
            assert_eq!(c.validate(&g), Ok(()));
        }
    }

    #[test]
    fn alpha_gamma_c4_uses_neighbour_demand() {
        // S = D = {0,2}: 1 and 3 see both, so the private neighbourhoods are
        // empty and each x falls back to a neighbour; vertex 1 serves both.
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let sd = VertexSet::from([0, 2]);
        let c = build_thm_alpha_gamma(&c4, sd, sd).unwrap();
        assert_eq!(c.result_w, VertexSet::from([0, 1, 2]));
        assert_eq!(c.augmented, VertexSet::from([1]));
        assert_eq!(c.validate(&c4), Ok(()));
    }

    #[test]
    fn alpha_gamma_rejects_bad_inputs() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        // {0} is independent but not maximum (α(P4) = 2)
        assert!(matches!(
            build_thm_alpha_gamma(&p4, VertexSet::from([0]), VertexSet::from([1, 2])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            build_thm_alpha_gamma(&p4, VertexSet::from([0, 1]), VertexSet::from([1, 2])),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            build_thm_alpha_gamma(&p4, VertexSet::from([0, 2]), VertexSet::from([0])),
            Err(Error::PreconditionViolated(_))
        ));
        let iso = graph(3, &[(0, 1)]);
        assert!(matches!(
            build_thm_alpha_gamma(&iso, VertexSet::from([0, 2]), VertexSet::from([0, 2])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn beta_gamma_on_path() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let c = build_thm_beta_gamma(&p3, VertexSet::from([1]), VertexSet::from([1])).unwrap();
        assert_eq!(c.result_w, VertexSet::from([0, 1, 2]));
        assert_eq!(c.size_bound, 3);
        assert_eq!(c.forced, VertexSet::from([0, 2]));
        assert_eq!(c.validate(&p3), Ok(()));

        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        // supports {1,2}; S = {1,3} misses support 2
        assert!(matches!(
            build_thm_beta_gamma(&p4, VertexSet::from([1, 3]), VertexSet::from([1, 2])),
            Err(Error::PreconditionViolated(_))
        ));
        let k2 = complete(2);
        assert!(matches!(
            build_thm_beta_gamma(&k2, VertexSet::from([0, 1]), VertexSet::from([0, 1])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn gamma2_gamma_examples() {
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let c = build_thm_gamma2_gamma(&star, VertexSet::from([1, 2, 3, 4]), VertexSet::from([0]))
            .unwrap();
        assert_eq!(c.result_w, star.vertices());
        assert_eq!(c.validate(&star), Ok(()));

        let k2 = complete(2);
        let c = build_thm_gamma2_gamma(&k2, VertexSet::from([0, 1]), VertexSet::from([0])).unwrap();
        assert_eq!(c.result_w, VertexSet::from([0, 1]));
        assert_eq!(c.size_bound, 3);
    }

    #[test]
    fn total_gamma_examples() {
        let k3 = complete(3);
        let c = build_thm_total_gamma(&k3, VertexSet::from([0, 1]), VertexSet::from([0])).unwrap();
        assert_eq!(c.result_w, VertexSet::from([0, 1]));
        assert_eq!(c.validate(&k3), Ok(()));

        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let err = build_thm_total_gamma(&claw, VertexSet::from([0, 1]), VertexSet::from([0]))
            .unwrap_err();
        assert!(err.to_string().contains("not claw-free"), "{err}");
    }

    #[test]
    fn validate_catches_bad_certificates() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let mut c = build_thm_beta_gamma(&p3, VertexSet::from([1]), VertexSet::from([1])).unwrap();
        c.result_w = VertexSet::from([0, 1]);
        c.forced = VertexSet::EMPTY;
        assert_eq!(
            c.validate(&p3),
            Err(CertificateFailure::NotDoubleDominating(2))
        );
        let mut c = build_thm_beta_gamma(&p3, VertexSet::from([1]), VertexSet::from([1])).unwrap();
        c.size_bound = 2;
        assert!(matches!(
            c.validate(&p3),
            Err(CertificateFailure::ExceedsBound { .. })
        ));
    }

    #[test]
    fn certify_uses_solver_witnesses() {
        let c = certify(ConstructionTheorem::AlphaGamma, &complete(5)).unwrap();
        assert_eq!(c.result_w.len(), 2);
        assert_eq!(c.size_bound, 2);
        assert!(certify(
            ConstructionTheorem::TotalGamma,
            &graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])
        )
        .is_err());
        assert_eq!("gamma2-gamma".parse(), Ok(ConstructionTheorem::Gamma2Gamma));
    }
}
