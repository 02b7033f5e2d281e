//! Generators for the named graphs and families, each paired with the
//! parameter values known in closed form.
//!
//! Index layouts:
//! - `H(t, r)`: centre `u = 0`, its leaves `v_1..v_t = 1..t`, second centre
//!   `u′ = t+1`, its leaves `v′_1..v′_t = t+2..2t+1`; edges `uu′` and `v_i v′_i`
//!   for `i <= r`.
//! - `HPrime(r)`: `a_1, a_2, a_3 = 0, 1, 2` and `v_j = 2 + j` for `j = 1..3r`;
//!   `v_j` is adjacent to `a_i` and `a_{i+1}` where `i ≡ j (mod 3)`, taking
//!   `i ∈ {1,2,3}` and `a_4 = a_1`.
//! - `Figure3`: hub `0` with rim `1..4` (cycle 1-3-2-4-1), hub `5` with rim
//!   `6..9` (cycle 6-8-7-9-6), hubs adjacent.
//! - `Star(n)`: centre `0`, leaves `1..n`. `CompletePlusPendant(n)`: `K_n` on
//!   `0..n` plus vertex `n` attached to `0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::ParameterKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    H {
        t: usize,
        r: usize,
    },
    HPrime {
        r: usize,
    },
    Complete {
        n: usize,
    },
    /// `K_{1,n-1}` (order `n`).
    Star {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_n` plus a pendant edge (order `n + 1`).
    CompletePlusPendant {
        n: usize,
    },
    Figure3,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::H { t, r } => write!(f, "H({t},{r})"),
            FamilySpec::HPrime { r } => write!(f, "H'({r})"),
            FamilySpec::Complete { n } => write!(f, "K{n}"),
            FamilySpec::Star { n } => write!(f, "K1,{}", n.saturating_sub(1)),
            FamilySpec::Path { n } => write!(f, "P{n}"),
            FamilySpec::Cycle { n } => write!(f, "C{n}"),
            FamilySpec::CompletePlusPendant { n } => write!(f, "K{n}+pendant"),
            FamilySpec::Figure3 => f.write_str("figure3"),
        }
    }
}

/// Closed-form values attached to a family instance. Absent entries carry no
/// claim.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedValues {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub double_domination: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domination: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_domination: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_domination: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independent_domination: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_cover: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaves: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supports: Option<usize>,
}

impl ExpectedValues {
    /// Present parameter entries, in [`ParameterKind::ALL`] order.
    pub fn parameters(&self) -> Vec<(ParameterKind, usize)> {
        use ParameterKind::*;
        [
            (Domination, self.domination),
            (KDomination(2), self.two_domination),
            (KTupleDomination(2), self.double_domination),
            (TotalDomination, self.total_domination),
            (IndependentDomination, self.independent_domination),
            (Independence, self.independence),
            (VertexCover, self.vertex_cover),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect()
    }

    pub fn is_empty(&self) -> bool {
        self == &ExpectedValues::default()
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamilyParameters(msg));
        match *self {
            FamilySpec::H { t, r } if t < 2 || r < 1 || r + 1 > t => bad(format!(
                "H(t,r) needs t >= 2 and 1 <= r <= t-1, got t={t}, r={r}"
            )),
            FamilySpec::HPrime { r } if r < 2 => bad(format!("H'(r) needs r >= 2, got {r}")),
            FamilySpec::Complete { n } | FamilySpec::Path { n } if n < 1 => {
                bad(format!("{self} needs n >= 1"))
            }
            FamilySpec::Star { n } if n < 2 => bad(format!("star needs n >= 2, got {n}")),
            FamilySpec::Cycle { n } if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::CompletePlusPendant { n } if n < 2 => {
                bad(format!("complete-plus-pendant needs n >= 2, got {n}"))
            }
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::H { t, .. } => 2 * t + 2,
            FamilySpec::HPrime { r } => 3 * (r + 1),
            FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n } => n,
            FamilySpec::CompletePlusPendant { n } => n + 1,
            FamilySpec::Figure3 => 10,
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        match *self {
            FamilySpec::H { t, r } => {
                let u2 = t + 1;
                e.push((0, u2));
                for i in 1..=t {
                    e.push((0, i));
                    e.push((u2, u2 + i));
                }
                for i in 1..=r {
                    e.push((i, u2 + i));
                }
            }
            FamilySpec::HPrime { r } => {
                for j in 1..=3 * r {
                    let i = (j - 1) % 3; // a_i with i ≡ j (mod 3), 0-based
                    e.push((2 + j, i));
                    e.push((2 + j, (i + 1) % 3));
                }
            }
            FamilySpec::Complete { n } => clique(&mut e, n),
            FamilySpec::Star { n } => e.extend((1..n).map(|v| (0, v))),
            FamilySpec::Path { n } => e.extend((1..n).map(|v| (v - 1, v))),
            FamilySpec::Cycle { n } => e.extend((0..n).map(|v| (v, (v + 1) % n))),
            FamilySpec::CompletePlusPendant { n } => {
                clique(&mut e, n);
                e.push((0, n));
            }
            FamilySpec::Figure3 => {
                for hub in [0, 5] {
                    let [h1, h2, h3, h4] = [hub + 1, hub + 2, hub + 3, hub + 4];
                    e.extend([(hub, h1), (hub, h2), (hub, h3), (hub, h4)]);
                    e.extend([(h1, h3), (h3, h2), (h2, h4), (h4, h1)]);
                }
                e.push((0, 5));
            }
        }
        e
    }

    pub fn expected(&self) -> ExpectedValues {
        match *self {
            FamilySpec::H { t, r } => ExpectedValues {
                double_domination: Some(2 * t - r + 2),
                domination: Some(2),
                independent_domination: Some(t + 1),
                independence: Some(2 * t - r),
                vertex_cover: Some(r + 2),
                leaves: Some(2 * (t - r)),
                supports: Some(2),
                ..Default::default()
            },
            FamilySpec::HPrime { .. } => ExpectedValues {
                double_domination: Some(5),
                ..Default::default()
            },
            FamilySpec::Complete { n } if n >= 2 => ExpectedValues {
                double_domination: Some(2),
                domination: Some(1),
                independence: Some(1),
                ..Default::default()
            },
            FamilySpec::Star { n } => ExpectedValues {
                double_domination: Some(n),
                ..Default::default()
            },
            FamilySpec::Figure3 => ExpectedValues {
                double_domination: Some(6),
                domination: Some(2),
                two_domination: Some(4),
                ..Default::default()
            },
            _ => ExpectedValues::default(),
        }
    }
}

fn clique(e: &mut Vec<(usize, usize)>, n: usize) {
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
}

pub fn generate(spec: FamilySpec) -> Result<(Graph, ExpectedValues)> {
    spec.validate()?;
    let g = Graph::from_edge_list(spec.order(), &spec.edges())?;
    Ok((g, spec.expected()))
}

/// Instances covered by the family sweep: `H(t, r)` for `t <= 6` and
/// `H′(r)` for `r <= 4`.
pub fn sweep_specs() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for t in 2..=6 {
        for r in 1..t {
            out.push(FamilySpec::H { t, r });
        }
    }
    out.extend((2..=4).map(|r| FamilySpec::HPrime { r }));
    out
}
