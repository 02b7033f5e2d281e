//! Exact solvers for the seven domination-type parameters.
//!
//! Every solver is a cardinality sweep: for each candidate size (ascending for
//! minimum parameters, descending for the independence number) the subsets of
//! that size are enumerated in lexicographic order by depth-first search, and
//! the first set satisfying the predicate is returned. A branch is cut as soon
//! as adding *every* remaining candidate could not satisfy the (monotone)
//! covering part of the predicate, or the chosen vertices stop being
//! independent where independence is required.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParameterKind {
    /// γ: every vertex outside the set has a neighbour in it.
    Domination,
    /// γ_k: every vertex outside the set has at least `k` neighbours in it.
    KDomination(usize),
    /// γ×k: every closed neighbourhood meets the set in at least `k` vertices.
    KTupleDomination(usize),
    /// γₜ: every vertex, members included, has a neighbour in the set.
    TotalDomination,
    /// i: independent and dominating.
    IndependentDomination,
    /// α: independent (maximised).
    Independence,
    /// β: every edge has an endpoint in the set.
    VertexCover,
}

use ParameterKind::*;

impl ParameterKind {
    /// The seven parameters that appear in the double-domination bounds.
    pub const ALL: [ParameterKind; 7] = [
        Domination,
        KDomination(2),
        KTupleDomination(2),
        TotalDomination,
        IndependentDomination,
        Independence,
        VertexCover,
    ];

    pub const DOUBLE_DOMINATION: ParameterKind = KTupleDomination(2);

    pub fn is_maximization(self) -> bool {
        self == Independence
    }

    fn requires_independence(self) -> bool {
        matches!(self, Independence | IndependentDomination)
    }

    /// Short ASCII name used on the command line and in JSON.
    pub fn token(self) -> String {
        match self {
            Domination => "gamma".into(),
            KDomination(k) => format!("gamma{k}"),
            KTupleDomination(k) => format!("x{k}"),
            TotalDomination => "gammat".into(),
            IndependentDomination => "i".into(),
            Independence => "alpha".into(),
            VertexCover => "beta".into(),
        }
    }

    fn k(self) -> Option<usize> {
        match self {
            KDomination(k) | KTupleDomination(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domination => f.write_str("γ"),
            KDomination(k) => write!(f, "γ_{k}"),
            KTupleDomination(k) => write!(f, "γ×{k}"),
            TotalDomination => f.write_str("γt"),
            IndependentDomination => f.write_str("i"),
            Independence => f.write_str("α"),
            VertexCover => f.write_str("β"),
        }
    }
}

impl FromStr for ParameterKind {
    type Err = String;

    /// Accepts the ASCII tokens and the symbols (`γ`, `γ₂`, `γ_2`, `γ×2`, `γt`,
    /// `γₜ`, `α`, `β`).
    fn from_str(s: &str) -> Result<Self, String> {
        let ascii: String = s
            .trim()
            .chars()
            .map(|c| match c {
                '₀'..='₉' => char::from(b'0' + (c as u32 - '₀' as u32) as u8),
                'ₜ' => 't',
                _ => c,
            })
            .collect();
        let ascii = match ascii.as_str() {
            "α" => "alpha".to_string(),
            "β" => "beta".to_string(),
            a => match a.strip_prefix('γ') {
                Some(rest) => match rest.strip_prefix('×') {
                    Some(k) => format!("x{k}"),
                    None => format!("gamma{}", rest.trim_start_matches('_')),
                },
                None => a.to_string(),
            },
        };
        let parse_k = |rest: &str| {
            rest.parse::<usize>()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| format!("invalid k in parameter `{s}`"))
        };
        match ascii.as_str() {
            "gamma" => Ok(Domination),
            "gammat" => Ok(TotalDomination),
            "i" => Ok(IndependentDomination),
            "alpha" => Ok(Independence),
            "beta" => Ok(VertexCover),
            _ => {
                if let Some(rest) = ascii.strip_prefix("gamma") {
                    parse_k(rest).map(KDomination)
                } else if let Some(rest) = ascii.strip_prefix('x') {
                    parse_k(rest).map(KTupleDomination)
                } else {
                    Err(format!(
                        "unknown parameter `{s}` (expected gamma, gammaK, xK, gammat, i, alpha or beta)"
                    ))
                }
            }
        }
    }
}

impl Serialize for ParameterKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.token())
    }
}

impl<'de> Deserialize<'de> for ParameterKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// An optimal value together with a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterResult {
    pub kind: ParameterKind,
    pub value: usize,
    pub witness: VertexSet,
}

/// Does `set` meet the defining predicate of `kind` in `g`?
///
/// Total: sets with members outside the graph simply fail.
pub fn satisfies(kind: ParameterKind, g: &Graph, set: VertexSet) -> bool {
    if !set.is_subset(g.vertices()) {
        return false;
    }
    match kind {
        Independence => g.is_independent(set),
        IndependentDomination => g.is_independent(set) && covers(Domination, g, set),
        _ => covers(kind, g, set),
    }
}

/// The monotone (upward-closed) part of a predicate; `true` for the
/// independence number.
fn covers(kind: ParameterKind, g: &Graph, set: VertexSet) -> bool {
    let n = g.order();
    match kind {
        Domination | IndependentDomination => (0..n).all(|v| g.closed_neighbors(v).intersects(set)),
        KTupleDomination(k) => (0..n).all(|v| (g.closed_neighbors(v) & set).len() >= k),
        KDomination(k) => (g.vertices() - set)
            .iter()
            .all(|v| (g.neighbors(v) & set).len() >= k),
        TotalDomination => (0..n).all(|v| g.neighbors(v).intersects(set)),
        VertexCover => (g.vertices() - set)
            .iter()
            .all(|v| g.neighbors(v).is_subset(set)),
        Independence => true,
    }
}

/// Why no set at all satisfies `kind` on `g`, if that is the case.
pub(crate) fn infeasibility(kind: ParameterKind, g: &Graph) -> Option<String> {
    match kind {
        KTupleDomination(k) if g.min_degree() + 1 < k => {
            let v = (0..g.order()).min_by_key(|&v| g.degree(v)).unwrap_or(0);
            Some(if g.degree(v) == 0 {
                format!("isolated vertex present (vertex {v})")
            } else {
                format!(
                    "minimum degree {} is below k-1 = {} (vertex {v})",
                    g.degree(v),
                    k - 1
                )
            })
        }
        TotalDomination => (0..g.order())
            .find(|&v| g.degree(v) == 0)
            .map(|v| format!("isolated vertex present (vertex {v})")),
        _ => None,
    }
}

/// Shared argument validation for [`solve`] and the oracle.
pub(crate) fn validate(kind: ParameterKind, g: &Graph, required: VertexSet) -> Result<()> {
    if kind.k() == Some(0) {
        return Err(Error::InvalidK(kind));
    }
    g.check_set(required)?;
    if let Some(reason) = infeasibility(kind, g) {
        return Err(Error::InfeasibleParameter { kind, reason });
    }
    if kind.requires_independence() && !g.is_independent(required) {
        let u = required
            .iter()
            .find(|&u| g.neighbors(u).intersects(required))
            .unwrap_or(0);
        let v = (g.neighbors(u) & required).first().unwrap_or(0);
        return Err(Error::RequiredSetInfeasible {
            kind,
            reason: format!("required vertices {u} and {v} are adjacent"),
        });
    }
    Ok(())
}

/// Optimum of `kind` over all sets containing `required`, with the
/// lexicographically least optimal set as witness.
pub fn solve(kind: ParameterKind, g: &Graph, required: VertexSet) -> Result<ParameterResult> {
    validate(kind, g, required)?;
    let n = g.order();
    let base = required.len();
    let search = Search::new(kind, g, required);

    let found = if kind.is_maximization() {
        (base..=n).rev().find_map(|size| search.run(size - base))
    } else {
        (base..=n).find_map(|size| search.run(size - base))
    };
    match found {
        Some(witness) => Ok(ParameterResult {
            kind,
            value: witness.len(),
            witness,
        }),
        // Unreachable after `validate`: the whole vertex set (or `required`
        // itself for α) is always feasible.
        None => Err(Error::InfeasibleParameter {
            kind,
            reason: "no feasible set found".into(),
        }),
    }
}

/// [`solve`] without required vertices.
pub fn compute(kind: ParameterKind, g: &Graph) -> Result<ParameterResult> {
    solve(kind, g, VertexSet::EMPTY)
}

struct Search<'a> {
    kind: ParameterKind,
    g: &'a Graph,
    required: VertexSet,
    candidates: Vec<usize>,
    /// `suffix[i]` = candidates at positions `i..`.
    suffix: Vec<VertexSet>,
}

impl<'a> Search<'a> {
    fn new(kind: ParameterKind, g: &'a Graph, required: VertexSet) -> Self {
        let candidates = (g.vertices() - required).to_vec();
        let mut suffix = vec![VertexSet::EMPTY; candidates.len() + 1];
        for i in (0..candidates.len()).rev() {
            suffix[i] = suffix[i + 1].with(candidates[i]);
        }
        Search {
            kind,
            g,
            required,
            candidates,
            suffix,
        }
    }

    /// Lexicographically first feasible set made of `required` plus `extra`
    /// candidates.
    fn run(&self, extra: usize) -> Option<VertexSet> {
        if !covers(self.kind, self.g, self.required | self.suffix[0]) {
            return None;
        }
        self.dfs(0, self.required, extra)
    }

    fn dfs(&self, pos: usize, chosen: VertexSet, left: usize) -> Option<VertexSet> {
        if left == 0 {
            return satisfies(self.kind, self.g, chosen).then_some(chosen);
        }
        let independent = self.kind.requires_independence();
        for i in pos..=self.candidates.len() - left {
            let v = self.candidates[i];
            if independent && self.g.neighbors(v).intersects(chosen) {
                continue;
            }
            let next = chosen.with(v);
            // Later siblings see a subset of `next | suffix[i + 1]`, so by
            // monotonicity none of them can recover either.
            if !covers(self.kind, self.g, next | self.suffix[i + 1]) {
                return None;
            }
            if let Some(w) = self.dfs(i + 1, next, left - 1) {
                return Some(w);
            }
        }
        None
    }
}
