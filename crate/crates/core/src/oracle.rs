//! Brute-force reference solver.
//!
//! Scans the entire power set with no pruning and evaluates each predicate
//! straight from its definition over adjacency lists, sharing no search or
//! predicate code with [`crate::solvers`]. Only argument validation (error
//! classification) is shared so that both report the same failures.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{self, ParameterKind, ParameterResult};

pub const ORACLE_MAX_ORDER: usize = 18;

pub fn oracle_solve(
    kind: ParameterKind,
    g: &Graph,
    required: VertexSet,
) -> Result<ParameterResult> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::GraphTooLargeForOracle(n));
    }
    solvers::validate(kind, g, required)?;

    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let required: Vec<usize> = required.to_vec();

    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !required.iter().all(|r| members.contains(r)) {
            continue;
        }
        if !naive_satisfies(kind, &adj, &members) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) if members.len() != b.len() => {
                (members.len() > b.len()) == kind.is_maximization()
            }
            Some(b) => members < *b,
        };
        if better {
            best = Some(members);
        }
    }

    let best = best.ok_or_else(|| Error::InfeasibleParameter {
        kind,
        reason: "no feasible set found".into(),
    })?;
    Ok(ParameterResult {
        kind,
        value: best.len(),
        witness: best.into_iter().collect(),
    })
}

fn naive_satisfies(kind: ParameterKind, adj: &[Vec<usize>], set: &[usize]) -> bool {
    use ParameterKind::*;
    let n = adj.len();
    let inside = |v: usize| set.contains(&v);
    let open_count = |v: usize| adj[v].iter().filter(|&&w| inside(w)).count();
    let independent = || set.iter().all(|&u| adj[u].iter().all(|&w| !inside(w)));

    match kind {
        Domination => (0..n).all(|v| inside(v) || open_count(v) >= 1),
        KDomination(k) => (0..n).all(|v| inside(v) || open_count(v) >= k),
        KTupleDomination(k) => (0..n).all(|v| open_count(v) + inside(v) as usize >= k),
        TotalDomination => (0..n).all(|v| open_count(v) >= 1),
        IndependentDomination => independent() && (0..n).all(|v| inside(v) || open_count(v) >= 1),
        Independence => independent(),
        VertexCover => (0..n).all(|u| adj[u].iter().all(|&w| inside(u) || inside(w))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_graphs() {
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        let r = oracle_solve(ParameterKind::Domination, &k1, VertexSet::EMPTY).unwrap();
        assert_eq!((r.value, r.witness), (1, VertexSet::from([0])));

        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let r = oracle_solve(ParameterKind::KTupleDomination(2), &k2, VertexSet::EMPTY).unwrap();
        assert_eq!(r.value, 2);
    }

    #[test]
    fn order_cap() {
        let g = Graph::from_edge_list(19, &[]).unwrap();
        assert_eq!(
            oracle_solve(ParameterKind::Domination, &g, VertexSet::EMPTY),
            Err(Error::GraphTooLargeForOracle(19))
        );
    }
}
