mod common;

use common::{arb_graph, arb_graph_no_isolated};
use domkit::families::{generate, FamilySpec};
use domkit::oracle::oracle_solve;
use domkit::solvers::{compute, satisfies, solve, ParameterKind};
use domkit::{Error, Graph, VertexSet};
use proptest::prelude::*;

use ParameterKind::*;

const X2: ParameterKind = KTupleDomination(2);

fn family(spec: FamilySpec) -> Graph {
    generate(spec).unwrap().0
}

fn check(kind: ParameterKind, g: &Graph, value: usize, witness: &[usize]) {
    let r = compute(kind, g).unwrap();
    assert_eq!(r.value, value, "{kind}");
    if !witness.is_empty() {
        assert_eq!(r.witness.to_vec(), witness, "{kind} witness");
    }
}

// Values and lexicographically least witnesses from an independent brute force.
#[test]
fn frozen_values() {
    let c4 = family(FamilySpec::Cycle { n: 4 });
    check(X2, &c4, 3, &[0, 1, 2]);

    let c5 = family(FamilySpec::Cycle { n: 5 });
    check(X2, &c5, 4, &[0, 1, 2, 3]);
    check(Domination, &c5, 2, &[0, 2]);

    let c6 = family(FamilySpec::Cycle { n: 6 });
    check(X2, &c6, 4, &[0, 1, 3, 4]);
    check(TotalDomination, &c6, 4, &[0, 1, 2, 3]);
    check(Domination, &c6, 2, &[0, 3]);

    let p12 = family(FamilySpec::Path { n: 12 });
    check(Domination, &p12, 4, &[1, 4, 7, 10]);
    check(TotalDomination, &p12, 6, &[1, 2, 5, 6, 9, 10]);
    check(X2, &p12, 9, &[]);

    let hp = family(FamilySpec::HPrime { r: 2 });
    check(Independence, &hp, 6, &[3, 4, 5, 6, 7, 8]);
    check(Domination, &hp, 3, &[0, 1, 2]);
    check(X2, &hp, 5, &[0, 1, 2, 3, 4]);

    check(
        KDomination(2),
        &family(FamilySpec::Star { n: 5 }),
        4,
        &[1, 2, 3, 4],
    );

    let fig = family(FamilySpec::Figure3);
    check(Domination, &fig, 2, &[0, 5]);
    check(KDomination(2), &fig, 4, &[1, 2, 6, 7]);
    check(X2, &fig, 6, &[0, 1, 2, 5, 6, 7]);
}

#[test]
fn infeasible_parameters() {
    let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
    let err = compute(X2, &g).unwrap_err();
    assert!(matches!(err, Error::InfeasibleParameter { .. }));
    assert!(
        err.to_string()
            .contains("isolated vertex present (vertex 2)"),
        "{err}"
    );
    assert!(compute(TotalDomination, &g).is_err());
    assert!(matches!(
        compute(KDomination(0), &g),
        Err(Error::InvalidK(_))
    ));
    // degree 1 everywhere cannot carry triple domination
    let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
    assert!(compute(KTupleDomination(3), &p2).is_err());
    assert_eq!(compute(Domination, &g).unwrap().value, 2);
}

#[test]
fn required_vertices() {
    let c6 = family(FamilySpec::Cycle { n: 6 });
    let r = solve(Domination, &c6, VertexSet::from([1])).unwrap();
    assert_eq!(r.witness.to_vec(), vec![1, 4]);
    let err = solve(Independence, &c6, VertexSet::from([0, 1])).unwrap_err();
    assert!(matches!(err, Error::RequiredSetInfeasible { .. }));
    assert!(matches!(
        solve(Domination, &c6, VertexSet::from([6])),
        Err(Error::VertexNotInSet { .. } | Error::VertexOutOfRange { .. })
    ));
}

// With every support vertex required the constrained optimum equals β and γ,
// except on graphs with a K2 component.
#[test]
fn supports_required_feasibility() {
    for n in 2..=6 {
        for g in common::all_graphs(n) {
            if g.has_isolated_vertex() {
                continue;
            }
            let supports = g.supports();
            let has_k2 =
                (0..n).any(|v| g.degree(v) == 1 && g.degree(g.neighbors(v).first().unwrap()) == 1);
            for kind in [VertexCover, Domination] {
                let constrained = solve(kind, &g, supports).unwrap();
                assert!(supports.is_subset(constrained.witness));
                if !has_k2 {
                    assert_eq!(
                        constrained.value,
                        compute(kind, &g).unwrap().value,
                        "{kind} {}",
                        g.to_graph6()
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_oracle(g in arb_graph(1, 9), kind in prop::sample::select(ParameterKind::ALL.to_vec())) {
        prop_assert_eq!(solve(kind, &g, VertexSet::EMPTY), oracle_solve(kind, &g, VertexSet::EMPTY));
    }

    #[test]
    fn solver_matches_oracle_with_required(
        g in arb_graph(1, 8),
        kind in prop::sample::select(ParameterKind::ALL.to_vec()),
        bits in any::<u8>(),
    ) {
        let required = VertexSet::from_bits(bits as u64) & g.vertices();
        let fast = solve(kind, &g, required);
        prop_assert_eq!(&fast, &oracle_solve(kind, &g, required));
        if let Ok(r) = fast {
            prop_assert!(required.is_subset(r.witness));
            prop_assert!(satisfies(kind, &g, r.witness));
        }
    }

    #[test]
    fn witnesses_satisfy_their_predicate(g in arb_graph(1, 11), kind in prop::sample::select(ParameterKind::ALL.to_vec())) {
        if let Ok(r) = compute(kind, &g) {
            prop_assert_eq!(r.value, r.witness.len());
            prop_assert!(satisfies(kind, &g, r.witness));
        }
    }

    #[test]
    fn parameter_chains(g in arb_graph(1, 10)) {
        let v = |k| compute(k, &g).unwrap().value;
        let (gamma, i, alpha, beta, gamma2) =
            (v(Domination), v(IndependentDomination), v(Independence), v(VertexCover), v(KDomination(2)));
        prop_assert!(gamma <= i && i <= alpha);
        prop_assert!(gamma <= gamma2);
        prop_assert_eq!(alpha + beta, g.order());
    }

    #[test]
    fn chains_without_isolated_vertices(g in arb_graph_no_isolated(2, 10)) {
        let v = |k| compute(k, &g).unwrap().value;
        let (gamma, gt, x2, gamma2) = (v(Domination), v(TotalDomination), v(X2), v(KDomination(2)));
        prop_assert!(gamma <= gt && gt <= 2 * gamma);
        prop_assert!(gt <= x2 && gamma2 <= x2);
    }
}
