mod common;

use domkit::constructions::{
    build_thm_alpha_gamma, build_thm_total_gamma, certify, minimal_augmentation,
    ConstructionTheorem, Demand,
};
use domkit::families::{generate, FamilySpec};
use domkit::solvers::{compute, satisfies, ParameterKind};
use domkit::{Error, Graph, VertexSet};

use ConstructionTheorem::*;

fn family(spec: FamilySpec) -> Graph {
    generate(spec).unwrap().0
}

/// Smallest double dominating superset of `base`, by brute force.
fn min_double_dominating_superset(g: &Graph, base: VertexSet) -> usize {
    (0u64..1 << g.order())
        .map(VertexSet::from_bits)
        .filter(|w| base.is_subset(*w) && satisfies(ParameterKind::DOUBLE_DOMINATION, g, *w))
        .map(|w| w.len())
        .min()
        .unwrap()
}

#[test]
fn cycle4_alpha_gamma_without_private_neighbours() {
    let c4 = family(FamilySpec::Cycle { n: 4 });
    let s = VertexSet::from([0, 2]);
    // S ∪ D = {0, 2} dominates 1 and 3 twice, so neither member has a private neighbour.
    assert!(c4.epn(0, s).unwrap().is_empty());
    let cert = build_thm_alpha_gamma(&c4, s, s).unwrap();
    assert_eq!(cert.result_w, VertexSet::from([0, 1, 2]));
    assert_eq!(cert.result_w.len(), min_double_dominating_superset(&c4, s));
    cert.validate(&c4).unwrap();
}

#[test]
fn cycle6_total_gamma() {
    let c6 = family(FamilySpec::Cycle { n: 6 });
    let cert = certify(TotalGamma, &c6).unwrap();
    assert_eq!(cert.input_s, VertexSet::from([0, 1, 2, 3]));
    assert_eq!(cert.input_d, VertexSet::from([0, 3]));
    cert.validate(&c6).unwrap();
    assert!(cert.result_w.len() <= 6);
    assert!(
        cert.result_w.len()
            >= compute(ParameterKind::DOUBLE_DOMINATION, &c6)
                .unwrap()
                .value
    );
}

#[test]
fn figure3_gamma2_gamma_is_tight() {
    let g = family(FamilySpec::Figure3);
    let cert = certify(Gamma2Gamma, &g).unwrap();
    cert.validate(&g).unwrap();
    assert_eq!(cert.size_bound, 6);
    assert_eq!(cert.result_w.len(), 6);
}

#[test]
fn h_family_certificates() {
    let h42 = family(FamilySpec::H { t: 4, r: 2 });
    let cert = certify(AlphaGamma, &h42).unwrap();
    cert.validate(&h42).unwrap();
    assert_eq!((cert.size_bound, cert.result_w.len()), (8, 8));

    let h51 = family(FamilySpec::H { t: 5, r: 1 });
    let cert = certify(BetaGamma, &h51).unwrap();
    cert.validate(&h51).unwrap();
    assert_eq!(cert.size_bound, 11);
    assert_eq!(cert.forced, h51.leaves());
}

#[test]
fn stars_need_every_vertex() {
    for n in 3..=8 {
        let g = family(FamilySpec::Star { n });
        for theorem in [AlphaGamma, BetaGamma, Gamma2Gamma] {
            let cert = certify(theorem, &g).unwrap();
            cert.validate(&g).unwrap();
            assert_eq!(cert.result_w, g.vertices(), "{theorem} on K1,{}", n - 1);
        }
        if n >= 4 {
            assert!(matches!(
                certify(TotalGamma, &g),
                Err(Error::PreconditionViolated(_))
            ));
        }
    }
}

#[test]
fn preconditions() {
    let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
    for theorem in ConstructionTheorem::ALL {
        let err = certify(theorem, &g).unwrap_err();
        assert!(err.to_string().contains("isolated vertex"), "{err}");
    }
    let p3 = family(FamilySpec::Path { n: 3 });
    // {1} is independent but not maximum
    assert!(matches!(
        build_thm_alpha_gamma(&p3, VertexSet::from([1]), VertexSet::from([1])),
        Err(Error::PreconditionViolated(_))
    ));
    let star = family(FamilySpec::Star { n: 4 });
    assert!(build_thm_total_gamma(&star, VertexSet::from([0, 1]), VertexSet::from([0])).is_err());
}

#[test]
fn augmentation_picks_smallest_candidate_per_unmet_demand() {
    let g = family(FamilySpec::Cycle { n: 6 });
    let demands = [
        Demand {
            owner: 3,
            candidates: VertexSet::from([2, 4]),
        },
        Demand {
            owner: 0,
            candidates: VertexSet::from([1, 5]),
        },
        Demand {
            owner: 1,
            candidates: VertexSet::from([0, 2]),
        },
    ];
    // owner 0 adds 1; owner 1 is met by base vertex 0; owner 3 adds 2
    let w = minimal_augmentation(&g, VertexSet::from([0, 3]), &demands).unwrap();
    assert_eq!(w, VertexSet::from([0, 1, 2, 3]));
    let empty = [Demand {
        owner: 0,
        candidates: VertexSet::EMPTY,
    }];
    assert!(matches!(
        minimal_augmentation(&g, VertexSet::EMPTY, &empty),
        Err(Error::EmptyDemand(0))
    ));
}

#[test]
fn certificates_are_deterministic() {
    for spec in [
        FamilySpec::H { t: 5, r: 2 },
        FamilySpec::HPrime { r: 3 },
        FamilySpec::Figure3,
    ] {
        let g = family(spec);
        for theorem in ConstructionTheorem::ALL {
            if theorem.applicable(&g).is_ok() {
                assert_eq!(certify(theorem, &g).unwrap(), certify(theorem, &g).unwrap());
            }
        }
    }
}

// The private neighbours demanded by the α bound form cliques, so the
// subgraph induced by W′ has no isolated vertex.
#[test]
fn alpha_gamma_result_induces_no_isolated_vertex() {
    for n in 3..=6 {
        for g in common::all_graphs(n) {
            if AlphaGamma.applicable(&g).is_err() {
                continue;
            }
            let w = certify(AlphaGamma, &g).unwrap().result_w;
            for v in w {
                assert!(
                    g.neighbors(v).intersects(w),
                    "{v} isolated in W′ = {w} on {}",
                    g.to_graph6()
                );
            }
        }
    }
}

#[test]
#[ignore = "every labeled graph on 7 vertices; run with --release"]
fn certificates_on_order_7() {
    for g in common::all_graphs(7) {
        for theorem in ConstructionTheorem::ALL {
            if theorem.applicable(&g).is_ok() {
                let cert = certify(theorem, &g).unwrap();
                assert_eq!(cert.validate(&g), Ok(()), "{theorem} on {}", g.to_graph6());
            }
        }
    }
}

#[test]
#[ignore = "every labeled graph on 7 vertices; run with --release"]
fn private_neighbourhoods_of_maximum_independent_sets_on_order_7() {
    for g in common::all_graphs(7) {
        let alpha = compute(ParameterKind::Independence, &g).unwrap().value;
        for s in (0u64..1 << 7).map(VertexSet::from_bits) {
            if s.len() == alpha && g.is_independent(s) {
                for u in s {
                    assert!(
                        g.is_clique(g.epn(u, s).unwrap()),
                        "{u} in {s} on {}",
                        g.to_graph6()
                    );
                }
            }
        }
    }
}
