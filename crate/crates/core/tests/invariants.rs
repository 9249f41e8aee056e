use csf_lab::graph::{parse_graph6, to_graph6, Graph};
use csf_lab::partition::Partition;
use csf_lab::reconstruct::{reconstruct_coefficient, SubgraphCensus};
use csf_lab::routes::{expand_in_forest_basis, expand_via_linear_solve, step, step_witnesses, ChromaticBasis, Strategy as Routing};
use csf_lab::symmetric::{csf, csf_coloring_oracle, stable_partition_census};
use csf_lab::upoly::{restricted_u, u_polynomial_forest, u_polynomial_general};
use num_bigint::BigUint;
use proptest::prelude::*;

fn from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| from_bits(n, bits))
}

/// Random labeled forest: each vertex after the first either starts a new
/// tree or attaches to an earlier vertex.
fn forest(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::option::weighted(0.85, any::<prop::sample::Index>()), n).prop_map(
            move |parents| {
                let edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .skip(1)
                    .filter_map(|(v, p)| p.map(|i| (i.index(v), v)))
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relabeling_keeps_key_and_csf((g, perm) in with_perm(8)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(g.key(), h.key());
        prop_assert_eq!(csf(&g).unwrap(), csf(&h).unwrap());
        prop_assert_eq!(to_graph6(&g.canonical()), to_graph6(&h.canonical()));
    }

    #[test]
    fn graph6_round_trip(n in 1usize..=16, bits in any::<u128>()) {
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits >> i & 1 == 1 {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn census_matches_coloring_sum(g in graph(5)) {
        prop_assert_eq!(csf(&g).unwrap(), csf_coloring_oracle(&g).unwrap());
    }

    #[test]
    fn every_step_conserves_csf(g in graph(7)) {
        let f = csf(&g).unwrap();
        for (v1, v2, v3) in step_witnesses(&g) {
            let s = step(&g, v1, v2, v3).unwrap();
            let rhs = csf(&s.target).unwrap()
                .add(&csf(&s.positive_remainder).unwrap()).unwrap()
                .sub(&csf(&s.negative_remainder).unwrap()).unwrap();
            prop_assert_eq!(&f, &rhs);
            let back = s.reversed();
            prop_assert!(back.is_valid());
            prop_assert_eq!(back.target, g);
        }
    }

    #[test]
    fn forest_expansions_agree(f in forest(7)) {
        for basis in [ChromaticBasis::star(f.n()).unwrap(), ChromaticBasis::path(f.n()).unwrap()] {
            let solved = expand_via_linear_solve(&f, &basis).unwrap();
            prop_assert!(solved.verify().is_ok());
            prop_assert!(solved.coeff(&f.part()) == num_rational::BigRational::from_integer(1.into()));
            for s in Routing::ALL {
                prop_assert_eq!(&expand_in_forest_basis(&f, &basis, s).unwrap().coeffs, &solved.coeffs);
            }
        }
    }

    #[test]
    fn u_polynomial_counts_edge_subsets(f in forest(9)) {
        let u = u_polynomial_forest(&f).unwrap();
        prop_assert_eq!(u.mass(), BigUint::from(1u32) << f.edge_count());
        prop_assert_eq!(u.coeff(&Partition::ones(f.n())), BigUint::from(1u32));
        prop_assert_eq!(restricted_u(&f, f.edge_count()).unwrap(), u.clone());
        prop_assert_eq!(u_polynomial_general(&f).unwrap().acyclic_part(), u);
    }

    #[test]
    fn reconstruction_matches_census(g in graph(6), k_offset in 0usize..6) {
        let n = g.n();
        let census = stable_partition_census(&g).unwrap();
        let k = 1 + k_offset % n;
        for (lambda, count) in census.iter() {
            if lambda.reduced_form().weight() <= k {
                let got = reconstruct_coefficient(&g, lambda, k).unwrap();
                prop_assert_eq!(got.to_string(), count.to_string());
            }
        }
    }

    #[test]
    fn subgraph_census_total(g in graph(8), k_offset in 0usize..8) {
        let k = 1 + k_offset % g.n();
        let c: SubgraphCensus = csf_lab::reconstruct::induced_subgraph_census(&g, k).unwrap();
        prop_assert_eq!(c.total(), num_integer::binomial(g.n() as u64, k as u64));
    }
}
