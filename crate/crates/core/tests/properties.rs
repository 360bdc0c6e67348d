mod common;

use proptest::prelude::*;
use roman_bondage::format::{parse, serialize};
use roman_bondage::{bondage_roman, gamma, gamma_roman, is_valid_rdf, Graph, SearchOptions};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn roman_between_gamma_and_twice_gamma(g in graph(10)) {
        let r = gamma_roman(&g).value;
        let d = gamma(&g).value;
        prop_assert!(d <= r && r <= 2 * d);
    }

    #[test]
    fn witness_is_valid_and_optimal_weight(g in graph(10)) {
        let res = gamma_roman(&g);
        prop_assert!(is_valid_rdf(&g, &res.witness).unwrap());
        prop_assert_eq!(res.witness.weight(), res.value);
    }

    #[test]
    fn edge_removal_never_lowers_roman(g in graph(9), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0);
        let e = g.edges()[pick.index(g.m())];
        let h = g.remove_edges([&e]).unwrap();
        prop_assert!(gamma_roman(&h).value >= gamma_roman(&g).value);
    }

    #[test]
    fn parse_serialize_round_trip(g in graph(16)) {
        prop_assert_eq!(parse(&serialize(&g)).unwrap(), g);
    }

    #[test]
    fn complement_involution_and_degrees(g in graph(16)) {
        let c = g.complement();
        prop_assert_eq!(&c.complement(), &g);
        for v in 0..g.n() {
            prop_assert_eq!(g.degree(v) + c.degree(v), g.n() - 1);
        }
    }

    #[test]
    fn neighborhood_sizes(g in graph(16)) {
        for x in 0..g.n() {
            prop_assert_eq!(g.incident_edges(x).unwrap().len(), g.degree(x));
            prop_assert_eq!(g.closed_neighborhood(x).unwrap().len(), g.degree(x) + 1);
        }
    }

    #[test]
    fn remove_then_union_restores(g in graph(12), keep in any::<u64>()) {
        let b: roman_bondage::EdgeSet = g
            .edges()
            .into_iter()
            .enumerate()
            .filter(|(k, _)| keep >> (k % 64) & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        let h = g.remove_edges(b.iter()).unwrap();
        prop_assert_eq!(h.m(), g.m() - b.len());
        let back = Graph::from_edges(g.n(), h.edge_set().union(&b).iter().copied()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn bondage_witness_raises(g in graph(7)) {
        prop_assume!(g.m() > 0 && g.m() <= 12);
        if let Ok(r) = bondage_roman(&g, &SearchOptions::default()) {
            prop_assert_eq!(r.witness.len(), r.value);
            let h = g.remove_edges(r.witness.iter()).unwrap();
            prop_assert_eq!(gamma_roman(&h).value, r.raised);
            prop_assert!(r.raised > r.base);
        }
    }
}
