mod common;

use interval_total::bounds::{bound_report, DIAMETER_UPPER, SHORTEST_PATH_UPPER};
use interval_total::coloring::{check_continuity, verify_total_proper};
use interval_total::search::{
    brute_force_verifier_oracle, exists_coloring, SearchConfig, Verdict,
};
use interval_total::transform::{build_auxiliary, lift_coloring, unlift, verify_interval_edge};
use interval_total::{invert, verify_interval_total, Certificate, Color, Graph, TotalColoring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=6, 0.0f64..0.7, any::<u64>())
        .prop_map(|(n, p, seed)| common::random_connected_graph(n, p, seed))
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8, 0.0f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| common::random_graph(n, p, seed))
}

/// A witness for some `t` near the bottom of the range, if one turns up
/// within a small budget.
fn some_witness(g: &Graph, extra: Color, seed: u64) -> Option<TotalColoring> {
    let cfg = SearchConfig {
        budget: Some(20_000),
        value_order_seed: Some(seed),
        ..SearchConfig::default()
    };
    let t = g.max_degree() as Color + 1 + extra;
    match exists_coloring(g, t, &cfg).unwrap() {
        Verdict::Feasible(c) => Some(c),
        _ => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inversion_is_an_involution(g in any_graph(), t in 1i64..8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = common::random_coloring(&g, t, &mut rng);
        prop_assert_eq!(invert(&invert(&c)), c);
    }

    #[test]
    fn inversion_preserves_validity(g in connected_graph(), extra in 0i64..4, seed in any::<u64>()) {
        if let Some(c) = some_witness(&g, extra, seed) {
            prop_assert!(verify_interval_total(&g, &invert(&c)).unwrap().valid);
        }
    }

    /// Colorings meeting everything but surjectivity, shifted to start at 1
    /// and cut off at their maximum, use every color in between.
    #[test]
    fn continuity_on_connected_graphs(g in connected_graph(), extra in 0i64..6, seed in any::<u64>()) {
        let cfg = SearchConfig {
            require_all_colors: false,
            value_order_seed: Some(seed),
            budget: Some(20_000),
            ..SearchConfig::default()
        };
        let t = g.max_degree() as Color + 1 + extra;
        if let Verdict::Feasible(c) = exists_coloring(&g, t, &cfg).unwrap() {
            let all = c.vertex_colors.iter().chain(&c.edge_colors);
            let lo = *all.clone().min().unwrap();
            let hi = *all.max().unwrap();
            let shift = |x: &Color| x - lo + 1;
            let normalized = TotalColoring {
                t: hi - lo + 1,
                vertex_colors: c.vertex_colors.iter().map(shift).collect(),
                edge_colors: c.edge_colors.iter().map(shift).collect(),
            };
            prop_assert_eq!(check_continuity(&g, &normalized), Ok(true));
            prop_assert!(verify_interval_total(&g, &normalized).unwrap().valid);
        }
    }

    #[test]
    fn verifiers_agree(g in any_graph(), t in 1i64..9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = common::random_coloring(&g, t, &mut rng);
        prop_assert_eq!(
            verify_interval_total(&g, &c).unwrap().valid,
            brute_force_verifier_oracle(&g, &c)
        );
    }

    #[test]
    fn valid_implies_total_proper(g in connected_graph(), extra in 0i64..4, seed in any::<u64>()) {
        if let Some(c) = some_witness(&g, extra, seed) {
            prop_assert!(verify_total_proper(&g, &c).unwrap().valid);
        }
    }

    #[test]
    fn auxiliary_degrees(g in any_graph()) {
        let aux = build_auxiliary(&g);
        prop_assert_eq!(aux.h.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(aux.h.edge_count(), g.vertex_count() + 2 * g.edge_count());
        prop_assert!(aux.h.bipartition().is_some());
        for v in 0..g.vertex_count() {
            let d = g.neighbors(v).len() + 1;
            prop_assert_eq!(aux.h.neighbors(aux.u(v)).len(), d);
            prop_assert_eq!(aux.h.neighbors(aux.w(v)).len(), d);
            // every H-edge joins the two sides
            for &(x, _) in aux.h.neighbors(aux.u(v)) {
                prop_assert!(x >= g.vertex_count());
            }
        }
    }

    #[test]
    fn lift_is_sound_and_reversible(g in connected_graph(), extra in 0i64..4, seed in any::<u64>()) {
        if let Some(c) = some_witness(&g, extra, seed) {
            let (aux, ec) = lift_coloring(&g, &c).unwrap();
            prop_assert_eq!(ec.t, c.t);
            prop_assert!(verify_interval_edge(&aux.h, &ec).unwrap().valid);
            prop_assert_eq!(unlift(&g, &aux, &ec).unwrap(), c);
        }
    }

    /// Any interval total coloring of a connected graph stays under 2|V| - 1
    /// colors, and under 2|V| - 3 for r-regular graphs with |V| >= 2r + 2.
    #[test]
    fn witnesses_respect_order_bounds(g in connected_graph(), extra in 0i64..8, seed in any::<u64>()) {
        if let Some(c) = some_witness(&g, extra, seed) {
            let n = g.vertex_count() as Color;
            prop_assert!(c.t < 2 * n);
            if let Some(r) = g.regular_degree() {
                if n >= 2 * r as Color + 2 {
                    prop_assert!(c.t <= 2 * n - 3);
                }
            }
        }
    }

    #[test]
    fn path_degree_bound_matches_enumeration(g in any_graph()) {
        let b = bound_report(&g);
        let path = b.get(SHORTEST_PATH_UPPER).unwrap();
        match common::shortest_path_degree_sum_by_enumeration(&g) {
            Some(sum) => {
                prop_assert!(path.applicable);
                prop_assert_eq!(path.value, 1 + sum as Color);
                // the diameter bound relaxes it
                prop_assert!(path.value <= b.get(DIAMETER_UPPER).unwrap().value);
            }
            None => prop_assert!(!path.applicable),
        }
    }

    #[test]
    fn graph_json_round_trip(g in any_graph()) {
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }

    #[test]
    fn certificate_json_round_trip(g in any_graph(), t in 1i64..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cert = Certificate { coloring: common::random_coloring(&g, t, &mut rng), graph: g };
        let json = serde_json::to_string(&cert).unwrap();
        prop_assert_eq!(serde_json::from_str::<Certificate>(&json).unwrap(), cert);
    }
}
