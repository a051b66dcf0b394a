//! Randomized invariants against the BFS oracle.

use proptest::prelude::*;

use dhecc::builders::{random_dh, KindWeights};
use dhecc::ecc_exact::{all_eccentricities, forward_weight_pass, run_shadow, weighted_ecc_within};
use dhecc::extremal::{ecc_bounds_from_pair, mutually_distant_pair};
use dhecc::graph::four_point_check;
use dhecc::io::{parse_graph, write_graph};
use dhecc::pruning::{build_pruning_sequence, find_central_vertex, is_distance_hereditary, PruningSequence};
use dhecc::{all_pairs_ecc_oracle, DistanceMatrix, Graph};

fn weights() -> impl Strategy<Value = KindWeights> {
    (0.0..1.0f64, 0.0..1.0f64).prop_map(|(a, b)| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        KindWeights::new(lo, hi - lo, 1.0 - hi).unwrap()
    })
}

fn dh_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), weights()).prop_map(|(n, seed, w)| random_dh(n, seed, w).unwrap().0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ecc_matches_oracle(g in dh_graph(80)) {
        prop_assert_eq!(all_eccentricities(&g).unwrap(), all_pairs_ecc_oracle(&g).unwrap());
    }

    #[test]
    fn sequences_replay_and_round_trip(g in dh_graph(60), root_pick in any::<usize>()) {
        let root = root_pick % g.n();
        let seq = build_pruning_sequence(&g, root).unwrap();
        prop_assert_eq!(seq.steps.len(), g.n() - 1);
        prop_assert!(seq.validate(&g).is_ok());
        prop_assert_eq!(&seq.replay(), &g);
        prop_assert!(seq.marker_y <= seq.marker_z && seq.marker_z <= g.n() - 1);
        prop_assert_eq!(PruningSequence::from_text(&seq.to_text()).unwrap(), seq);
    }

    #[test]
    fn central_vertex_is_central(g in dh_graph(80)) {
        let t = all_pairs_ecc_oracle(&g).unwrap();
        prop_assert_eq!(t.ecc[find_central_vertex(&g).unwrap()], t.rad);
    }

    #[test]
    fn forward_pass_never_overshoots(g in dh_graph(60)) {
        let t = all_pairs_ecc_oracle(&g).unwrap();
        let seq = build_pruning_sequence(&g, find_central_vertex(&g).unwrap()).unwrap();
        let fp = forward_weight_pass(&g, &seq).unwrap();
        let mut alive_y = vec![true; g.n()];
        for st in &fp.steps[..seq.marker_y] {
            alive_y[st.removed] = false;
        }
        let mut twin_survivor = vec![false; g.n()];
        for st in fp.steps.iter().filter(|s| s.kind.is_twin()) {
            twin_survivor[st.survivor] = true;
        }
        for v in 0..g.n() {
            for (p, alive) in [(&fp.p_z, &fp.alive_z), (&fp.p_y, &alive_y)] {
                if !alive[v] {
                    continue;
                }
                let we = weighted_ecc_within(&g, p, v, alive).unwrap();
                prop_assert!(we <= t.ecc[v]);
                if !twin_survivor[v] {
                    prop_assert_eq!(we, t.ecc[v]);
                }
            }
        }
    }

    #[test]
    fn shadow_mode_is_clean(g in dh_graph(40)) {
        let (_, rep) = run_shadow(&g, None).unwrap();
        prop_assert!(rep.mismatches.is_empty(), "{:?}", rep.mismatches);
    }

    #[test]
    fn bounds_contain_eccentricities(g in dh_graph(80), start_pick in any::<usize>()) {
        let t = all_pairs_ecc_oracle(&g).unwrap();
        let pair = mutually_distant_pair(&g, start_pick % g.n()).unwrap();
        prop_assert!(pair.sweeps <= 5);
        let b = ecc_bounds_from_pair(&g, &pair);
        for v in 0..g.n() {
            prop_assert!(b.lower[v] <= t.ecc[v] && t.ecc[v] <= b.upper[v]);
        }
    }

    #[test]
    fn edge_lists_round_trip(g in dh_graph(50)) {
        prop_assert_eq!(&parse_graph(&write_graph(&g)).unwrap(), &g);
    }

    #[test]
    fn recognition_agrees_with_four_points(
        g in dh_graph(10),
        flips in proptest::collection::vec((any::<usize>(), any::<usize>()), 0..3),
    ) {
        let n = g.n();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for (a, b) in flips {
            let (u, v) = (a % n, b % n);
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            match edges.iter().position(|&x| x == e) {
                Some(i) => {
                    edges.swap_remove(i);
                }
                None => edges.push(e),
            }
        }
        let h = Graph::from_edges(n, edges).unwrap();
        prop_assume!(h.is_connected());
        let expected = four_point_check(&DistanceMatrix::new(&h)).holds;
        prop_assert_eq!(is_distance_hereditary(&h).unwrap(), expected);
    }
}
