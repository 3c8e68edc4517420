mod common;

use common::*;
use distance_antimagic::catalog::graphs_up_to;
use distance_antimagic::search::{enumerate, prove_twin_shortcut, Pruning, VariableOrder};
use distance_antimagic::{
    build_family, distance_matrix, search, search_with, Budget, DistanceSet, Family, Graph,
    SearchOptions, SearchOutcome, TargetSpec,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_subsets(g: &Graph) -> Vec<DistanceSet> {
    DistanceSet::nonempty_subsets(distance_matrix(g).max_finite_distance(), None)
}

fn targets(d: &DistanceSet) -> Vec<TargetSpec> {
    vec![
        TargetSpec::antimagic(d.clone()),
        TargetSpec::progression(None, None, d.clone()),
        TargetSpec::progression(None, Some(1), d.clone()),
        TargetSpec::magic(None, d.clone()),
    ]
}

fn verdict(out: &SearchOutcome) -> bool {
    match out {
        SearchOutcome::Found { .. } => true,
        SearchOutcome::ExhaustedNone { .. } => false,
        SearchOutcome::BudgetExceeded { .. } => panic!("unexpected budget exhaustion"),
    }
}

fn opts(pruning: Pruning, order: VariableOrder, workers: usize) -> SearchOptions {
    SearchOptions {
        budget: Budget::unlimited(),
        pruning,
        order,
        workers,
    }
}

/// 50 instances drawn from small graphs, random distance sets and all goal shapes.
fn corpus() -> Vec<(Graph, TargetSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    (0..50)
        .map(|_| {
            let n = rng.gen_range(2..=7);
            let g = random_graph(&mut rng, n, 0.55);
            let d: DistanceSet = random_distances(&mut rng, 3).into_iter().collect();
            let t = targets(&d).swap_remove(rng.gen_range(0..4));
            (g, t)
        })
        .collect()
}

#[test]
fn search_agrees_with_enumeration_up_to_order_five() {
    for g in graphs_up_to(5).unwrap() {
        for d in all_subsets(&g) {
            for t in targets(&d) {
                let count = enumerate(&g, &t).unwrap();
                let out = search(&g, &t, Budget::unlimited());
                assert_eq!(verdict(&out), count > 0, "{} on {:?}", t.goal, g.edges());
                if let SearchOutcome::Found { labeling, .. } = &out {
                    let dv: Vec<u32> = d.iter().collect();
                    assert!(oracle_accepts(
                        &t.goal,
                        &oracle_weights(&g, labeling.as_slice(), &dv)
                    ));
                }
            }
        }
    }
}

#[test]
fn search_agrees_with_enumeration_order_six_adjacency() {
    let d = DistanceSet::adjacency();
    for g in graphs_up_to(6)
        .unwrap()
        .into_iter()
        .filter(|g| g.order() == 6)
    {
        for t in targets(&d) {
            let count = enumerate(&g, &t).unwrap();
            assert_eq!(verdict(&search(&g, &t, Budget::unlimited())), count > 0);
        }
    }
}

#[test]
fn twin_shortcut_is_consistent() {
    for g in graphs_up_to(6).unwrap() {
        for d in all_subsets(&g) {
            let dv: Vec<u32> = d.iter().collect();
            let twin = prove_twin_shortcut(&g, &d);
            assert_eq!(twin.is_some(), has_twins(&g, &dv));
            if twin.is_some() {
                assert_eq!(enumerate(&g, &TargetSpec::antimagic(d.clone())).unwrap(), 0);
            }
        }
    }
}

#[test]
fn pruning_never_changes_the_verdict() {
    let settings = [
        Pruning::default(),
        Pruning::none(),
        Pruning {
            finalization: false,
            ..Pruning::default()
        },
        Pruning {
            interval_bounds: false,
            ..Pruning::default()
        },
        Pruning {
            sum_window: false,
            ..Pruning::default()
        },
    ];
    for (i, (g, t)) in corpus().iter().enumerate() {
        let count = enumerate(g, t).unwrap();
        for p in settings {
            for order in [VariableOrder::DegreeThenIndex, VariableOrder::Closure] {
                let out = search_with(g, t, &opts(p, order, 1));
                assert_eq!(verdict(&out), count > 0, "instance {i}, {p:?}, {order:?}");
            }
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let mut instances = corpus();
    for n in [5, 6, 7] {
        instances.push((
            build_family(&Family::Prism(n)).unwrap(),
            TargetSpec::progression(None, Some(1), DistanceSet::adjacency()),
        ));
        instances.push((
            build_family(&Family::Wheel(n + 1)).unwrap(),
            TargetSpec::progression(None, None, DistanceSet::adjacency()),
        ));
    }
    for (g, t) in &instances {
        for order in [VariableOrder::DegreeThenIndex, VariableOrder::Closure] {
            let base = search_with(g, t, &opts(Pruning::default(), order, 1));
            for workers in [2, 3, 8] {
                assert_eq!(
                    search_with(g, t, &opts(Pruning::default(), order, workers)),
                    base
                );
            }
        }
    }
}

#[test]
fn node_budget_same_sequential_and_parallel() {
    let g = build_family(&Family::Sun(5)).unwrap();
    let t = TargetSpec::progression(None, None, DistanceSet::adjacency());
    for limit in [1, 10, 100, 1000] {
        let seq = search_with(
            &g,
            &t,
            &SearchOptions {
                budget: Budget::nodes(limit),
                ..Default::default()
            },
        );
        assert_eq!(seq, SearchOutcome::BudgetExceeded { nodes: limit });
        for workers in [2, 4] {
            let par = search_with(
                &g,
                &t,
                &SearchOptions {
                    budget: Budget::nodes(limit),
                    workers,
                    ..Default::default()
                },
            );
            assert_eq!(par, seq);
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let dv = random_distances(&mut rng, 2);
        let d: DistanceSet = dv.iter().copied().collect();
        for t in targets(&d) {
            let brute = all_labelings(n)
                .iter()
                .filter(|l| oracle_accepts(&t.goal, &oracle_weights(&g, l, &dv)))
                .count() as u64;
            assert_eq!(enumerate(&g, &t).unwrap(), brute);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn found_labelings_meet_the_target(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5);
        let dv = random_distances(&mut rng, 3);
        let d: DistanceSet = dv.iter().copied().collect();
        for t in targets(&d) {
            if let SearchOutcome::Found { labeling, profile, .. } = search(&g, &t, Budget::unlimited()) {
                let w = oracle_weights(&g, labeling.as_slice(), &dv);
                prop_assert_eq!(&profile.weights, &w);
                prop_assert!(oracle_accepts(&t.goal, &w));
            }
        }
    }
}
