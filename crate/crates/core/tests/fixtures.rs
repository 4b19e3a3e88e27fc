mod common;

use domset::generators::{fixture, FIXTURES};
use domset::greedy::{certify_independent_partition, certify_size_two, tied_pair_emptiness};
use domset::oracle::{exact_gamma, DEFAULT_LIMIT};
use domset::purify::{purify_all, PurifyMode, Rule, Status};
use domset::{build_forest, greedy_dominating_set, solve, tied_pairs, SolverConfig, TieBreak};

use common::*;

#[test]
fn every_fixture_is_connected_and_consistent() {
    let sizes = [
        ("fig1-spider", 21, 20),
        ("fig2-w22c3", 19, 22),
        ("fig3-counter", 12, 19),
        ("fig5a-ring", 15, 24),
        ("fig7-mwds", 8, 14),
        ("c5-corona-k1", 10, 10),
    ];
    for (name, n, m) in sizes {
        let f = fixture(name).unwrap();
        assert_eq!((f.graph.n(), f.graph.m()), (n, m), "{name}");
        assert!(f.graph.is_connected(), "{name}");
        assert_eq!(f.labels.len(), n);
        let degree_sum: usize = f.graph.vertices().map(|v| f.graph.degree(v)).sum();
        assert_eq!(degree_sum, 2 * m);
    }
    assert_eq!(FIXTURES.len(), sizes.len());
    assert!(fixture("fig99").is_err());
}

#[test]
fn fig3_greedy_misses_the_unique_optimum() {
    let f = fixture("fig3-counter").unwrap();
    let trace = greedy_dominating_set(&f.graph, TieBreak::MinIndex);
    assert_eq!(f.labels_of(trace.final_set().iter()), ["1", "2", "3"]);
    assert!(tied_pair_emptiness(&f.graph, &trace));
    assert!(!certify_size_two(&trace).is_granted());
    assert!(!certify_independent_partition(&f.graph, &trace).is_granted());

    let oracle = exact_gamma(&f.graph, DEFAULT_LIMIT).unwrap();
    assert_eq!(f.labels_of(oracle.witness.iter().copied()), ["3", "5"]);
    // {3, 5} is the only dominating pair
    let adj = adjacency(&f.graph);
    let pairs: Vec<(usize, usize)> = (0..12)
        .flat_map(|a| (a + 1..12).map(move |b| (a, b)))
        .filter(|&(a, b)| dominates(&adj, &[a, b]))
        .collect();
    assert_eq!(pairs, [(2, 4)]);
    assert!(!(0..12).any(|v| dominates(&adj, &[v])));
}

#[test]
fn fig1_spider_trace() {
    let f = fixture("fig1-spider").unwrap();
    let g = &f.graph;
    let trace = greedy_dominating_set(g, TieBreak::MinIndex);
    assert_eq!(trace.final_set().len(), 13);
    assert_eq!(trace.order()[0], f.ids(&["x1"])[0]);
    let pairs = tied_pairs(g, &trace);
    let forest = build_forest(g, &pairs, &trace).unwrap();
    assert_eq!(forest.trees().len(), 1);
    assert_eq!(forest.trees()[0].root, 0);
    // every stem has its pendant as a semi-private neighbor
    let run = purify_all(g, &trace, &forest, PurifyMode::Extended).unwrap();
    for p in f.ids(&["p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"]) {
        assert_eq!(run.state.status(p), Some(Status::Firm));
    }
    for q in f.ids(&["q1", "q2", "q3", "q4"]) {
        assert_eq!(run.state.status(q), Some(Status::Purified));
    }
    assert_eq!(run.state.status(0), Some(Status::Pending));
    assert_eq!(run.state.rules().len(), 4);
    assert!(run
        .state
        .rules()
        .iter()
        .all(|&(rule, _)| rule == Rule::Trio));
    assert_eq!(run.set.len(), 9);
    assert_eq!(brute_gamma(&adjacency(g)), 9);
}

#[test]
fn fig5a_and_corona_reach_gamma() {
    let config = SolverConfig {
        exact_limit: Some(DEFAULT_LIMIT),
        ..SolverConfig::default()
    };
    let ring = solve(&fixture("fig5a-ring").unwrap().graph, &config)
        .unwrap()
        .result;
    assert!(ring.greedy_size() <= 9);
    assert_eq!((ring.purified_size(), ring.gamma), (6, Some(6)));

    let corona = solve(&fixture("c5-corona-k1").unwrap().graph, &config)
        .unwrap()
        .result;
    assert_eq!((corona.purified_size(), corona.gamma), (5, Some(5)));
}

#[test]
fn fig2_greedy_is_optimal() {
    let f = fixture("fig2-w22c3").unwrap();
    let trace = greedy_dominating_set(&f.graph, TieBreak::MinIndex);
    assert_eq!(f.labels_of(trace.final_set().iter()), ["u", "v", "w"]);
    assert_eq!(brute_gamma(&adjacency(&f.graph)), 3);
}

#[test]
fn fig7_modes() {
    let f = fixture("fig7-mwds").unwrap();
    let run = |mode| {
        let config = SolverConfig {
            mode,
            exact_limit: Some(DEFAULT_LIMIT),
            ..SolverConfig::default()
        };
        solve(&f.graph, &config).unwrap().result
    };
    let strict = run(PurifyMode::Strict);
    assert_eq!(
        f.labels_of(strict.purified_set.iter().copied()),
        ["1", "2", "3"]
    );
    let extended = run(PurifyMode::Extended);
    assert_eq!(
        f.labels_of(extended.purified_set.iter().copied()),
        ["2", "3"]
    );
    assert_eq!(extended.gamma, Some(2));
    assert!(minimal(&adjacency(&f.graph), &extended.purified_set));
}
