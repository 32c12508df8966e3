//! The acceptance suite: one test per promise this crate makes, each
//! ending in a single PASS line (run with `-- --nocapture` to see them
//! all). The expensive n <= 7 sweep is shared between the tests that
//! need it.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use tridom::bounds::{self, BoundId, BoundStatus};
use tridom::enumerate::{canonical_key, enumerate_connected_graphs};
use tridom::families;
use tridom::graph::Graph;
use tridom::graph6::{encode_graph6, parse_graph6};
use tridom::oracle::{oracle_min_set, oracle_triple, Variant};
use tridom::report::{write_csv, RowOutcome, TightWitness, TripleValues, VerificationReport};
use tridom::solve::{
    connected_domination_number, connected_domination_number_with_deadline,
    is_connected_dominating, is_dominating, is_total_dominating, parameter_triple,
    total_domination_number, SolveError,
};
use tridom::verify::{find_tight, verify_corpus, CorpusSource, VerifyOptions};

/// Connected graphs on labeled vertices, n = 1..=7.
const LABELED_CONNECTED: [u64; 7] = [1, 1, 4, 38, 728, 26704, 1_866_256];

fn two_triangles() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
}

fn check_against_oracle(g: &Graph) {
    let name = || encode_graph6(g).unwrap();
    let solver = parameter_triple(g);
    let oracle = oracle_triple(g);
    assert_eq!(
        solver.values(),
        oracle.values(),
        "solver and oracle disagree on {}",
        name()
    );
    assert_eq!(solver.gamma_certificate.len(), solver.gamma, "{}", name());
    assert!(is_dominating(g, solver.gamma_certificate), "{}", name());
    if let (Some(v), Some(cert)) = (solver.gamma_t, solver.gamma_t_certificate) {
        assert_eq!(cert.len(), v, "{}", name());
        assert!(is_total_dominating(g, cert), "{}", name());
    }
    if let (Some(v), Some(cert)) = (solver.gamma_c, solver.gamma_c_certificate) {
        assert_eq!(cert.len(), v, "{}", name());
        assert!(is_connected_dominating(g, cert), "{}", name());
    }
}

#[test]
fn criterion_1_solvers_match_the_subset_oracle_through_n7() {
    const CHUNK: usize = 1 << 16;
    let mut counted = [0u64; 7];
    for n in 1..=7 {
        let mut chunk: Vec<Graph> = Vec::with_capacity(CHUNK);
        let flush = |chunk: &mut Vec<Graph>| {
            chunk.par_iter().for_each(check_against_oracle);
            let len = chunk.len() as u64;
            chunk.clear();
            len
        };
        for g in enumerate_connected_graphs(n, false).unwrap() {
            chunk.push(g);
            if chunk.len() == CHUNK {
                counted[n - 1] += flush(&mut chunk);
            }
        }
        counted[n - 1] += flush(&mut chunk);
    }
    assert_eq!(counted, LABELED_CONNECTED, "enumeration drifted");

    // Undefined parameters error identically through both routes.
    let k1 = families::complete(1).unwrap();
    match (
        total_domination_number(&k1).unwrap_err(),
        oracle_min_set(&k1, Variant::Total).unwrap_err(),
    ) {
        (SolveError::IsolatedVertex { vertex: a }, SolveError::IsolatedVertex { vertex: b }) => {
            assert_eq!(a, b)
        }
        other => panic!("expected matching isolated-vertex errors, got {other:?}"),
    }
    let split = two_triangles();
    match (
        connected_domination_number(&split).unwrap_err(),
        oracle_min_set(&split, Variant::Connected).unwrap_err(),
    ) {
        (SolveError::Disconnected, SolveError::Disconnected) => {}
        other => panic!("expected matching disconnected errors, got {other:?}"),
    }
    assert_eq!(parameter_triple(&split).values(), (2, Some(4), None));
    assert_eq!(oracle_triple(&split).values(), (2, Some(4), None));

    let total: u64 = LABELED_CONNECTED.iter().sum();
    println!(
        "criterion 1 PASS: all three solvers match the subset oracle on {total} labeled \
         connected graphs with 1..=7 vertices, certificates included"
    );
}

#[test]
fn criterion_2_named_graphs_have_their_expected_triples() {
    let h = families::graph_h();
    let th = parameter_triple(&h);
    assert_eq!(th.values(), (5, Some(10), Some(10)));
    assert_eq!(oracle_triple(&h).values(), th.values());
    assert_eq!(
        bounds::evaluate_bound(BoundId::B4, &th).status,
        BoundStatus::Tight,
        "B4 is an equality at H"
    );

    let gp = families::graph_g_prime();
    let tg = parameter_triple(&gp);
    assert_eq!(tg.values(), (2, Some(2), Some(2)));
    assert_eq!(oracle_triple(&gp).values(), tg.values());
    assert_eq!(
        bounds::evaluate_bound(BoundId::B7, &tg).status,
        BoundStatus::Tight,
        "B7 is an equality at Gprime"
    );

    println!(
        "criterion 2 PASS: H solves to (5, 10, 10) and Gprime to (2, 2, 2), oracle-confirmed, \
         with B4 tight at H and B7 tight at Gprime"
    );
}

#[test]
fn criterion_3_cycle_closed_forms_match_the_solver() {
    for n in 3..=12 {
        let t = parameter_triple(&families::cycle(n).unwrap());
        assert_eq!(t.gamma, families::gamma_cycle(n).unwrap(), "gamma(C_{n})");
        assert_eq!(
            t.gamma_t,
            Some(families::gamma_t_cycle(n).unwrap()),
            "gamma_t(C_{n})"
        );
        assert_eq!(
            t.gamma_c,
            Some(families::gamma_c_cycle(n).unwrap()),
            "gamma_c(C_{n})"
        );
    }
    println!("criterion 3 PASS: cycle closed forms match the solver for 3 <= n <= 12");
}

#[test]
fn criterion_4_grid_closed_forms_match_within_the_budget() {
    for n in [4, 5] {
        let t = parameter_triple(&families::grid_p4(n).unwrap());
        assert_eq!(
            t.gamma,
            families::gamma_p4grid(n).unwrap(),
            "gamma(P4xP{n})"
        );
        assert_eq!(
            t.gamma_t,
            Some(families::gamma_t_p4grid(n).unwrap()),
            "gamma_t(P4xP{n})"
        );
        assert_eq!(
            t.gamma_c,
            Some(families::gamma_c_p4grid(n).unwrap()),
            "gamma_c(P4xP{n})"
        );
    }
    for n in 3..=6 {
        let t = parameter_triple(&families::grid_p3(n).unwrap());
        assert_eq!(
            t.gamma_t,
            Some(families::gamma_t_p3grid(n).unwrap()),
            "gamma_t(P3xP{n})"
        );
        assert_eq!(
            t.gamma_c,
            Some(families::gamma_c_p3grid(n).unwrap()),
            "gamma_c(P3xP{n})"
        );
    }

    // The hardest instance above, timed against its promised budget.
    let g = families::grid_p4(5).unwrap();
    let start = Instant::now();
    let deadline = Some(start + Duration::from_secs(10));
    let (value, cert) = connected_domination_number_with_deadline(&g, deadline)
        .expect("gamma_c(P4 x P5) finishes inside 10 s");
    let elapsed = start.elapsed();
    assert_eq!(value, 9);
    assert!(is_connected_dominating(&g, cert));
    assert!(elapsed < Duration::from_secs(10));

    println!(
        "criterion 4 PASS: grid closed forms match, and gamma_c(P4 x P5) = 9 took {elapsed:?}"
    );
}

static SWEEP: OnceLock<VerificationReport> = OnceLock::new();

/// Every connected labeled graph on at most 7 vertices, solved once and
/// shared by criteria 5 and 6.
fn exhaustive_sweep() -> &'static VerificationReport {
    SWEEP.get_or_init(|| {
        verify_corpus(
            CorpusSource::Enumerate {
                max_n: 7,
                dedupe: false,
            },
            &VerifyOptions::default(),
        )
        .expect("no proved statement fails on <= 7 vertices")
    })
}

#[test]
fn criterion_5_no_bound_fails_on_any_connected_graph_through_n7() {
    let report = exhaustive_sweep();
    assert_eq!(report.totals.parsed, LABELED_CONNECTED.iter().sum::<u64>());
    // K_1 is the one connected graph skipped (its vertex is isolated).
    assert_eq!(report.totals.skipped_isolated, 1);
    assert_eq!(report.totals.skipped_disconnected, 0);
    assert_eq!(report.totals.unsolved, 0);
    assert_eq!(report.totals.verified, report.totals.parsed - 1);
    for agg in &report.aggregates.bounds {
        assert_eq!(agg.counts.violated, 0, "{} violated", agg.bound);
    }
    assert!(report.aggregates.counterexamples.is_empty());
    assert_eq!(report.exit_code(), 0);
    println!(
        "criterion 5 PASS: B1..B9 verified with zero violations and zero B8 counterexamples \
         on {} graphs",
        report.totals.verified
    );
}

#[test]
fn criterion_6_structural_checks_hold_with_zero_exceptions() {
    let report = exhaustive_sweep();
    assert_eq!(report.aggregates.gamma2_identity.refuted, 0);
    let b8 = &report.aggregates.b8_cases;
    assert_eq!(b8.equal + b8.one_below + b8.neither, report.totals.verified);

    // Recount from the raw rows rather than trusting the aggregates.
    let mut confirmed = 0u64;
    let mut not_applicable = 0u64;
    let mut equal = 0u64;
    let mut one_below = 0u64;
    for row in &report.rows {
        let RowOutcome::Solved(s) = &row.outcome else {
            panic!("unsolved row {} in the exhaustive sweep", row.graph6);
        };
        if s.gamma == 2 {
            assert_eq!(s.gamma_t, s.gamma_c, "gamma=2 identity at {}", row.graph6);
            confirmed += 1;
        } else {
            not_applicable += 1;
        }
        let t = s.triple();
        match bounds::classify_b8_proved_case(&t) {
            bounds::B8ProvedCase::Equal => equal += 1,
            bounds::B8ProvedCase::OneBelow => one_below += 1,
            bounds::B8ProvedCase::Neither => continue,
        }
        // Either case implies B8; a violation here would be a solver bug.
        assert_ne!(
            bounds::evaluate_bound(BoundId::B8, &t).status,
            BoundStatus::Violated,
            "B8 violated inside a proved case at {}",
            row.graph6
        );
    }
    assert_eq!(confirmed, report.aggregates.gamma2_identity.confirmed);
    assert_eq!(
        not_applicable,
        report.aggregates.gamma2_identity.not_applicable
    );
    assert_eq!(equal, b8.equal);
    assert_eq!(one_below, b8.one_below);

    println!(
        "criterion 6 PASS: gamma=2 identity confirmed {confirmed} times and the \
         case classification ({equal} + {one_below} + rest) carries no B8 exception"
    );
}

/// All labeled connected graphs on <= 6 vertices plus the tree H, which
/// is the designated equality case for B4.
fn witness_corpus() -> CorpusSource {
    CorpusSource::Chain(vec![
        CorpusSource::Enumerate {
            max_n: 6,
            dedupe: false,
        },
        CorpusSource::Graph6Lines(vec![encode_graph6(&families::graph_h()).unwrap()]),
    ])
}

fn oracle_revalidate_tight(bound: BoundId, w: &TightWitness) {
    let g = parse_graph6(&w.graph6).unwrap();
    let o = oracle_triple(&g);
    let values = TripleValues {
        gamma: o.gamma as u16,
        gamma_t: o.gamma_t.unwrap() as u16,
        gamma_c: o.gamma_c.unwrap() as u16,
    };
    assert_eq!(values, w.values, "oracle triple differs at {}", w.graph6);
    assert_eq!(
        bounds::evaluate_bound(bound, &o).status,
        BoundStatus::Tight,
        "{bound} not tight under the oracle at {}",
        w.graph6
    );
}

#[test]
fn criterion_7_every_upper_and_lower_bound_has_live_tight_witnesses() {
    let h6 = encode_graph6(&families::graph_h()).unwrap();
    let gprime = families::graph_g_prime();
    let gprime_key = canonical_key(&gprime);

    let witnesses_for = |bound: BoundId| -> Vec<TightWitness> {
        let found = find_tight(witness_corpus(), bound, usize::MAX).unwrap();
        assert!(!found.is_empty(), "no tight witness for {bound}");
        for w in &found {
            oracle_revalidate_tight(bound, w);
        }
        found
    };

    let b1 = witnesses_for(BoundId::B1);
    assert!(
        b1.iter().any(|w| w.values.gamma_t == 2 * w.values.gamma),
        "no witness pins the upper side of B1"
    );
    let b2 = witnesses_for(BoundId::B2);
    assert!(
        b2.iter()
            .any(|w| w.values.gamma_c == 3 * w.values.gamma - 2),
        "no witness pins the upper side of B2"
    );
    let b4 = witnesses_for(BoundId::B4);
    assert!(
        b4.iter().any(|w| w.graph6 == h6),
        "H missing from the B4 equality cases"
    );
    witnesses_for(BoundId::B5);
    witnesses_for(BoundId::B6);
    let b7 = witnesses_for(BoundId::B7);
    assert!(
        b7.iter()
            .filter_map(|w| {
                let g = parse_graph6(&w.graph6).unwrap();
                (g.n() == gprime.n()).then(|| canonical_key(&g))
            })
            .any(|key| key == gprime_key),
        "no B7 witness is isomorphic to Gprime"
    );

    println!(
        "criterion 7 PASS: tight witnesses exist for B1 (upper), B2 (upper), B4 (H among \
         them), B5, B6, and B7 (Gprime among them), each revalidated by the oracle"
    );
}

#[test]
fn criterion_8_worker_count_never_changes_the_report() {
    let mut outputs = Vec::new();
    for workers in [1, 4] {
        let report = verify_corpus(
            CorpusSource::Enumerate {
                max_n: 6,
                dedupe: false,
            },
            &VerifyOptions {
                workers: Some(workers),
                ..VerifyOptions::default()
            },
        )
        .unwrap();
        let mut bytes = Vec::new();
        write_csv(&report, &mut bytes).unwrap();
        outputs.push(bytes);
    }
    assert_eq!(
        outputs[0], outputs[1],
        "CSV output differs between 1 and 4 workers"
    );
    println!("criterion 8 PASS: the n <= 6 report is byte-identical with 1 worker and 4 workers");
}
