//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use loopwords::leclerc::{Engine, WordTables};
use loopwords::order::{OrderPolicy, Ratio};
use loopwords::rootsys::{RootSystem, TypeLabel};
use loopwords::{typea, verify};

fn report_line(id: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {id} ({name}): {status} — {detail}");
}

/// One grid cell: type, rank, the orders to try, the weight vectors to try.
type GridCell = (TypeLabel, usize, Vec<Vec<usize>>, Vec<Vec<i64>>);

/// The cross-validation grid.
fn grid() -> Vec<GridCell> {
    vec![
        (
            TypeLabel::A,
            2,
            vec![vec![1, 2], vec![2, 1]],
            vec![vec![1, 1], vec![2, 1]],
        ),
        (
            TypeLabel::A,
            3,
            vec![vec![1, 2, 3], vec![3, 1, 2]],
            vec![vec![1, 1, 1], vec![1, 2, 2]],
        ),
        (
            TypeLabel::B,
            2,
            vec![vec![1, 2], vec![2, 1]],
            vec![vec![1, 1], vec![7, 8]],
        ),
        (
            TypeLabel::C,
            3,
            vec![vec![1, 2, 3], vec![3, 1, 2]],
            vec![vec![1, 1, 1], vec![2, 1, 3]],
        ),
        (
            TypeLabel::G2,
            2,
            vec![vec![1, 2], vec![2, 1]],
            vec![vec![1, 1], vec![2, 3]],
        ),
    ]
}

type GoldenRow = (TypeLabel, usize, Vec<usize>, Vec<i64>, i64, String);

fn parse_golden() -> Vec<GoldenRow> {
    let raw = include_str!("golden/reference_words.tsv");
    let mut rows = Vec::new();
    for line in raw.lines() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 6, "malformed golden line: {line}");
        let label = TypeLabel::parse(cols[0]).unwrap();
        let rank: usize = cols[1].parse().unwrap();
        let order: Vec<usize> = cols[2].split(',').map(|t| t.parse().unwrap()).collect();
        let weights: Vec<i64> = cols[3].split(',').map(|t| t.parse().unwrap()).collect();
        let d: i64 = cols[4].parse().unwrap();
        rows.push((label, rank, order, weights, d, cols[5].to_string()));
    }
    assert_eq!(rows.len(), 32, "8 + 8 table rows, 3 + 1 words each");
    rows
}

#[test]
fn criterion_1_reference_table_reproduction() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut current: Option<(TypeLabel, usize, Vec<usize>, Vec<i64>)> = None;
    let mut sys_policy: Option<(RootSystem, OrderPolicy)> = None;
    for (label, rank, order, weights, d, expected) in parse_golden() {
        let key = (label, rank, order.clone(), weights.clone());
        if current.as_ref() != Some(&key) {
            let sys = RootSystem::build(label, rank).unwrap();
            let policy = OrderPolicy::weighted(rank, order.clone(), weights.clone()).unwrap();
            sys_policy = Some((sys, policy));
            current = Some(key);
        }
        let (sys, policy) = sys_policy.as_ref().unwrap();
        let tables = WordTables::new(sys, policy);
        let word = tables
            .compute(sys.theta(), d, Engine::Fast)
            .unwrap()
            .to_string();
        if word != expected {
            failures.push(format!("{label}{rank} d={d}: got {word}, want {expected}"));
        }
    }
    let pass = failures.is_empty();
    report_line(
        1,
        "reference table reproduction",
        pass,
        &format!("32 words, {:.2?}", start.elapsed()),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let mut passed = 0usize;
    let mut failures = Vec::new();
    for (label, rank, orders, weight_sets) in grid() {
        let sys = RootSystem::build(label, rank).unwrap();
        for order in &orders {
            for weights in &weight_sets {
                let policy = OrderPolicy::weighted(rank, order.clone(), weights.clone()).unwrap();
                let tables = WordTables::new(&sys, &policy);
                let report = verify::oracle_suite(&tables, 3, None).unwrap();
                passed += report.passed();
                failures.extend(
                    report
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| format!("{label}{rank} {order:?} {weights:?} {}", c.label)),
                );
            }
        }
    }
    let pass = failures.is_empty();
    report_line(
        2,
        "oracle = fast = naive",
        pass,
        &format!("{passed} instances, {:.2?}", start.elapsed()),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_3_property_suites() {
    let start = Instant::now();
    let mut passed = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for (label, rank, orders, weight_sets) in grid() {
        let sys = RootSystem::build(label, rank).unwrap();
        for order in &orders {
            for weights in &weight_sets {
                let policy = OrderPolicy::weighted(rank, order.clone(), weights.clone()).unwrap();
                let tables = WordTables::new(&sys, &policy);
                let mut combined = verify::Report::default();
                combined.merge(verify::tightness_suite(&tables, None).unwrap());
                combined.merge(verify::monotonicity_suite(&tables, None).unwrap());
                combined.merge(verify::periodicity_suite(&tables, None).unwrap());
                combined.merge(verify::finite_restriction_suite(&tables).unwrap());
                combined.merge(verify::first_letter_suite(&tables, None).unwrap());
                combined.merge(verify::convexity_suite(&tables, None).unwrap());
                combined.merge(verify::minimality_suite(&tables, None).unwrap());
                combined.merge(verify::summand_suite(&tables, 50, 0x5eed).unwrap());
                passed += combined.passed();
                failures.extend(
                    combined
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| format!("{label}{rank} {order:?} {weights:?} {}", c.label)),
                );
            }
        }
    }
    let pass = failures.is_empty();
    report_line(
        3,
        "word-combinatorics property suites",
        pass,
        &format!("{passed} instances, {:.2?}", start.elapsed()),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_4_weyl_agreement() {
    let start = Instant::now();
    let mut passed = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let cases: Vec<(TypeLabel, usize, Vec<i64>)> = vec![
        (TypeLabel::A, 2, vec![1, 1]),
        (TypeLabel::A, 2, vec![2, 3]),
        (TypeLabel::B, 2, vec![1, 1]),
        (TypeLabel::B, 2, vec![7, 8]),
        (TypeLabel::G2, 2, vec![1, 1]),
        (TypeLabel::G2, 2, vec![2, 3]),
    ];
    for (label, rank, weights) in cases {
        let sys = RootSystem::build(label, rank).unwrap();
        let policy = OrderPolicy::weighted(rank, (1..=rank).collect(), weights.clone()).unwrap();
        let tables = WordTables::new(&sys, &policy);
        let report = verify::weyl_suite(&tables, 200, 20, 0xa11ce).unwrap();
        passed += report.passed();
        failures.extend(
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{label}{rank} {weights:?} {}: {}", c.label, c.detail)),
        );
    }
    let pass = failures.is_empty();
    report_line(
        4,
        "affine Weyl agreement",
        pass,
        &format!("{passed} instances, {:.2?}", start.elapsed()),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_5_typea_closed_forms() {
    let start = Instant::now();
    let mut passed = 0usize;
    let mut failures: Vec<String> = Vec::new();

    let chains: Vec<Vec<Vec<i64>>> = vec![
        vec![
            vec![1, 1],
            vec![1, 1, 1],
            vec![1, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ],
        vec![
            vec![1, 2],
            vec![1, 2, 6],
            vec![1, 2, 6, 12],
            vec![1, 2, 6, 12, 36],
        ],
        vec![
            vec![1, 3],
            vec![1, 3, 9],
            vec![1, 3, 9, 27],
            vec![1, 3, 9, 27, 81],
        ],
    ];
    for family in &chains {
        for weights in family {
            let n = weights.len();
            let report = verify::typea_suite(n, weights).unwrap();
            passed += report.passed();
            failures.extend(
                report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| format!("{}: {}", c.label, c.detail)),
            );
        }
    }

    // Reference sequences, verbatim.
    let t1 = typea::build_table(4, &[1, 2, 6, 12], &[1, 1, 1, 1]).unwrap();
    let seq1_ok = t1.flat()
        == [
            4, 4, 3, 4, 4, 3, 4, 4, 3, 2, 4, 4, 3, 4, 4, 3, 4, 4, 3, 2, 1,
        ]
        .as_slice();
    let t2 = typea::build_table(3, &[1, 3, 15], &[1, 1, 1]).unwrap();
    let seq2_ok = t2.flat() == [3, 3, 3, 3, 3, 2, 3, 3, 3, 3, 3, 2, 3, 3, 3, 3, 3, 2, 1].as_slice();
    if !seq1_ok {
        failures.push("n=4 (1,2,6,12) sequence mismatch".into());
    }
    if !seq2_ok {
        failures.push("n=3 (1,3,15) sequence mismatch".into());
    }
    passed += usize::from(seq1_ok) + usize::from(seq2_ok);

    // B/C/D multiset rule on the C4 reference example, every d in the window.
    let c4 = RootSystem::build(TypeLabel::C, 4).unwrap();
    assert_eq!(c4.theta().coeffs(), &[2, 2, 2, 1]);
    let theta = c4.theta().clone();
    let report = verify::bcd_suite(&c4, &[1, 2, 6, 12], &theta).unwrap();
    passed += report.passed();
    failures.extend(
        report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("C4 {}: {}", c.label, c.detail)),
    );

    let pass = failures.is_empty();
    report_line(
        5,
        "type-A closed forms",
        pass,
        &format!("{passed} instances, {:.2?}", start.elapsed()),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_6_generalized_orders() {
    let start = Instant::now();
    let mut passed = 0usize;
    let mut failures: Vec<String> = Vec::new();

    let ratio = |n: i64, d: i64| Ratio::new(n, d).unwrap();
    let cases: Vec<(TypeLabel, usize, Vec<Ratio>, Vec<Ratio>)> = vec![
        (
            TypeLabel::A,
            2,
            vec![ratio(1, 1), ratio(1, 2)],
            vec![ratio(1, 1), ratio(1, 1)],
        ),
        (
            TypeLabel::B,
            2,
            vec![ratio(1, 2), ratio(1, 1)],
            vec![ratio(1, 1), ratio(1, 3)],
        ),
    ];
    for (label, rank, pos, neg) in cases {
        let sys = RootSystem::build(label, rank).unwrap();
        let policy =
            OrderPolicy::generalized(rank, (1..=rank).collect(), pos.clone(), neg.clone()).unwrap();
        let tables = WordTables::new(&sys, &policy);
        let report = verify::generalized_suite(&tables, 6, (-4, 6), 3).unwrap();
        passed += report.passed();
        failures.extend(
            report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{label}{rank} {}: {}", c.label, c.detail)),
        );
    }
    let pass = failures.is_empty();
    report_line(
        6,
        "generalized orders",
        pass,
        &format!("{passed} instances, {:.2?}", start.elapsed()),
    );
    assert!(pass, "{failures:?}");
}
