//! Deeper cross-checks beyond the acceptance grid: brute-force validation of
//! the finite-type words in the exceptional types and oracle grids on B3/D4.
//!
//! The `#[ignore]` test at the bottom is a heavy variant (large weights on
//! D4); run it with `cargo test --test extended -- --ignored`.

use loopwords::leclerc::{Engine, WordTables};
use loopwords::oracle;
use loopwords::order::OrderPolicy;
use loopwords::rootsys::{RootSystem, TypeLabel};
use loopwords::verify;

/// At window `s = 0` the oracle enumerates zero-exponent words only, so it
/// reproduces the finite-type standard Lyndon words by pure brute force.
/// F4 has height-11 roots; this exercises tens of thousands of arrangements.
#[test]
fn f4_finite_words_by_brute_force() {
    let sys = RootSystem::build(TypeLabel::F4, 4).unwrap();
    let policy = OrderPolicy::weighted(4, vec![1, 2, 3, 4], vec![1, 2, 3, 2]).unwrap();
    let tables = WordTables::new(&sys, &policy);
    for alpha in sys.positive_roots() {
        let brute = oracle::oracle_word(&sys, &policy, alpha, 0, 0).unwrap();
        let finite = tables.finite_word(alpha).unwrap();
        assert_eq!(brute, finite, "alpha={alpha}");
    }
}

#[test]
fn e6_finite_words_by_brute_force() {
    let sys = RootSystem::build(TypeLabel::E6, 6).unwrap();
    let policy = OrderPolicy::weighted(6, vec![1, 4, 2, 6, 5, 3], vec![1, 2, 1, 2, 2, 1]).unwrap();
    let tables = WordTables::new(&sys, &policy);
    for alpha in sys.positive_roots() {
        let brute = oracle::oracle_word(&sys, &policy, alpha, 0, 0).unwrap();
        let finite = tables.finite_word(alpha).unwrap();
        assert_eq!(brute, finite, "alpha={alpha}");
    }
}

/// Full oracle grid on the B3 reference-row configuration.
#[test]
fn b3_reference_row_oracle_grid() {
    let sys = RootSystem::build(TypeLabel::B, 3).unwrap();
    let policy = OrderPolicy::weighted(3, vec![1, 2, 3], vec![4, 3, 1]).unwrap();
    let tables = WordTables::new(&sys, &policy);
    let report = verify::oracle_suite(&tables, 2, None).unwrap();
    assert!(
        report.pass(),
        "{:?}",
        report.checks.iter().find(|c| !c.pass)
    );
}

/// Oracle grid on D4 with small mixed weights and a non-identity order.
#[test]
fn d4_small_weight_oracle_grid() {
    let sys = RootSystem::build(TypeLabel::D, 4).unwrap();
    let policy = OrderPolicy::weighted(4, vec![3, 1, 2, 4], vec![2, 1, 2, 1]).unwrap();
    let tables = WordTables::new(&sys, &policy);
    let report = verify::oracle_suite(&tables, 2, None).unwrap();
    assert!(
        report.pass(),
        "{:?}",
        report.checks.iter().find(|c| !c.pass)
    );
}

/// The D4 reference-row weights are large; checking the highest root across
/// its whole window against the brute-force oracle takes a while.
#[test]
#[ignore = "heavy: large-weight D4 oracle sweep"]
fn d4_reference_row_oracle_theta_sweep() {
    let sys = RootSystem::build(TypeLabel::D, 4).unwrap();
    let policy = OrderPolicy::weighted(4, vec![3, 1, 2, 4], vec![4, 3, 7, 5]).unwrap();
    let tables = WordTables::new(&sys, &policy);
    let theta = sys.theta();
    let f = policy.weighted_height(theta).unwrap();
    for d in -f..=2 * f {
        let fast = tables.compute(theta, d, Engine::Fast).unwrap();
        let brute = oracle::oracle_word(&sys, &policy, theta, d, 3).unwrap();
        assert_eq!(fast, brute, "d={d}");
    }
}
