//! Runnable cross-check suites over configurable grids.
//!
//! Each suite walks a grid of `(α, d)` cells, records one labelled outcome
//! per checked instance, and never stops early: a report carries every
//! failure it found. The CLI `verify` command and the acceptance tests are
//! both thin wrappers around these functions.

use std::cmp::Ordering;

use crate::error::Result;
use crate::leclerc::{Engine, WordTables};
use crate::oracle;
use crate::order::{OrderPolicy, Sign};
use crate::rootsys::{Root, RootSystem};
use crate::typea;
use crate::weyl::{self, CoweightVector};
use crate::words::{cmp_words, is_exponent_tight, is_lyndon, upsilon, LoopWord};

/// Outcome of one checked instance.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

/// Deterministic generator for the sampled suites.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n.max(1)
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// The `d`-range a suite walks for a root: `[-f(α), 2f(α)]` in weighted mode,
/// a fixed interval otherwise.
pub fn grid_range(policy: &OrderPolicy, alpha: &Root, range: Option<(i64, i64)>) -> (i64, i64) {
    if let Some(r) = range {
        return r;
    }
    match policy.weighted_height(alpha) {
        Ok(f) => (-f, 2 * f),
        Err(_) => (-4, 8),
    }
}

/// The `d` interval of degree `α` representable over the window `I^(s)`.
pub fn representable_range(policy: &OrderPolicy, alpha: &Root, s: i64) -> (i64, i64) {
    let ladder = policy.marker_ladder();
    (
        policy.f_marker(&ladder, Sign::Minus, s, alpha),
        policy.f_marker(&ladder, Sign::Plus, s, alpha),
    )
}

/// Exponent-tightness of every computed word on the grid.
pub fn tightness_suite(tables: &WordTables<'_>, range: Option<(i64, i64)>) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    for alpha in sys.positive_roots() {
        let (lo, hi) = grid_range(tables.policy(), alpha, range);
        for d in lo..=hi {
            let w = tables.compute(alpha, d, Engine::Fast)?;
            let ok = is_exponent_tight(tables.policy(), &w);
            report.push(format!("tight({alpha},{d})"), ok, w.to_string());
        }
    }
    Ok(report)
}

/// `ℓ(α, d) < ℓ(α, d−1)` across the grid.
pub fn monotonicity_suite(tables: &WordTables<'_>, range: Option<(i64, i64)>) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    for alpha in sys.positive_roots() {
        let (lo, hi) = grid_range(tables.policy(), alpha, range);
        for d in lo..=hi {
            let high = tables.compute(alpha, d, Engine::Fast)?;
            let low = tables.compute(alpha, d - 1, Engine::Fast)?;
            let ok = cmp_words(tables.policy(), &high, &low) == Ordering::Less;
            report.push(format!("mono({alpha},{d})"), ok, format!("{high} vs {low}"));
        }
    }
    Ok(report)
}

/// `ℓ(α, d + f(α)) = Υ ℓ(α, d)`; weighted mode only.
pub fn periodicity_suite(tables: &WordTables<'_>, range: Option<(i64, i64)>) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    for alpha in sys.positive_roots() {
        let f = tables.policy().weighted_height(alpha)?;
        let (lo, hi) = grid_range(tables.policy(), alpha, range);
        for d in lo..=hi {
            let base = tables.compute(alpha, d, Engine::Fast)?;
            let next = tables.compute(alpha, d + f, Engine::Fast)?;
            let shifted = upsilon(tables.policy(), &base, 1)?;
            report.push(
                format!("period({alpha},{d})"),
                next == shifted,
                format!("{next} vs {shifted}"),
            );
        }
    }
    Ok(report)
}

/// `ℓ(α, 0)` equals the finite-type standard word.
pub fn finite_restriction_suite(tables: &WordTables<'_>) -> Result<Report> {
    let mut report = Report::default();
    for alpha in tables.system().positive_roots() {
        let loop_word = tables.compute(alpha, 0, Engine::Fast)?;
        let finite = tables.finite_word(alpha)?;
        report.push(
            format!("d0({alpha})"),
            loop_word == finite,
            loop_word.to_string(),
        );
    }
    Ok(report)
}

/// First-letter sign rule: exponent > 0 iff `d > 0` (the zero marker), and in
/// generalized mode the depth-1 marker refinement from the marker ladder.
pub fn first_letter_suite(tables: &WordTables<'_>, range: Option<(i64, i64)>) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    let policy = tables.policy();
    let ladder = policy.marker_ladder();
    for alpha in sys.positive_roots() {
        let (lo, hi) = grid_range(policy, alpha, range);
        for d in lo..=hi {
            let w = tables.compute(alpha, d, Engine::Fast)?;
            let first = w.first();
            let ok = if d > 0 {
                first.exponent > 0
            } else {
                first.exponent <= 0
            };
            report.push(format!("sign({alpha},{d})"), ok, w.to_string());

            // Depth-1 markers: d > f_N(α) ⟺ first exponent > N_j.
            let markers = ladder.markers(Sign::Plus, 1);
            let f_n = policy.f_marker(&ladder, Sign::Plus, 1, alpha);
            let bound = markers[first.index - 1];
            let marker_ok = if d > f_n {
                first.exponent > bound
            } else {
                first.exponent <= bound
            };
            report.push(format!("marker({alpha},{d})"), marker_ok, w.to_string());
        }
    }
    Ok(report)
}

/// Convexity `ℓ(α,d) < ℓ(α+β,d+e) < ℓ(β,e)` on every valid triple of the grid.
pub fn convexity_suite(tables: &WordTables<'_>, range: Option<(i64, i64)>) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    let policy = tables.policy();
    for alpha in sys.positive_roots() {
        for beta in sys.positive_roots() {
            let Some(sum) = sys.add_roots(alpha, beta) else {
                continue;
            };
            let (alo, ahi) = grid_range(policy, alpha, range);
            let (blo, bhi) = grid_range(policy, beta, range);
            for d in alo..=ahi {
                let wa = tables.compute(alpha, d, Engine::Fast)?;
                for e in blo..=bhi {
                    let wb = tables.compute(beta, e, Engine::Fast)?;
                    if cmp_words(policy, &wa, &wb) != Ordering::Less {
                        continue;
                    }
                    let mid = tables.compute(&sum, d + e, Engine::Fast)?;
                    let ok = cmp_words(policy, &wa, &mid) == Ordering::Less
                        && cmp_words(policy, &mid, &wb) == Ordering::Less;
                    report.push(
                        format!("convex({alpha},{d};{beta},{e})"),
                        ok,
                        mid.to_string(),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Minimality of costandard-type pairs: when `ℓ1 ℓ2` is itself the standard
/// Lyndon word of the summed degree, no standard Lyndon `ℓ1 < ℓ1' < ℓ2' < ℓ2`
/// with the same degree sum exists. Exhaustive over a certified exponent
/// window; weighted mode only.
pub fn minimality_suite(tables: &WordTables<'_>, range: Option<(i64, i64)>) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    let policy = tables.policy();
    if !policy.is_weighted() {
        return Err(crate::error::Error::Unsupported(
            "the minimality scan's exponent window needs a weighted policy".into(),
        ));
    }
    for alpha in sys.positive_roots() {
        for beta in sys.positive_roots() {
            let Some(sum) = sys.add_roots(alpha, beta) else {
                continue;
            };
            let (alo, ahi) = grid_range(policy, alpha, range);
            let (blo, bhi) = grid_range(policy, beta, range);
            for d in alo..=ahi {
                let w1 = tables.compute(alpha, d, Engine::Fast)?;
                for e in blo..=bhi {
                    let w2 = tables.compute(beta, e, Engine::Fast)?;
                    if cmp_words(policy, &w1, &w2) != Ordering::Less {
                        continue;
                    }
                    let joined = tables.compute(&sum, d + e, Engine::Fast)?;
                    if w1.concat(&w2) != joined {
                        continue;
                    }
                    let witness = minimality_witness(tables, &sum, d + e, &w1, &w2)?;
                    report.push(
                        format!("minimal({alpha},{d};{beta},{e})"),
                        witness.is_none(),
                        witness
                            .map(|(a, b)| format!("violated by {a} {b}"))
                            .unwrap_or_default(),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Searches for standard Lyndon `ℓ1 < w1 < w2 < ℓ2` with matching degree sum.
/// Every letter of a word strictly between `ℓ1` and `ℓ2` has its relative
/// exponent within `[rel(first ℓ2) − 1, rel(first ℓ1)]` (Lyndon minimality
/// below, exponent-tightness above), which bounds the exponent scan.
fn minimality_witness(
    tables: &WordTables<'_>,
    sum: &Root,
    total: i64,
    l1: &LoopWord,
    l2: &LoopWord,
) -> Result<Option<(LoopWord, LoopWord)>> {
    let sys = tables.system();
    let policy = tables.policy();
    let r_hi = policy.relative_exponent(l1.first());
    let r_lo = policy.relative_exponent(l2.first()).minus_int(1);
    for gamma1 in sys.positive_roots() {
        let gamma2 = Root::new(
            sum.coeffs()
                .iter()
                .zip(gamma1.coeffs())
                .map(|(s, g)| s - g)
                .collect(),
        );
        if !gamma2.is_nonnegative() || gamma2.height() == 0 {
            continue;
        }
        if !sys.is_positive_root(gamma2.coeffs()) {
            continue;
        }
        let f1 = policy.weighted_height(gamma1)?;
        let d_min = r_lo.times_int(f1).ceil();
        let d_max = r_hi.times_int(f1).floor();
        for d1 in d_min..=d_max {
            let w1 = tables.compute(gamma1, d1, Engine::Fast)?;
            if cmp_words(policy, l1, &w1) != Ordering::Less {
                continue;
            }
            let w2 = tables.compute(&gamma2, total - d1, Engine::Fast)?;
            if cmp_words(policy, &w1, &w2) == Ordering::Less
                && cmp_words(policy, &w2, l2) == Ordering::Less
            {
                return Ok(Some((w1, w2)));
            }
        }
    }
    Ok(None)
}

/// Several-summand bound on random degree-equal decompositions:
/// `min ℓ over one side ≤ max ℓ over the other`.
pub fn summand_suite(tables: &WordTables<'_>, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    let policy = tables.policy();
    let mut rng = SplitMix64::new(seed);
    let roots = sys.positive_roots();
    for trial in 0..samples {
        let alpha = &roots[rng.below(roots.len() as u64) as usize];
        let span = policy.weighted_height(alpha).unwrap_or(6);
        let d = rng.range(-span, 2 * span);
        let left = random_decomposition(tables, &mut rng, alpha, d, 3);
        let right = random_decomposition(tables, &mut rng, alpha, d, 3);
        let words_of = |parts: &[(Root, i64)]| -> Result<Vec<LoopWord>> {
            parts
                .iter()
                .map(|(g, e)| tables.compute(g, *e, Engine::Fast))
                .collect()
        };
        let lw = words_of(&left)?;
        let rw = words_of(&right)?;
        let min_left = lw
            .iter()
            .min_by(|a, b| cmp_words(policy, a, b))
            .expect("nonempty");
        let max_right = rw
            .iter()
            .max_by(|a, b| cmp_words(policy, a, b))
            .expect("nonempty");
        let ok = cmp_words(policy, min_left, max_right) != Ordering::Greater;
        report.push(
            format!("summand#{trial}({alpha},{d})"),
            ok,
            format!("{min_left} vs {max_right}"),
        );
    }
    Ok(report)
}

fn random_decomposition(
    tables: &WordTables<'_>,
    rng: &mut SplitMix64,
    alpha: &Root,
    d: i64,
    depth: usize,
) -> Vec<(Root, i64)> {
    let sys = tables.system();
    if depth == 0 || alpha.height() == 1 || rng.below(3) == 0 {
        return vec![(alpha.clone(), d)];
    }
    let splits = sys.splittings(alpha);
    if splits.is_empty() {
        return vec![(alpha.clone(), d)];
    }
    let (g1, g2) = splits[rng.below(splits.len() as u64) as usize].clone();
    let d1 = rng.range(d.min(0) - 2, d.max(0) + 2);
    let mut out = random_decomposition(tables, rng, &g1, d1, depth - 1);
    out.extend(random_decomposition(tables, rng, &g2, d - d1, depth - 1));
    out
}

/// Oracle = Fast (= Naive in weighted mode) across the grid, plus window
/// stability of the oracle on a subsample. The per-root range is clamped to
/// the degrees representable over `I^(s)`.
pub fn oracle_suite(tables: &WordTables<'_>, s: i64, range: Option<(i64, i64)>) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    let policy = tables.policy();
    for alpha in sys.positive_roots() {
        let (lo, hi) = grid_range(policy, alpha, range);
        let (rlo, rhi) = representable_range(policy, alpha, s);
        let (lo, hi) = (lo.max(rlo), hi.min(rhi));
        for d in lo..=hi {
            let fast = tables.compute(alpha, d, Engine::Fast)?;
            let orc = oracle::oracle_word(sys, policy, alpha, d, s)?;
            let mut ok = fast == orc;
            let mut detail = format!("fast {fast} oracle {orc}");
            if policy.is_weighted() {
                let naive = tables.compute(alpha, d, Engine::Naive)?;
                ok = ok && naive == fast;
                detail.push_str(&format!(" naive {naive}"));
            }
            report.push(format!("oracle({alpha},{d})"), ok, detail);

            // Stability spot check near the middle of the range.
            if (-2..=4).contains(&d) {
                let wider = oracle::oracle_word(sys, policy, alpha, d, s + 1)?;
                report.push(
                    format!("stable({alpha},{d})"),
                    wider == orc,
                    format!("s={s}: {orc}, s+1: {wider}"),
                );
            }
        }
    }
    Ok(report)
}

/// Affine Weyl cross-checks: β-sequence vs lexicographic order, reduced-word
/// extraction on the fundamental block and on terminal segments, and the
/// translation length identity on random dominant coweights.
pub fn weyl_suite(
    tables: &WordTables<'_>,
    beta_count: i64,
    mu_samples: usize,
    seed: u64,
) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    let policy = tables.policy();

    // β order vs lexicographic order of the words ℓ(α, −d).
    let entries = weyl::beta_sequence(tables, 0, beta_count - 1)?;
    let mut expected: Vec<(LoopWord, Vec<i64>, i64)> = Vec::new();
    let blocks = (beta_count / entries_per_block(tables)? + 2).max(2);
    for alpha in sys.positive_roots() {
        let f = policy.weighted_height(alpha)?;
        for d in 0..blocks * f {
            let w = tables.compute(alpha, -d, Engine::Fast)?;
            expected.push((w, alpha.coeffs().to_vec(), d));
        }
    }
    expected.sort_by(|a, b| cmp_words(policy, &a.0, &b.0));
    for (k, entry) in entries.iter().enumerate() {
        let (_, coeffs, d) = &expected[k];
        let ok = &entry.finite == coeffs && entry.level == *d;
        report.push(
            format!("beta#{k}"),
            ok,
            format!("{entry} vs (({:?}),{d})", coeffs),
        );
    }

    // Affine convexity of the fundamental block: a sum of two listed roots
    // that is itself listed sits strictly between its summands.
    let l = entries_per_block(tables)?;
    let block = weyl::beta_sequence(tables, 0, l - 1)?;
    for (i, r1) in block.iter().enumerate() {
        for (j, r2) in block.iter().enumerate().skip(i + 1) {
            let sum = r1.add(r2);
            if let Some(k) = block.iter().position(|r| *r == sum) {
                report.push(
                    format!("block-convex#{i},{j}"),
                    i < k && k < j,
                    format!("{r1} + {r2} = {sum} at {k}"),
                );
            }
        }
    }

    // Reduced-word extraction on the fundamental block.
    match weyl::extract_reduced_word(sys, &block) {
        Ok(word) => {
            let rebuilt = weyl::terminal_set_of_word(sys, &word);
            report.push(
                "extract(L)",
                rebuilt == block,
                format!("word length {}", word.len()),
            );
        }
        Err(e) => report.push("extract(L)", false, e.to_string()),
    }

    // Terminal segments: word-level vs formula-level agreement is asserted
    // inside terminal_segment; extraction must succeed on each.
    let max_c = policy
        .weights()
        .map(|w| w.iter().copied().max().unwrap_or(1))
        .unwrap_or(1);
    for i in 1..=sys.rank() {
        for d in 0..=3 * max_c {
            match weyl::terminal_segment(tables, i, d) {
                Ok(segment) => {
                    let affine: Vec<_> = segment
                        .iter()
                        .map(|(alpha, p)| weyl::AffineRealRoot::from_root(alpha, *p))
                        .collect();
                    match weyl::extract_reduced_word(sys, &affine) {
                        Ok(word) => {
                            let rebuilt = weyl::terminal_set_of_word(sys, &word);
                            report.push(
                                format!("segment({i},{d})"),
                                rebuilt == affine,
                                format!("|L|={}", affine.len()),
                            );
                        }
                        Err(e) => report.push(format!("segment({i},{d})"), false, e.to_string()),
                    }
                }
                Err(e) => report.push(format!("segment({i},{d})"), false, e.to_string()),
            }
        }
    }

    // |E_µ̂| = Σ (α, µ) over random dominant µ.
    let mut rng = SplitMix64::new(seed);
    for trial in 0..mu_samples {
        let mu = CoweightVector::new((0..sys.rank()).map(|_| rng.range(1, 6)).collect());
        let set = weyl::translation_terminal_set(sys, &mu)?;
        let expected: i64 = sys.positive_roots().iter().map(|r| mu.pair_with(r)).sum();
        report.push(
            format!("length#{trial}"),
            set.len() as i64 == expected,
            format!("|E|={} Σ={expected}", set.len()),
        );
    }
    Ok(report)
}

fn entries_per_block(tables: &WordTables<'_>) -> Result<i64> {
    let mut total = 0i64;
    for alpha in tables.system().positive_roots() {
        total += tables.policy().weighted_height(alpha)?;
    }
    Ok(total)
}

/// Type-A closed forms against the fast engine, plus the B/C/D multiset rule
/// against the first-letter chain.
pub fn typea_suite(n: usize, weights: &[i64]) -> Result<Report> {
    let mut report = Report::default();
    let sys = RootSystem::build(crate::rootsys::TypeLabel::A, n)?;
    let policy = OrderPolicy::weighted(n, (1..=n).collect(), weights.to_vec())?;
    let tables = WordTables::new(&sys, &policy);
    let span: i64 = weights.iter().sum();
    for d in 1..=span {
        let closed = typea::closed_form_word(n, weights, d)?;
        let engine = tables.compute(sys.theta(), d, Engine::Fast)?;
        report.push(
            format!("closed(A{n},{d})"),
            closed == engine,
            format!("{closed} vs {engine}"),
        );
    }
    Ok(report)
}

/// B/C/D multiset rule vs the first-letter chain for one root.
pub fn bcd_suite(sys: &RootSystem, weights: &[i64], alpha: &Root) -> Result<Report> {
    let mut report = Report::default();
    let n = sys.rank();
    let policy = OrderPolicy::weighted(n, (1..=n).collect(), weights.to_vec())?;
    let tables = WordTables::new(sys, &policy);
    let mults = alpha.coeffs().to_vec();
    let span: i64 = weights.iter().zip(&mults).map(|(c, m)| c * m).sum();
    for d in 1..=span {
        let rule = typea::bcd_multiset(weights, &mults, d)?;
        let chain = tables.multiset_chain(alpha, d)?;
        report.push(
            format!("bcd({alpha},{d})"),
            rule == chain,
            format!("{rule} vs {chain}"),
        );
    }
    Ok(report)
}

/// Generalized-order checks: Fast = Oracle over a fixed `d` interval, and the
/// marker lift `ℓ(α, f_N(α)) = ℓ(α, 0)` with exponents raised to `N_i`.
pub fn generalized_suite(
    tables: &WordTables<'_>,
    s: i64,
    d_range: (i64, i64),
    marker_depth: i64,
) -> Result<Report> {
    let mut report = Report::default();
    let sys = tables.system();
    let policy = tables.policy();
    for alpha in sys.positive_roots() {
        for d in d_range.0..=d_range.1 {
            let fast = tables.compute(alpha, d, Engine::Fast)?;
            let orc = oracle::oracle_word(sys, policy, alpha, d, s)?;
            report.push(
                format!("gen-oracle({alpha},{d})"),
                fast == orc,
                format!("{fast} vs {orc}"),
            );
        }
    }

    let ladder = policy.marker_ladder();
    for alpha in sys.positive_roots() {
        let zero = tables.compute(alpha, 0, Engine::Fast)?;
        for sign in [Sign::Plus, Sign::Minus] {
            for s_level in 1..=marker_depth {
                let markers = ladder.markers(sign, s_level);
                let f_n = policy.f_marker(&ladder, sign, s_level, alpha);
                let lifted = LoopWord::new(
                    zero.letters()
                        .iter()
                        .map(|l| crate::words::LoopLetter::new(l.index, markers[l.index - 1]))
                        .collect(),
                );
                let computed = tables.compute(alpha, f_n, Engine::Fast)?;
                report.push(
                    format!("marker-lift({alpha},{sign:?},{s_level})"),
                    computed == lifted && is_lyndon(policy, &computed),
                    format!("{computed} vs {lifted}"),
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeLabel;

    #[test]
    fn small_weighted_suites_pass() {
        let sys = RootSystem::build(TypeLabel::A, 2).unwrap();
        let policy = OrderPolicy::weighted(2, vec![1, 2], vec![2, 1]).unwrap();
        let tables = WordTables::new(&sys, &policy);
        assert!(tightness_suite(&tables, Some((-4, 4))).unwrap().pass());
        assert!(monotonicity_suite(&tables, Some((-4, 4))).unwrap().pass());
        assert!(periodicity_suite(&tables, Some((-4, 4))).unwrap().pass());
        assert!(finite_restriction_suite(&tables).unwrap().pass());
        assert!(first_letter_suite(&tables, Some((-4, 4))).unwrap().pass());
        assert!(convexity_suite(&tables, Some((-4, 4))).unwrap().pass());
        assert!(minimality_suite(&tables, Some((-4, 4))).unwrap().pass());
        assert!(summand_suite(&tables, 50, 7).unwrap().pass());
        assert!(oracle_suite(&tables, 3, Some((-4, 4))).unwrap().pass());
    }

    #[test]
    fn weyl_suite_passes_on_a2() {
        let sys = RootSystem::build(TypeLabel::A, 2).unwrap();
        let policy = OrderPolicy::standard(2);
        let tables = WordTables::new(&sys, &policy);
        let report = weyl_suite(&tables, 30, 5, 11).unwrap();
        assert!(
            report.pass(),
            "{:?}",
            report.checks.iter().find(|c| !c.pass)
        );
    }

    #[test]
    fn typea_suites_pass() {
        assert!(typea_suite(3, &[1, 2, 6]).unwrap().pass());
        let c3 = RootSystem::build(TypeLabel::C, 3).unwrap();
        let theta = c3.theta().clone();
        assert!(bcd_suite(&c3, &[1, 2, 4], &theta).unwrap().pass());
    }
}
