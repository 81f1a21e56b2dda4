//! Affine root lattice and Weyl-group machinery: reflections, translation
//! terminal sets, the `p_j` coweight constants, convex β-sequences, and
//! reduced-word extraction.
//!
//! Only real affine roots appear: pairs (finite root, level) with the
//! positivity rule `level > 0, or level = 0 and the finite part positive`.
//! Imaginary roots never enter any construction here.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::leclerc::{Engine, WordTables};
use crate::order::{OrderPolicy, Sign};
use crate::rootsys::{Root, RootSystem};
use crate::words::{cmp_words, LoopWord};

/// A real affine root `(λ, d)` with `λ ∈ Δ ∪ −Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRealRoot {
    pub finite: Vec<i64>,
    pub level: i64,
}

impl AffineRealRoot {
    pub fn new(finite: Vec<i64>, level: i64) -> AffineRealRoot {
        AffineRealRoot { finite, level }
    }

    pub fn from_root(root: &Root, level: i64) -> AffineRealRoot {
        AffineRealRoot::new(root.coeffs().to_vec(), level)
    }

    pub fn is_real(&self, sys: &RootSystem) -> bool {
        sys.is_root(&self.finite)
    }

    pub fn is_positive(&self, sys: &RootSystem) -> bool {
        self.level > 0 || (self.level == 0 && sys.is_positive_root(&self.finite))
    }

    pub fn add(&self, other: &AffineRealRoot) -> AffineRealRoot {
        AffineRealRoot::new(
            self.finite
                .iter()
                .zip(&other.finite)
                .map(|(a, b)| a + b)
                .collect(),
            self.level + other.level,
        )
    }
}

impl std::fmt::Display for AffineRealRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(({}), {})",
            self.finite
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.level
        )
    }
}

/// Nonnegative integer coweight coordinates `{p_j}` over the fundamental
/// coweights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightVector {
    pub p: Vec<i64>,
}

impl CoweightVector {
    pub fn new(p: Vec<i64>) -> CoweightVector {
        CoweightVector { p }
    }

    /// `(α, µ) = Σ k_j p_j` — fundamental coweights pair by coefficient.
    pub fn pair_with(&self, alpha: &Root) -> i64 {
        alpha.coeffs().iter().zip(&self.p).map(|(k, p)| k * p).sum()
    }
}

/// Simple affine reflection `s_i`, `i ∈ {0, 1, …, rank}`, acting on
/// `Q × Z`. For `i = 0`: `s_0(λ, d) = (λ − (λ,θ∨)θ, d + (λ,θ∨))`.
pub fn affine_reflect(sys: &RootSystem, i: usize, r: &AffineRealRoot) -> AffineRealRoot {
    if i == 0 {
        let c = sys.theta_coroot_pairing(&r.finite);
        let finite: Vec<i64> = r
            .finite
            .iter()
            .zip(sys.theta().coeffs())
            .map(|(x, t)| x - c * t)
            .collect();
        AffineRealRoot::new(finite, r.level + c)
    } else {
        let c = sys.coroot_pairing(i, &r.finite);
        let mut finite = r.finite.clone();
        finite[i - 1] -= c;
        AffineRealRoot::new(finite, r.level)
    }
}

/// The terminal set of the translation by a dominant regular coweight:
/// `E_µ̂ = {(α, d) : α ∈ Δ⁺, 0 ≤ d < (α, µ)}`.
pub fn translation_terminal_set(
    sys: &RootSystem,
    mu: &CoweightVector,
) -> Result<Vec<AffineRealRoot>> {
    if mu.p.len() != sys.rank() {
        return Err(Error::Precondition("coweight has wrong rank".into()));
    }
    if mu.p.iter().any(|&c| c <= 0) {
        return Err(Error::Precondition(
            "translation terminal sets need (α_i, µ) > 0 for all i".into(),
        ));
    }
    let mut out = Vec::new();
    for alpha in sys.positive_roots() {
        let bound = mu.pair_with(alpha);
        for d in 0..bound {
            out.push(AffineRealRoot::from_root(alpha, d));
        }
    }
    Ok(out)
}

/// The constants `{p_j}` of the lower segment below the letter `i^(-d)`:
/// `p_j` is the least integer with `j^(-p_j) ≥ i^(-d)`, evaluated exactly.
/// In weighted mode this is the four-case ceiling formula on `d·c_j/c_i`.
pub fn p_constants(
    sys: &RootSystem,
    policy: &OrderPolicy,
    i: usize,
    d: i64,
) -> Result<CoweightVector> {
    if d < 0 {
        return Err(Error::Precondition("p-constants need d ≥ 0".into()));
    }
    if i < 1 || i > sys.rank() {
        return Err(Error::Precondition(format!("node {i} out of range")));
    }
    let mut p = Vec::with_capacity(sys.rank());
    for j in 1..=sys.rank() {
        if j == i {
            p.push(d);
            continue;
        }
        // Solve r = the relative-exponent ratio: p_j jumps at f_j(-p) = f_i(-d).
        let (num, den) = ratio_for(policy, i, j, d);
        let integral = num % den == 0;
        let quotient = num / den;
        let value = if !integral {
            num.div_euclid(den) + 1 // ceiling for positive den
        } else if policy.position(j) > policy.position(i) {
            quotient
        } else {
            quotient + 1
        };
        p.push(value);
    }
    Ok(CoweightVector::new(p))
}

/// Returns `(num, den)` with `den > 0` such that the tie point is
/// `p_j = num/den`: weighted `d·c_j/c_i`; generalized `(a_i⁻/a_j⁻)·d`.
fn ratio_for(policy: &OrderPolicy, i: usize, j: usize, d: i64) -> (i64, i64) {
    use crate::order::ExponentRule;
    match policy.rule() {
        ExponentRule::Weighted { weights } => (d * weights[j - 1], weights[i - 1]),
        ExponentRule::Generalized { neg, .. } => {
            let ai = neg[i - 1];
            let aj = neg[j - 1];
            // (ai/aj)·d = ai.num·aj.den·d / (ai.den·aj.num)
            let num = ai.num() * aj.den() * d;
            let den = ai.den() * aj.num();
            if den < 0 {
                (-num, -den)
            } else {
                (num, den)
            }
        }
    }
}

/// `p(α) = Σ k_i p_i`.
pub fn p_of_alpha(p: &CoweightVector, alpha: &Root) -> i64 {
    p.pair_with(alpha)
}

/// The strict lower segment `L_{<(i,d)} = {(α,p) : ℓ(α,−p) < [i^(−d)], p ≥ 0}`,
/// computed both word-by-word and by the `p_j` formula. The two computations
/// must coincide; disagreement is an invariant violation. The returned list is
/// sorted by increasing `ℓ(α,−p)`.
pub fn terminal_segment(tables: &WordTables<'_>, i: usize, d: i64) -> Result<Vec<(Root, i64)>> {
    let sys = tables.system();
    let policy = tables.policy();
    if d < 0 {
        return Err(Error::Precondition("terminal segments need d ≥ 0".into()));
    }
    let cutoff = LoopWord::single(i, -d);

    // (a) word-level scan; monotonicity in p makes the set an initial segment.
    let mut word_level: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
    for alpha in sys.positive_roots() {
        let mut p = 0i64;
        loop {
            let w = tables.compute(alpha, -p, Engine::Fast)?;
            if cmp_words(policy, &w, &cutoff) == Ordering::Less {
                word_level.insert((alpha.coeffs().to_vec(), p));
                p += 1;
            } else {
                break;
            }
        }
    }

    // (b) formula-level rectangle 0 ≤ p < p(α).
    let constants = p_constants(sys, policy, i, d)?;
    let mut formula_level: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
    for alpha in sys.positive_roots() {
        for p in 0..p_of_alpha(&constants, alpha) {
            formula_level.insert((alpha.coeffs().to_vec(), p));
        }
    }

    if word_level != formula_level {
        return Err(Error::Invariant(format!(
            "terminal segment mismatch at (i={i}, d={d}): word-level {} vs formula-level {}",
            word_level.len(),
            formula_level.len()
        )));
    }

    let mut out: Vec<(Root, i64)> = word_level
        .into_iter()
        .map(|(coeffs, p)| (Root::new(coeffs), p))
        .collect();
    sort_by_word_order(tables, &mut out)?;
    Ok(out)
}

fn sort_by_word_order(tables: &WordTables<'_>, items: &mut [(Root, i64)]) -> Result<()> {
    let policy = tables.policy();
    let mut keyed: Vec<(LoopWord, Root, i64)> = Vec::with_capacity(items.len());
    for (alpha, p) in items.iter() {
        let w = tables.compute(alpha, -p, Engine::Fast)?;
        keyed.push((w, alpha.clone(), *p));
    }
    keyed.sort_by(|a, b| cmp_words(policy, &a.0, &b.0));
    for (slot, (_, alpha, p)) in items.iter_mut().zip(keyed) {
        *slot = (alpha, p);
    }
    Ok(())
}

/// Entries `k_min ..= k_max` of the bi-infinite convex listing of `Δ⁺ × Z`
/// whose position order equals the increasing lexicographic order of
/// `ℓ(α, −d)`. Position 0 is the smallest entry with `d ≥ 0`; negative
/// positions have `d < 0`. Weighted mode (periodic blocks).
pub fn beta_sequence(
    tables: &WordTables<'_>,
    k_min: i64,
    k_max: i64,
) -> Result<Vec<AffineRealRoot>> {
    let sys = tables.system();
    let policy = tables.policy();
    if !policy.is_weighted() {
        return Err(Error::Unsupported(
            "the periodic beta sequence requires a weighted policy; use beta_sequence_block".into(),
        ));
    }
    // The fundamental block L = {(α,d) : 0 ≤ d < f(α)} sorted by ℓ(α,−d).
    let mut block: Vec<(Root, i64)> = Vec::new();
    for alpha in sys.positive_roots() {
        let f = policy.weighted_height(alpha).expect("weighted");
        for d in 0..f {
            block.push((alpha.clone(), d));
        }
    }
    sort_by_word_order(tables, &mut block)?;
    let l = block.len() as i64;

    let mut out = Vec::new();
    for k in k_min..=k_max {
        let q = k.div_euclid(l);
        let r = k.rem_euclid(l) as usize;
        let (alpha, d) = &block[r];
        let f = policy.weighted_height(alpha).expect("weighted");
        out.push(AffineRealRoot::from_root(alpha, d + q * f));
    }
    Ok(out)
}

/// Generalized-mode β-sequence built from the depth-`s` blocks
/// `L^[s] = E_{µ̂^(+,s)}` (and the mirror block on the negative side).
/// Entries near the window boundary stabilize as `s` grows; the requested
/// range must fit inside the blocks.
///
/// The listing is always the word order. Whether it is also a reduced-word
/// order depends on the slope family: blocks of sign-symmetric families (and
/// every weighted policy) extract via [`extract_reduced_word`], while for
/// asymmetric slopes the block may fail to be a lower set of the word order
/// and extraction then reports [`Error::NotReducedWordOrder`]. Lower segments
/// from [`terminal_segment`] extract unconditionally.
pub fn beta_sequence_block(
    tables: &WordTables<'_>,
    s: i64,
    k_min: i64,
    k_max: i64,
) -> Result<Vec<AffineRealRoot>> {
    let sys = tables.system();
    let policy = tables.policy();
    let ladder = policy.marker_ladder();

    let mut nonneg: Vec<(Root, i64)> = Vec::new();
    let mut negative: Vec<(Root, i64)> = Vec::new();
    for alpha in sys.positive_roots() {
        let hi = policy.f_marker(&ladder, Sign::Plus, s, alpha);
        let lo = policy.f_marker(&ladder, Sign::Minus, s, alpha);
        for d in 0..hi {
            nonneg.push((alpha.clone(), d));
        }
        for d in lo..0 {
            negative.push((alpha.clone(), d));
        }
    }
    sort_by_word_order(tables, &mut nonneg)?;
    sort_by_word_order(tables, &mut negative)?;

    if k_max >= nonneg.len() as i64 || -k_min > negative.len() as i64 {
        return Err(Error::WindowExhausted(format!(
            "blocks at depth s={s} hold positions {}..{}",
            -(negative.len() as i64),
            nonneg.len() as i64 - 1
        )));
    }
    let mut out = Vec::new();
    for k in k_min..=k_max {
        let (alpha, d) = if k >= 0 {
            &nonneg[k as usize]
        } else {
            // Position −1 is the largest entry of the negative half.
            &negative[negative.len() - (-k) as usize]
        };
        out.push(AffineRealRoot::from_root(alpha, *d));
    }
    Ok(out)
}

/// Greedy reduced-word extraction from a convex-ordered list of positive
/// affine roots: the smallest remaining root must be a simple affine root
/// `α_j` (with `α_0 = (−θ, 1)`); emit `j`, reflect the rest by `s_j`, repeat.
pub fn extract_reduced_word(sys: &RootSystem, ordered: &[AffineRealRoot]) -> Result<Vec<usize>> {
    for r in ordered {
        if !r.is_real(sys) || !r.is_positive(sys) {
            return Err(Error::Precondition(format!(
                "{r} is not a positive real affine root"
            )));
        }
    }
    let mut remaining: Vec<AffineRealRoot> = ordered.to_vec();
    let mut word = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let head = remaining.remove(0);
        let j = simple_affine_index(sys, &head).ok_or_else(|| {
            Error::NotReducedWordOrder(format!(
                "smallest remaining root {head} is not simple affine"
            ))
        })?;
        word.push(j);
        for r in &mut remaining {
            *r = affine_reflect(sys, j, r);
        }
    }
    Ok(word)
}

fn simple_affine_index(sys: &RootSystem, r: &AffineRealRoot) -> Option<usize> {
    if r.level == 0 {
        let ones: Vec<usize> = r
            .finite
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect();
        if ones.len() == 1 && r.finite[ones[0]] == 1 {
            return Some(ones[0] + 1);
        }
        None
    } else if r.level == 1 {
        let neg_theta: Vec<i64> = sys.theta().coeffs().iter().map(|c| -c).collect();
        if r.finite == neg_theta {
            return Some(0);
        }
        None
    } else {
        None
    }
}

/// Rebuilds the ordered terminal set realized by an extracted word:
/// `α_{i_0} < s_{i_0}(α_{i_{-1}}) < s_{i_0}s_{i_{-1}}(α_{i_{-2}}) < …`.
pub fn terminal_set_of_word(sys: &RootSystem, word: &[usize]) -> Vec<AffineRealRoot> {
    let simple = |j: usize| {
        if j == 0 {
            AffineRealRoot::new(sys.theta().coeffs().iter().map(|c| -c).collect(), 1)
        } else {
            let mut v = vec![0i64; sys.rank()];
            v[j - 1] = 1;
            AffineRealRoot::new(v, 0)
        }
    };
    let mut out = Vec::with_capacity(word.len());
    for (t, &j) in word.iter().enumerate() {
        let mut r = simple(j);
        for &k in word[..t].iter().rev() {
            r = affine_reflect(sys, k, &r);
        }
        out.push(r);
    }
    out
}
