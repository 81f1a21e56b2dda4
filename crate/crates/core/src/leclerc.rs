//! The bijection `(α, d) ↦ ℓ(α, d)` from `Δ⁺ × Z` to standard Lyndon loop
//! words, computed by the maximal-splitting recursion
//!
//! ```text
//! ℓ(α, d) = max { ℓ(γ1,d1) ℓ(γ2,d2) : (γ1,d1)+(γ2,d2) = (α,d), ℓ(γ1,d1) < ℓ(γ2,d2) }
//! ```
//!
//! with `ℓ(α_i, d) = [i^(d)]`, in two variants:
//!
//! * **Naive** — exponent splits bounded by the relative-exponent window
//!   `⌊d/f(α)⌋ ≤ d_r/c_r ≤ ⌈d/f(α)⌉`; weighted mode only.
//! * **Fast** — splits restricted to those whose letter multisets partition
//!   the multiset of `ℓ(α,d)`, which is known in advance from the
//!   first-letter chain; in weighted mode `d` is first reduced to `[0, f(α))`
//!   by the periodicity map.
//!
//! The restriction in the fast engine is sound because the costandard
//! factorization of `ℓ(α,d)` is itself multiset-consistent: both factors are
//! standard, hence exponent-tight, and exponent-tight words of a fixed degree
//! have a unique letter multiset — so the restricted maximum attains the
//! unrestricted one.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::oracle;
use crate::order::OrderPolicy;
use crate::rootsys::{Root, RootSystem};
use crate::words::{canonical_factorization, cmp_words, LetterMultiset, LoopLetter, LoopWord};

/// Which route computes the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Naive,
    Fast,
    /// Brute force over the bounded alphabet `I^(s)`.
    Oracle {
        window: i64,
    },
}

/// A single query against the tables.
#[derive(Debug, Clone)]
pub struct WordQuery<'a> {
    pub sys: &'a RootSystem,
    pub policy: &'a OrderPolicy,
    pub alpha: Root,
    pub d: i64,
    pub engine: Engine,
}

impl WordQuery<'_> {
    pub fn run(&self) -> Result<LoopWord> {
        let tables = WordTables::new(self.sys, self.policy);
        tables.compute(&self.alpha, self.d, self.engine)
    }
}

/// Memoized computation of standard Lyndon loop words for one root system and
/// one order policy. The caches are per-instance and never persisted; the
/// policy fingerprint of the memo key is implicit in the binding.
pub struct WordTables<'a> {
    sys: &'a RootSystem,
    policy: &'a OrderPolicy,
    finite: RefCell<HashMap<usize, LoopWord>>,
    naive: RefCell<HashMap<(usize, i64), LoopWord>>,
    fast: RefCell<HashMap<(usize, i64), LoopWord>>,
    chains: RefCell<HashMap<(usize, i64), LetterMultiset>>,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    // b > 0
    -((-a).div_euclid(b))
}

impl<'a> WordTables<'a> {
    pub fn new(sys: &'a RootSystem, policy: &'a OrderPolicy) -> WordTables<'a> {
        assert_eq!(sys.rank(), policy.rank(), "system and policy rank differ");
        WordTables {
            sys,
            policy,
            finite: RefCell::new(HashMap::new()),
            naive: RefCell::new(HashMap::new()),
            fast: RefCell::new(HashMap::new()),
            chains: RefCell::new(HashMap::new()),
        }
    }

    pub fn system(&self) -> &RootSystem {
        self.sys
    }

    pub fn policy(&self) -> &OrderPolicy {
        self.policy
    }

    fn root_index(&self, alpha: &Root) -> Result<usize> {
        self.sys
            .root_index(alpha)
            .ok_or_else(|| Error::Precondition(format!("{alpha} is not a positive root")))
    }

    /// The finite-type standard Lyndon word of degree `α`, with zero
    /// exponents attached.
    pub fn finite_word(&self, alpha: &Root) -> Result<LoopWord> {
        let idx = self.root_index(alpha)?;
        Ok(self.finite_by_index(idx))
    }

    fn finite_by_index(&self, idx: usize) -> LoopWord {
        if let Some(w) = self.finite.borrow().get(&idx) {
            return w.clone();
        }
        let root = self.sys.positive_roots()[idx].clone();
        let word = if root.height() == 1 {
            let i = root.coeffs().iter().position(|&c| c == 1).unwrap() + 1;
            LoopWord::single(i, 0)
        } else {
            let mut best: Option<LoopWord> = None;
            for (g1, g2) in self.sys.splittings(&root) {
                let w1 = self.finite_by_index(self.sys.root_index(&g1).unwrap());
                let w2 = self.finite_by_index(self.sys.root_index(&g2).unwrap());
                if cmp_words(self.policy, &w1, &w2) == Ordering::Less {
                    let cand = w1.concat(&w2);
                    if best
                        .as_ref()
                        .is_none_or(|b| cmp_words(self.policy, &cand, b) == Ordering::Greater)
                    {
                        best = Some(cand);
                    }
                }
            }
            best.expect("every non-simple root splits")
        };
        self.finite.borrow_mut().insert(idx, word.clone());
        word
    }

    /// The letter multiset of `ℓ(α, d)`, obtained from the zero-exponent
    /// multiset by `|d|` first-letter chain steps: upward, the letter whose
    /// bump is maximal is bumped; downward, the minimal letter is lowered.
    /// In weighted mode `d` is first reduced modulo `f(α)`.
    pub fn multiset_chain(&self, alpha: &Root, d: i64) -> Result<LetterMultiset> {
        let idx = self.root_index(alpha)?;
        if let Some(weights) = self.policy.weights() {
            let f = self.policy.weighted_height(alpha).expect("weighted");
            let q = d.div_euclid(f);
            let r = d.rem_euclid(f);
            let base = self.chain_by_index(idx, r);
            if q == 0 {
                return Ok(base);
            }
            let shifted: Vec<LoopLetter> = base
                .letters()
                .map(|l| LoopLetter::new(l.index, l.exponent + q * weights[l.index - 1]))
                .collect();
            return Ok(LetterMultiset::from_letters(&shifted));
        }
        Ok(self.chain_by_index(idx, d))
    }

    fn chain_by_index(&self, idx: usize, d: i64) -> LetterMultiset {
        if let Some(m) = self.chains.borrow().get(&(idx, d)) {
            return m.clone();
        }
        let mut t = 0i64;
        let mut current = {
            let zero = LetterMultiset::from_word(&self.finite_by_index(idx));
            self.chains
                .borrow_mut()
                .entry((idx, 0))
                .or_insert(zero)
                .clone()
        };
        // Walk towards d, reusing whatever prefix of the chain is memoized.
        let step = if d >= 0 { 1 } else { -1 };
        while t != d {
            t += step;
            if let Some(m) = self.chains.borrow().get(&(idx, t)) {
                current = m.clone();
                continue;
            }
            if step == 1 {
                let target = current.max_bumped(self.policy);
                current.remove(target.lowered());
                current.insert(target);
            } else {
                let min = current.min_letter(self.policy);
                current.remove(min);
                current.insert(min.lowered());
            }
            self.chains.borrow_mut().insert((idx, t), current.clone());
        }
        current
    }

    /// The standard Lyndon loop word `ℓ(α, d)` under the chosen engine.
    pub fn compute(&self, alpha: &Root, d: i64, engine: Engine) -> Result<LoopWord> {
        let idx = self.root_index(alpha)?;
        match engine {
            Engine::Naive => {
                if !self.policy.is_weighted() {
                    return Err(Error::Unsupported(
                        "the naive engine requires a weighted policy".into(),
                    ));
                }
                Ok(self.naive_by_index(idx, d))
            }
            Engine::Fast => Ok(self.fast_by_index(idx, d)),
            Engine::Oracle { window } => {
                oracle::oracle_word(self.sys, self.policy, alpha, d, window)
            }
        }
    }

    fn naive_by_index(&self, idx: usize, d: i64) -> LoopWord {
        if let Some(w) = self.naive.borrow().get(&(idx, d)) {
            return w.clone();
        }
        let root = self.sys.positive_roots()[idx].clone();
        let word = if root.height() == 1 {
            let i = root.coeffs().iter().position(|&c| c == 1).unwrap() + 1;
            LoopWord::single(i, d)
        } else {
            let f_alpha = self.policy.weighted_height(&root).expect("weighted");
            let lo = d.div_euclid(f_alpha);
            let hi = ceil_div(d, f_alpha);
            let mut best: Option<LoopWord> = None;
            for (g1, g2) in self.sys.splittings(&root) {
                let f1 = self.policy.weighted_height(&g1).expect("weighted");
                let f2 = self.policy.weighted_height(&g2).expect("weighted");
                let i1 = self.sys.root_index(&g1).unwrap();
                let i2 = self.sys.root_index(&g2).unwrap();
                for d1 in lo * f1..=hi * f1 {
                    let d2 = d - d1;
                    if d2 < lo * f2 || d2 > hi * f2 {
                        continue;
                    }
                    let w1 = self.naive_by_index(i1, d1);
                    let w2 = self.naive_by_index(i2, d2);
                    if cmp_words(self.policy, &w1, &w2) == Ordering::Less {
                        let cand = w1.concat(&w2);
                        if best
                            .as_ref()
                            .is_none_or(|b| cmp_words(self.policy, &cand, b) == Ordering::Greater)
                        {
                            best = Some(cand);
                        }
                    }
                }
            }
            best.expect("Leclerc maximum is attained")
        };
        self.naive.borrow_mut().insert((idx, d), word.clone());
        word
    }

    fn fast_by_index(&self, idx: usize, d: i64) -> LoopWord {
        if let Some(w) = self.fast.borrow().get(&(idx, d)) {
            return w.clone();
        }
        let root = self.sys.positive_roots()[idx].clone();

        // Weighted mode: reduce to the fundamental window via periodicity.
        if let Some(weights) = self.policy.weights() {
            let f = self.policy.weighted_height(&root).expect("weighted");
            let q = d.div_euclid(f);
            if q != 0 {
                let r = d.rem_euclid(f);
                let base = self.fast_by_index(idx, r);
                let shifted = LoopWord::new(
                    base.letters()
                        .iter()
                        .map(|l| LoopLetter::new(l.index, l.exponent + q * weights[l.index - 1]))
                        .collect(),
                );
                self.fast.borrow_mut().insert((idx, d), shifted.clone());
                return shifted;
            }
        }

        let word = if root.height() == 1 {
            let i = root.coeffs().iter().position(|&c| c == 1).unwrap() + 1;
            LoopWord::single(i, d)
        } else {
            let target = self.chain_by_index(idx, d);
            let mut best: Option<LoopWord> = None;
            for (g1, g2) in self.sys.splittings(&root) {
                let i1 = self.sys.root_index(&g1).unwrap();
                let i2 = self.sys.root_index(&g2).unwrap();
                for m1 in submultisets_with_hdeg(&target, &g1) {
                    let d1 = m1.vdeg();
                    let d2 = d - d1;
                    if self.chain_by_index(i1, d1) != m1 {
                        continue;
                    }
                    let m2 = target.subtract(&m1);
                    if self.chain_by_index(i2, d2) != m2 {
                        continue;
                    }
                    let w1 = self.fast_by_index(i1, d1);
                    let w2 = self.fast_by_index(i2, d2);
                    if cmp_words(self.policy, &w1, &w2) == Ordering::Less {
                        let cand = w1.concat(&w2);
                        if best
                            .as_ref()
                            .is_none_or(|b| cmp_words(self.policy, &cand, b) == Ordering::Greater)
                        {
                            best = Some(cand);
                        }
                    }
                }
            }
            best.expect("Leclerc maximum is attained")
        };
        debug_assert_eq!(word.hdeg(self.sys.rank()), root.coeffs());
        debug_assert_eq!(word.vdeg(), d);
        debug_assert!(crate::words::is_exponent_tight_lyndon(self.policy, &word));
        self.fast.borrow_mut().insert((idx, d), word.clone());
        word
    }

    /// A word is standard iff every factor of its canonical factorization is
    /// the standard Lyndon word of its degree.
    pub fn is_standard(&self, w: &LoopWord) -> bool {
        for factor in canonical_factorization(self.policy, w) {
            let hdeg = Root::new(factor.hdeg(self.sys.rank()));
            let Some(_) = self.sys.root_index(&hdeg) else {
                return false;
            };
            match self.compute(&hdeg, factor.vdeg(), Engine::Fast) {
                Ok(std_word) => {
                    if std_word != factor {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
        true
    }
}

/// All sub-multisets of `m` whose horizontal degree equals `gamma`.
///
/// Per node the available exponents in an exponent-tight multiset span at
/// most two adjacent values, so the product below stays tiny.
fn submultisets_with_hdeg(m: &LetterMultiset, gamma: &Root) -> Vec<LetterMultiset> {
    let rank = gamma.coeffs().len();
    let mut per_index: Vec<Vec<Vec<(LoopLetter, usize)>>> = Vec::new();
    for i in 1..=rank {
        let need = gamma.coeffs()[i - 1] as usize;
        if need == 0 {
            continue;
        }
        let available: Vec<(LoopLetter, usize)> = m
            .entries()
            .iter()
            .filter(|(l, _)| l.index == i)
            .map(|(l, c)| (*l, *c))
            .collect();
        let mut choices = Vec::new();
        distribute(&available, 0, need, &mut Vec::new(), &mut choices);
        if choices.is_empty() {
            return Vec::new();
        }
        per_index.push(choices);
    }
    let mut result: Vec<Vec<(LoopLetter, usize)>> = vec![Vec::new()];
    for choices in per_index {
        let mut next = Vec::with_capacity(result.len() * choices.len());
        for base in &result {
            for choice in &choices {
                let mut combined = base.clone();
                combined.extend_from_slice(choice);
                next.push(combined);
            }
        }
        result = next;
    }
    result
        .into_iter()
        .map(|taken| {
            let mut ms = LetterMultiset::empty();
            for (l, c) in taken {
                for _ in 0..c {
                    ms.insert(l);
                }
            }
            ms
        })
        .collect()
}

fn distribute(
    available: &[(LoopLetter, usize)],
    pos: usize,
    need: usize,
    acc: &mut Vec<(LoopLetter, usize)>,
    out: &mut Vec<Vec<(LoopLetter, usize)>>,
) {
    if need == 0 {
        out.push(acc.clone());
        return;
    }
    if pos >= available.len() {
        return;
    }
    let (letter, have) = available[pos];
    let remaining_after: usize = available[pos + 1..].iter().map(|(_, c)| *c).sum();
    for take in 0..=have.min(need) {
        if need - take > remaining_after {
            continue;
        }
        if take > 0 {
            acc.push((letter, take));
        }
        distribute(available, pos + 1, need - take, acc, out);
        if take > 0 {
            acc.pop();
        }
    }
}
