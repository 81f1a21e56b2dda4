//! Definition-level brute force, independent of the inductive engines.
//!
//! A Lyndon loop word of degree `(α, d)` is standard iff its iterated
//! costandard bracketing does not vanish and it is lexicographically maximal
//! among such words. Nonvanishing is decided purely by root sums: the bracket
//! of root vectors of degrees `(γ1,k1)` and `(γ2,k2)` is a nonzero multiple
//! of the root vector of degree `(γ1+γ2, k1+k2)` exactly when `γ1+γ2` is a
//! root (`N_{γ1,γ2} ≠ 0` in a simple Lie algebra whenever the sum is a root),
//! and since every graded piece of the loop algebra's nilpotent half is
//! one-dimensional, iterated brackets never produce sums of terms. No
//! structure-constant arithmetic is needed.

use crate::error::{Error, Result};
use crate::order::OrderPolicy;
use crate::rootsys::{Root, RootSystem};
use crate::words::{cmp_words, costandard_factorization, is_lyndon, LoopLetter, LoopWord};

/// The costandard bracketing of a Lyndon word, with each internal node
/// carrying the degree of its span.
#[derive(Debug, Clone)]
pub enum BracketTree {
    Leaf(LoopLetter),
    Node {
        hdeg: Vec<i64>,
        vdeg: i64,
        left: Box<BracketTree>,
        right: Box<BracketTree>,
    },
}

impl BracketTree {
    /// Builds the tree along costandard factorizations. The input must be
    /// Lyndon; violating the contract is a programming error.
    pub fn build(policy: &OrderPolicy, rank: usize, word: &LoopWord) -> BracketTree {
        assert!(
            is_lyndon(policy, word),
            "standard bracketing is defined for Lyndon words"
        );
        Self::build_unchecked(policy, rank, word)
    }

    fn build_unchecked(policy: &OrderPolicy, rank: usize, word: &LoopWord) -> BracketTree {
        if word.len() == 1 {
            return BracketTree::Leaf(word.first());
        }
        let (l1, l2) = costandard_factorization(policy, word);
        BracketTree::Node {
            hdeg: word.hdeg(rank),
            vdeg: word.vdeg(),
            left: Box::new(Self::build_unchecked(policy, rank, &l1)),
            right: Box::new(Self::build_unchecked(policy, rank, &l2)),
        }
    }

    pub fn hdeg(&self, rank: usize) -> Vec<i64> {
        match self {
            BracketTree::Leaf(l) => {
                let mut v = vec![0i64; rank];
                v[l.index - 1] = 1;
                v
            }
            BracketTree::Node { hdeg, .. } => hdeg.clone(),
        }
    }

    pub fn vdeg(&self) -> i64 {
        match self {
            BracketTree::Leaf(l) => l.exponent,
            BracketTree::Node { vdeg, .. } => *vdeg,
        }
    }
}

/// True iff the standard bracketing of the Lyndon word is a nonzero element,
/// i.e. every internal node of the costandard tree has a root as horizontal
/// degree.
pub fn bracket_nonzero(sys: &RootSystem, policy: &OrderPolicy, word: &LoopWord) -> bool {
    let tree = BracketTree::build(policy, sys.rank(), word);
    nodes_are_roots(sys, &tree)
}

fn nodes_are_roots(sys: &RootSystem, tree: &BracketTree) -> bool {
    match tree {
        BracketTree::Leaf(_) => true,
        BracketTree::Node {
            hdeg, left, right, ..
        } => {
            sys.is_positive_root(hdeg) && nodes_are_roots(sys, left) && nodes_are_roots(sys, right)
        }
    }
}

/// All Lyndon loop words of degree `(α, d)` over the bounded alphabet
/// `I^(s)`, each exactly once, sorted increasingly.
///
/// Enumeration goes multiset-first: exponents are assigned per node within
/// the window, then the distinct arrangements are filtered through the Lyndon
/// predicate (only arrangements starting with the minimal letter can pass).
pub fn enumerate_lyndon(
    sys: &RootSystem,
    policy: &OrderPolicy,
    alpha: &Root,
    d: i64,
    s: i64,
) -> Vec<LoopWord> {
    debug_assert!(sys.root_index(alpha).is_some(), "degree must be a root");
    let window = policy.alphabet_window(s);
    let counts: Vec<(usize, usize)> = alpha
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| (i + 1, k as usize))
        .collect();

    // Bounds on the exponent sum contributed by the remaining nodes.
    let mut min_rest = vec![0i64; counts.len() + 1];
    let mut max_rest = vec![0i64; counts.len() + 1];
    for (pos, &(i, k)) in counts.iter().enumerate().rev() {
        let (lo, hi) = window[i - 1];
        min_rest[pos] = min_rest[pos + 1] + lo * k as i64;
        max_rest[pos] = max_rest[pos + 1] + hi * k as i64;
    }

    let mut search = ExponentSearch {
        counts: &counts,
        window: &window,
        min_rest: &min_rest,
        max_rest: &max_rest,
        acc: Vec::new(),
        multisets: Vec::new(),
    };
    search.assign(0, d);

    let mut words = Vec::new();
    for letters in &search.multisets {
        arrangements(policy, letters, &mut words);
    }
    words.sort_by(|a, b| cmp_words(policy, a, b));
    words
}

/// Depth-first assignment of exponent multisets, node by node, pruned by the
/// achievable-sum bounds of the remaining nodes.
struct ExponentSearch<'a> {
    counts: &'a [(usize, usize)],
    window: &'a [(i64, i64)],
    min_rest: &'a [i64],
    max_rest: &'a [i64],
    acc: Vec<LoopLetter>,
    multisets: Vec<Vec<LoopLetter>>,
}

impl ExponentSearch<'_> {
    fn assign(&mut self, pos: usize, remaining: i64) {
        if pos == self.counts.len() {
            if remaining == 0 {
                self.multisets.push(self.acc.clone());
            }
            return;
        }
        if remaining < self.min_rest[pos] || remaining > self.max_rest[pos] {
            return;
        }
        let (index, mult) = self.counts[pos];
        let lo = self.window[index - 1].0;
        self.node_exponents(pos, remaining, index, mult, 0, lo, 0);
    }

    /// Picks non-decreasing exponents for the `mult` copies of one node.
    #[allow(clippy::too_many_arguments)]
    fn node_exponents(
        &mut self,
        pos: usize,
        remaining: i64,
        index: usize,
        mult: usize,
        taken: usize,
        from: i64,
        sum: i64,
    ) {
        if taken == mult {
            self.assign(pos + 1, remaining - sum);
            return;
        }
        let hi = self.window[index - 1].1;
        let left = (mult - taken) as i64;
        let needed = remaining - self.max_rest[pos + 1];
        let allowed = remaining - self.min_rest[pos + 1];
        for e in from..=hi {
            // The remaining copies take exponents in [e, hi].
            let best_rest = sum + e + hi * (left - 1);
            let worst_rest = sum + e * left;
            if worst_rest > allowed {
                break;
            }
            if best_rest < needed {
                continue;
            }
            self.acc.push(LoopLetter::new(index, e));
            self.node_exponents(pos, remaining, index, mult, taken + 1, e, sum + e);
            self.acc.pop();
        }
    }
}

/// Pushes every Lyndon arrangement of the letter multiset.
fn arrangements(policy: &OrderPolicy, letters: &[LoopLetter], out: &mut Vec<LoopWord>) {
    let mut distinct: Vec<(LoopLetter, usize)> = Vec::new();
    for &l in letters {
        match distinct.iter_mut().find(|(x, _)| *x == l) {
            Some((_, c)) => *c += 1,
            None => distinct.push((l, 1)),
        }
    }
    let min = letters
        .iter()
        .copied()
        .min_by(|a, b| policy.cmp_letters(*a, *b))
        .expect("nonempty");
    // A Lyndon word starts with its minimal letter.
    let mut current = Vec::with_capacity(letters.len());
    let total = letters.len();
    fn fill(
        policy: &OrderPolicy,
        distinct: &mut Vec<(LoopLetter, usize)>,
        current: &mut Vec<LoopLetter>,
        total: usize,
        out: &mut Vec<LoopWord>,
    ) {
        if current.len() == total {
            let w = LoopWord::new(current.clone());
            if is_lyndon(policy, &w) {
                out.push(w);
            }
            return;
        }
        for k in 0..distinct.len() {
            if distinct[k].1 == 0 {
                continue;
            }
            distinct[k].1 -= 1;
            current.push(distinct[k].0);
            fill(policy, distinct, current, total, out);
            current.pop();
            distinct[k].1 += 1;
        }
    }
    // Force the first letter.
    let first_pos = distinct.iter().position(|(l, _)| *l == min).unwrap();
    distinct[first_pos].1 -= 1;
    current.push(min);
    fill(policy, &mut distinct, &mut current, total, out);
}

/// The lexicographically maximal Lyndon word of degree `(α, d)` over `I^(s)`
/// with nonvanishing bracketing — the standard Lyndon loop word whenever the
/// window is large enough (stabilization).
pub fn oracle_word(
    sys: &RootSystem,
    policy: &OrderPolicy,
    alpha: &Root,
    d: i64,
    s: i64,
) -> Result<LoopWord> {
    if sys.root_index(alpha).is_none() {
        return Err(Error::Precondition(format!(
            "{alpha} is not a positive root"
        )));
    }
    let candidates = enumerate_lyndon(sys, policy, alpha, d, s);
    for w in candidates.iter().rev() {
        if bracket_nonzero(sys, policy, w) {
            return Ok(w.clone());
        }
    }
    Err(Error::WindowExhausted(format!(
        "no standard word of degree ({alpha}, {d}) exists over the window s={s}"
    )))
}
