//! Loop words and the classical Lyndon machinery, generic over an
//! [`OrderPolicy`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::OrderPolicy;

/// The letter `i^(d)`: node index (1-based) with an integer exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopLetter {
    pub index: usize,
    pub exponent: i64,
}

impl LoopLetter {
    pub fn new(index: usize, exponent: i64) -> LoopLetter {
        LoopLetter { index, exponent }
    }

    /// `i^(d+1)`.
    pub fn bumped(self) -> LoopLetter {
        LoopLetter::new(self.index, self.exponent + 1)
    }

    /// `i^(d-1)`.
    pub fn lowered(self) -> LoopLetter {
        LoopLetter::new(self.index, self.exponent - 1)
    }
}

impl fmt::Display for LoopLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.index, self.exponent)
    }
}

/// A nonempty word in loop letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopWord {
    letters: Vec<LoopLetter>,
}

impl LoopWord {
    pub fn new(letters: Vec<LoopLetter>) -> LoopWord {
        assert!(!letters.is_empty(), "loop words are nonempty");
        LoopWord { letters }
    }

    pub fn single(index: usize, exponent: i64) -> LoopWord {
        LoopWord::new(vec![LoopLetter::new(index, exponent)])
    }

    pub fn letters(&self) -> &[LoopLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> LoopLetter {
        self.letters[0]
    }

    pub fn concat(&self, other: &LoopWord) -> LoopWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        LoopWord::new(letters)
    }

    /// Horizontal degree: coefficient vector of `Σ α_{i_k}`.
    pub fn hdeg(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.letters {
            v[l.index - 1] += 1;
        }
        v
    }

    /// Vertical degree: `Σ d_k`.
    pub fn vdeg(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent).sum()
    }

    /// JSON rendering as a list of `[index, exponent]` pairs.
    pub fn to_json(&self) -> String {
        let pairs: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("[{},{}]", l.index, l.exponent))
            .collect();
        format!("[{}]", pairs.join(","))
    }
}

impl fmt::Display for LoopWord {
    /// The bracket form used by the reference tables: `[3^(1) 2^(0) 1^(0)]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.letters
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}

/// Lexicographic comparison; on a strict prefix the shorter word is smaller.
pub fn cmp_words(policy: &OrderPolicy, u: &LoopWord, v: &LoopWord) -> Ordering {
    for (a, b) in u.letters().iter().zip(v.letters()) {
        match policy.cmp_letters(*a, *b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    u.len().cmp(&v.len())
}

/// A word is Lyndon iff it is smaller than all of its proper suffixes.
pub fn is_lyndon(policy: &OrderPolicy, w: &LoopWord) -> bool {
    let letters = w.letters();
    for start in 1..letters.len() {
        let suffix = &letters[start..];
        // Inline the comparison to avoid allocating suffix words.
        let mut decided = None;
        for (a, b) in letters.iter().zip(suffix) {
            match policy.cmp_letters(*a, *b) {
                Ordering::Equal => continue,
                other => {
                    decided = Some(other);
                    break;
                }
            }
        }
        // On a common prefix the word, being longer, is the greater one.
        let cmp = decided.unwrap_or(Ordering::Greater);
        if cmp != Ordering::Less {
            return false;
        }
    }
    true
}

/// Costandard factorization `ℓ = ℓ1 ℓ2`: `ℓ2` is the longest proper suffix of
/// `ℓ` that is Lyndon. Defined for Lyndon words of length ≥ 2 only; violating
/// the contract is a programming error.
pub fn costandard_factorization(policy: &OrderPolicy, word: &LoopWord) -> (LoopWord, LoopWord) {
    assert!(
        word.len() >= 2,
        "costandard factorization needs length >= 2"
    );
    let letters = word.letters();
    for start in 1..letters.len() {
        let suffix = LoopWord::new(letters[start..].to_vec());
        if is_lyndon(policy, &suffix) {
            let prefix = LoopWord::new(letters[..start].to_vec());
            return (prefix, suffix);
        }
    }
    unreachable!("the last letter is always a Lyndon suffix");
}

/// Canonical (Chen–Fox–Lyndon) factorization into a non-increasing product of
/// Lyndon words, by Duval's algorithm over the policy's letter order.
pub fn canonical_factorization(policy: &OrderPolicy, w: &LoopWord) -> Vec<LoopWord> {
    let s = w.letters();
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0usize;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && policy.cmp_letters(s[k], s[j]) != Ordering::Greater {
            if policy.cmp_letters(s[k], s[j]) == Ordering::Less {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(LoopWord::new(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    factors
}

/// Exponent-tightness: every letter is ≥ every letter of the word with its
/// exponent raised by one. Depends only on the letter multiset.
pub fn is_exponent_tight(policy: &OrderPolicy, w: &LoopWord) -> bool {
    let min = w
        .letters()
        .iter()
        .copied()
        .min_by(|a, b| policy.cmp_letters(*a, *b))
        .expect("nonempty");
    let max_bumped = w
        .letters()
        .iter()
        .map(|l| l.bumped())
        .max_by(|a, b| policy.cmp_letters(*a, *b))
        .expect("nonempty");
    policy.cmp_letters(min, max_bumped) != Ordering::Less
}

/// For a Lyndon word the minimum above is the first letter, so only `k = 1`
/// needs checking.
pub fn is_exponent_tight_lyndon(policy: &OrderPolicy, w: &LoopWord) -> bool {
    let first = w.first();
    let max_bumped = w
        .letters()
        .iter()
        .map(|l| l.bumped())
        .max_by(|a, b| policy.cmp_letters(*a, *b))
        .expect("nonempty");
    policy.cmp_letters(first, max_bumped) != Ordering::Less
}

/// The periodicity map `Υ^k`: shifts every letter `i^(d)` to `i^(d + k·c_i)`.
/// Weighted mode only.
pub fn upsilon(policy: &OrderPolicy, w: &LoopWord, k: i64) -> Result<LoopWord> {
    let Some(weights) = policy.weights() else {
        return Err(Error::Unsupported(
            "the periodicity map is defined for weighted policies only".into(),
        ));
    };
    Ok(LoopWord::new(
        w.letters()
            .iter()
            .map(|l| LoopLetter::new(l.index, l.exponent + k * weights[l.index - 1]))
            .collect(),
    ))
}

/// A multiset of loop letters, stored canonically (sorted by index, then
/// exponent — independent of any policy).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterMultiset {
    entries: Vec<(LoopLetter, usize)>,
}

impl LetterMultiset {
    pub fn empty() -> LetterMultiset {
        LetterMultiset {
            entries: Vec::new(),
        }
    }

    pub fn from_word(w: &LoopWord) -> LetterMultiset {
        let mut m = LetterMultiset::empty();
        for &l in w.letters() {
            m.insert(l);
        }
        m
    }

    pub fn from_letters(letters: &[LoopLetter]) -> LetterMultiset {
        let mut m = LetterMultiset::empty();
        for &l in letters {
            m.insert(l);
        }
        m
    }

    pub fn entries(&self) -> &[(LoopLetter, usize)] {
        &self.entries
    }

    pub fn insert(&mut self, letter: LoopLetter) {
        match self.entries.binary_search_by(|(l, _)| l.cmp(&letter)) {
            Ok(pos) => self.entries[pos].1 += 1,
            Err(pos) => self.entries.insert(pos, (letter, 1)),
        }
    }

    /// Removes one copy; panics if absent.
    pub fn remove(&mut self, letter: LoopLetter) {
        let pos = self
            .entries
            .binary_search_by(|(l, _)| l.cmp(&letter))
            .expect("letter present");
        if self.entries[pos].1 == 1 {
            self.entries.remove(pos);
        } else {
            self.entries[pos].1 -= 1;
        }
    }

    pub fn count(&self, letter: LoopLetter) -> usize {
        self.entries
            .binary_search_by(|(l, _)| l.cmp(&letter))
            .map(|pos| self.entries[pos].1)
            .unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn vdeg(&self) -> i64 {
        self.entries
            .iter()
            .map(|(l, m)| l.exponent * *m as i64)
            .sum()
    }

    pub fn hdeg(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for (l, m) in &self.entries {
            v[l.index - 1] += *m as i64;
        }
        v
    }

    pub fn letters(&self) -> impl Iterator<Item = LoopLetter> + '_ {
        self.entries
            .iter()
            .flat_map(|(l, m)| std::iter::repeat_n(*l, *m))
    }

    /// Smallest letter under the policy.
    pub fn min_letter(&self, policy: &OrderPolicy) -> LoopLetter {
        self.entries
            .iter()
            .map(|(l, _)| *l)
            .min_by(|a, b| policy.cmp_letters(*a, *b))
            .expect("nonempty multiset")
    }

    /// The largest value of `i^(d+1)` over the letters of the multiset.
    pub fn max_bumped(&self, policy: &OrderPolicy) -> LoopLetter {
        self.entries
            .iter()
            .map(|(l, _)| l.bumped())
            .max_by(|a, b| policy.cmp_letters(*a, *b))
            .expect("nonempty multiset")
    }

    pub fn is_submultiset_of(&self, other: &LetterMultiset) -> bool {
        self.entries.iter().all(|(l, m)| other.count(*l) >= *m)
    }

    /// `self − other`; panics unless `other ⊆ self`.
    pub fn subtract(&self, other: &LetterMultiset) -> LetterMultiset {
        let mut out = self.clone();
        for (l, m) in &other.entries {
            for _ in 0..*m {
                out.remove(*l);
            }
        }
        out
    }
}

impl fmt::Display for LetterMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.entries
                .iter()
                .map(|(l, m)| if *m == 1 {
                    l.to_string()
                } else {
                    format!("{l}x{m}")
                })
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(ls: &[(usize, i64)]) -> LoopWord {
        LoopWord::new(ls.iter().map(|&(i, d)| LoopLetter::new(i, d)).collect())
    }

    fn std2() -> OrderPolicy {
        OrderPolicy::standard(2)
    }

    #[test]
    fn word_comparison_prefix_rule() {
        let p = std2();
        let u = word(&[(1, 0)]);
        let v = word(&[(1, 0), (2, 0)]);
        assert_eq!(cmp_words(&p, &u, &v), Ordering::Less);
        assert_eq!(cmp_words(&p, &v, &v), Ordering::Equal);
        let a = word(&[(2, 1), (1, 0)]);
        let b = word(&[(1, 1), (2, 0)]);
        assert_eq!(cmp_words(&p, &a, &b), Ordering::Greater);
    }

    #[test]
    fn lyndon_examples() {
        let p = std2();
        assert!(is_lyndon(&p, &word(&[(1, 0)])));
        assert!(is_lyndon(&p, &word(&[(2, 1), (1, 0)])));
        assert!(!is_lyndon(&p, &word(&[(2, 0), (1, 0)])));
        assert!(is_lyndon(&p, &word(&[(1, 0), (1, 0), (2, 0)])));
    }

    #[test]
    fn costandard_examples() {
        let p = std2();
        let (l1, l2) = costandard_factorization(&p, &word(&[(1, 0), (2, 0)]));
        assert_eq!(l1, word(&[(1, 0)]));
        assert_eq!(l2, word(&[(2, 0)]));

        let p4 = OrderPolicy::standard(4);
        let w = word(&[(3, 1), (2, 0), (1, 0), (4, 1)]);
        let (l1, l2) = costandard_factorization(&p4, &w);
        assert_eq!(l1, word(&[(3, 1), (2, 0), (1, 0)]));
        assert_eq!(l2, word(&[(4, 1)]));
        assert!(is_lyndon(&p4, &l1) && is_lyndon(&p4, &l2));

        let g2 = OrderPolicy::weighted(2, vec![2, 1], vec![2, 3]).unwrap();
        let w = word(&[(2, 3), (1, 2), (2, 2), (2, 2), (1, 2)]);
        assert!(is_lyndon(&g2, &w));
        let (l1, l2) = costandard_factorization(&g2, &w);
        assert!(is_lyndon(&g2, &l1) && is_lyndon(&g2, &l2));
        assert_eq!(l1.concat(&l2), w);
    }

    #[test]
    #[should_panic(expected = "length >= 2")]
    fn costandard_rejects_single_letters() {
        costandard_factorization(&std2(), &word(&[(1, 0)]));
    }

    #[test]
    fn canonical_examples() {
        let p = std2();
        let lw = word(&[(1, 0), (2, 0)]);
        assert_eq!(canonical_factorization(&p, &lw), vec![lw.clone()]);
        assert_eq!(
            canonical_factorization(&p, &word(&[(2, 0), (1, 0)])),
            vec![word(&[(2, 0)]), word(&[(1, 0)])]
        );
        let ll = lw.concat(&lw);
        assert_eq!(canonical_factorization(&p, &ll), vec![lw.clone(), lw]);
    }

    #[test]
    fn exponent_tightness_examples() {
        let p = std2();
        assert!(is_exponent_tight(&p, &word(&[(1, 0)])));
        assert!(!is_exponent_tight(&p, &word(&[(1, 0), (2, 2)])));
        let p4 = OrderPolicy::standard(4);
        assert!(is_exponent_tight(
            &p4,
            &word(&[(4, 1), (3, 0), (2, 0), (1, 0)])
        ));
    }

    #[test]
    fn lyndon_tightness_shortcut_agrees_on_lyndon_words() {
        let p = OrderPolicy::weighted(2, vec![2, 1], vec![2, 3]).unwrap();
        let samples = [
            word(&[(1, 0)]),
            word(&[(2, 1), (1, 0)]),
            word(&[(1, 0), (2, 0)]),
            word(&[(2, 3), (1, 2), (2, 2), (2, 2), (1, 2)]),
            word(&[(1, 1), (2, -1)]),
            word(&[(2, 2), (1, 0), (1, 1)]),
        ];
        for w in &samples {
            if is_lyndon(&p, w) {
                assert_eq!(
                    is_exponent_tight_lyndon(&p, w),
                    is_exponent_tight(&p, w),
                    "word {w}"
                );
            }
        }
    }

    #[test]
    fn tightness_depends_only_on_the_multiset() {
        let p = OrderPolicy::weighted(2, vec![1, 2], vec![2, 3]).unwrap();
        let base = [(1, 1), (2, 1), (1, 0), (2, 2)];
        let w0 = word(&base);
        let expected = is_exponent_tight(&p, &w0);
        // All 4! arrangements.
        let mut perm = [0usize, 1, 2, 3];
        let mut arrangements = vec![];
        permute(&mut perm, 0, &mut arrangements);
        for arr in arrangements {
            let w = word(&arr.map(|k| base[k]));
            assert_eq!(is_exponent_tight(&p, &w), expected);
        }
    }

    fn permute(perm: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
        if k == 4 {
            out.push(*perm);
            return;
        }
        for i in k..4 {
            perm.swap(k, i);
            permute(perm, k + 1, out);
            perm.swap(k, i);
        }
    }

    #[test]
    fn upsilon_examples() {
        let p = OrderPolicy::weighted(2, vec![1, 2], vec![2, 3]).unwrap();
        let w = word(&[(2, 1), (1, 0)]);
        assert_eq!(upsilon(&p, &w, 0).unwrap(), w);
        assert_eq!(upsilon(&p, &w, 1).unwrap(), word(&[(2, 4), (1, 2)]));

        let g = OrderPolicy::generalized(
            2,
            vec![1, 2],
            vec![Ratio::from_int(1), Ratio::from_int(1)],
            vec![Ratio::from_int(1), Ratio::from_int(1)],
        )
        .unwrap();
        assert!(matches!(upsilon(&g, &w, 1), Err(Error::Unsupported(_))));
    }

    use crate::order::Ratio;

    #[test]
    fn rendering_matches_reference_format() {
        let w = word(&[(3, 1), (2, 0), (1, 0), (4, 1)]);
        assert_eq!(w.to_string(), "[3^(1) 2^(0) 1^(0) 4^(1)]");
        assert_eq!(word(&[(1, -5)]).to_string(), "[1^(-5)]");
        assert_eq!(w.to_json(), "[[3,1],[2,0],[1,0],[4,1]]");
    }

    /// Cyclic-rotation minimality agrees with proper-suffix minimality on all
    /// loop words of length ≤ 6 over a bounded letter window.
    #[test]
    fn lyndon_definitions_agree_on_small_words() {
        let p = OrderPolicy::weighted(2, vec![2, 1], vec![2, 1]).unwrap();
        let mut alphabet = Vec::new();
        for i in 1..=2usize {
            for d in -1..=1i64 {
                alphabet.push(LoopLetter::new(i, d));
            }
        }
        let mut frontier: Vec<Vec<LoopLetter>> = alphabet.iter().map(|&l| vec![l]).collect();
        let mut checked = 0usize;
        for _ in 2..=6 {
            let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
            for w in &frontier {
                for &l in &alphabet {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            for ls in &next {
                let w = LoopWord::new(ls.clone());
                let by_suffix = is_lyndon(&p, &w);
                let by_rotation = (1..ls.len()).all(|a| {
                    let mut rot = ls[a..].to_vec();
                    rot.extend_from_slice(&ls[..a]);
                    cmp_words(&p, &w, &LoopWord::new(rot)) == Ordering::Less
                });
                assert_eq!(by_suffix, by_rotation, "word {w}");
                checked += 1;
            }
            frontier = next;
        }
        assert_eq!(checked, 36 + 216 + 1296 + 7776 + 46656);
    }

    #[test]
    fn concatenation_of_ordered_lyndon_words_is_lyndon() {
        let p = OrderPolicy::weighted(2, vec![1, 2], vec![3, 2]).unwrap();
        let samples = vec![
            word(&[(1, 0)]),
            word(&[(2, 0)]),
            word(&[(1, 1)]),
            word(&[(2, 1), (1, 0)]),
            word(&[(1, 0), (2, 0)]),
            word(&[(1, 1), (2, -1)]),
        ];
        for l1 in &samples {
            for l2 in &samples {
                if !is_lyndon(&p, l1) || !is_lyndon(&p, l2) {
                    continue;
                }
                if cmp_words(&p, l1, l2) == Ordering::Less {
                    let cat = l1.concat(l2);
                    assert!(is_lyndon(&p, &cat), "{l1} {l2}");
                    assert_eq!(cmp_words(&p, &cat, &l2.concat(l1)), Ordering::Less);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn canonical_factorization_is_sound(
            raw in proptest::collection::vec((1usize..=3, -2i64..=2), 1..9)
        ) {
            let p = OrderPolicy::weighted(3, vec![3, 1, 2], vec![2, 1, 3]).unwrap();
            let w = LoopWord::new(raw.iter().map(|&(i, d)| LoopLetter::new(i, d)).collect());
            let factors = canonical_factorization(&p, &w);
            // Concatenation reproduces the word.
            let mut cat = factors[0].clone();
            for fac in &factors[1..] {
                cat = cat.concat(fac);
            }
            prop_assert_eq!(cat, w);
            // Factors are Lyndon and non-increasing.
            for fac in &factors {
                prop_assert!(is_lyndon(&p, fac));
            }
            for pair in factors.windows(2) {
                prop_assert_ne!(cmp_words(&p, &pair[0], &pair[1]), Ordering::Less);
            }
        }

        #[test]
        fn costandard_concat_roundtrip(
            raw in proptest::collection::vec((1usize..=2, -2i64..=2), 2..7)
        ) {
            let p = OrderPolicy::weighted(2, vec![1, 2], vec![2, 3]).unwrap();
            let w = LoopWord::new(raw.iter().map(|&(i, d)| LoopLetter::new(i, d)).collect());
            prop_assume!(is_lyndon(&p, &w));
            let (l1, l2) = costandard_factorization(&p, &w);
            prop_assert_eq!(l1.concat(&l2), w);
            prop_assert!(is_lyndon(&p, &l1));
            prop_assert!(is_lyndon(&p, &l2));
        }

        #[test]
        fn upsilon_preserves_word_order(
            raw1 in proptest::collection::vec((1usize..=2, -3i64..=3), 1..6),
            raw2 in proptest::collection::vec((1usize..=2, -3i64..=3), 1..6),
            k in -2i64..=2,
        ) {
            let p = OrderPolicy::weighted(2, vec![2, 1], vec![2, 5]).unwrap();
            let u = LoopWord::new(raw1.iter().map(|&(i, d)| LoopLetter::new(i, d)).collect());
            let v = LoopWord::new(raw2.iter().map(|&(i, d)| LoopLetter::new(i, d)).collect());
            let cu = cmp_words(&p, &u, &v);
            let su = upsilon(&p, &u, k).unwrap();
            let sv = upsilon(&p, &v, k).unwrap();
            prop_assert_eq!(cu, cmp_words(&p, &su, &sv));
        }
    }
}
