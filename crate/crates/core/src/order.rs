//! Total orders on the loop alphabet `{ i^(d) }`.
//!
//! A policy is a permutation order on the node set together with an exact
//! exponent-comparison rule. The letter `i^(d)` is assigned the relative
//! exponent `d/c_i` (weighted mode) or `f_i(d)` (generalized mode, piecewise
//! linear with positive rational slopes `a_i⁺` for `d ≥ 0` and `a_i⁻` for
//! `d < 0`), and
//!
//! ```text
//! i^(d) < j^(e)  ⟺  rel(i,d) > rel(j,e),  or  rel(i,d) = rel(j,e) and i precedes j.
//! ```
//!
//! Every comparison is decided by integer cross-multiplication in `i128`;
//! there is no floating point.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::Root;
use crate::words::LoopLetter;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// A reduced rational with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i64,
    den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Result<Ratio> {
        if den == 0 {
            return Err(Error::Config("ratio with zero denominator".into()));
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Ok(Ratio {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn from_int(n: i64) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn times_int(&self, k: i64) -> Ratio {
        Ratio::new(self.num * k, self.den).expect("nonzero denominator")
    }

    pub fn minus_int(&self, k: i64) -> Ratio {
        Ratio::new(self.num - k * self.den, self.den).expect("nonzero denominator")
    }

    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i64 {
        -((-self.num).div_euclid(self.den))
    }

    /// Parses `"3"` or `"3/4"`.
    pub fn parse(s: &str) -> Result<Ratio> {
        let parse_int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Config(format!("bad rational `{s}`")))
        };
        match s.split_once('/') {
            Some((n, d)) => Ratio::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Ratio::from_int(parse_int(s)?)),
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Exponent-comparison rule attached to a policy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentRule {
    /// Relative exponent `d/c_i` with positive integer weights.
    Weighted { weights: Vec<i64> },
    /// `f_i(d) = a_i⁺·d` for `d ≥ 0` and `a_i⁻·d` for `d < 0`, strictly
    /// increasing, unbounded and zero at zero by construction.
    Generalized { pos: Vec<Ratio>, neg: Vec<Ratio> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Marker values `N^(±,s)` with per-node integer preimages `N_i^(±,s)`
/// satisfying `f_i(N_i) = N` exactly.
///
/// The ladder is generated from the policy, not user-supplied: for rational
/// slopes common markers exist at every integer multiple of a base value, so
/// validity holds at every depth. Richer monotone families would only be
/// checkable at finitely many markers; such families are out of scope here.
#[derive(Debug, Clone)]
pub struct MarkerLadder {
    base_pos: Ratio,
    base_neg: Ratio,
    pos_units: Vec<i64>,
    neg_units: Vec<i64>,
}

impl MarkerLadder {
    /// Marker value `N^(sign,s)`; `s = 0` gives zero for both signs.
    pub fn marker_value(&self, sign: Sign, s: i64) -> Ratio {
        match sign {
            Sign::Plus => self.base_pos.times_int(s),
            Sign::Minus => self.base_neg.times_int(s),
        }
    }

    /// Per-node integers `N_i^(sign,s)`.
    pub fn markers(&self, sign: Sign, s: i64) -> Vec<i64> {
        let units = match sign {
            Sign::Plus => &self.pos_units,
            Sign::Minus => &self.neg_units,
        };
        units.iter().map(|u| u * s).collect()
    }
}

/// A total order on the loop alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPolicy {
    rank: usize,
    /// Node indices listed in increasing order, e.g. `[5,1,3,2,4]` for
    /// `5 < 1 < 3 < 2 < 4`.
    listing: Vec<usize>,
    /// `position[i-1]` = rank of node `i` in the order (0 = smallest).
    position: Vec<usize>,
    rule: ExponentRule,
}

fn validate_listing(rank: usize, listing: &[usize]) -> Result<Vec<usize>> {
    if listing.len() != rank {
        return Err(Error::Config(format!(
            "order lists {} nodes, expected {rank}",
            listing.len()
        )));
    }
    let mut position = vec![usize::MAX; rank];
    for (pos, &i) in listing.iter().enumerate() {
        if i < 1 || i > rank {
            return Err(Error::Config(format!("order mentions invalid node {i}")));
        }
        if position[i - 1] != usize::MAX {
            return Err(Error::Config(format!("order mentions node {i} twice")));
        }
        position[i - 1] = pos;
    }
    Ok(position)
}

impl OrderPolicy {
    pub fn weighted(rank: usize, listing: Vec<usize>, weights: Vec<i64>) -> Result<OrderPolicy> {
        let position = validate_listing(rank, &listing)?;
        if weights.len() != rank {
            return Err(Error::Config(format!(
                "{} weights for rank {rank}",
                weights.len()
            )));
        }
        if weights.iter().any(|&c| c < 1) {
            return Err(Error::Config("weights must be positive integers".into()));
        }
        Ok(OrderPolicy {
            rank,
            listing,
            position,
            rule: ExponentRule::Weighted { weights },
        })
    }

    pub fn generalized(
        rank: usize,
        listing: Vec<usize>,
        pos: Vec<Ratio>,
        neg: Vec<Ratio>,
    ) -> Result<OrderPolicy> {
        let position = validate_listing(rank, &listing)?;
        if pos.len() != rank || neg.len() != rank {
            return Err(Error::Config("one slope pair per node required".into()));
        }
        if pos.iter().chain(neg.iter()).any(|r| !r.is_positive()) {
            return Err(Error::Config("slopes must be positive".into()));
        }
        Ok(OrderPolicy {
            rank,
            listing,
            position,
            rule: ExponentRule::Generalized { pos, neg },
        })
    }

    /// The identity order `1 < 2 < … < rank` with all weights 1.
    pub fn standard(rank: usize) -> OrderPolicy {
        OrderPolicy::weighted(rank, (1..=rank).collect(), vec![1; rank]).expect("valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rule(&self) -> &ExponentRule {
        &self.rule
    }

    pub fn listing(&self) -> &[usize] {
        &self.listing
    }

    pub fn is_weighted(&self) -> bool {
        matches!(self.rule, ExponentRule::Weighted { .. })
    }

    pub fn weights(&self) -> Option<&[i64]> {
        match &self.rule {
            ExponentRule::Weighted { weights } => Some(weights),
            _ => None,
        }
    }

    /// Position of node `i` in the order; smaller position = smaller node.
    pub fn position(&self, index1: usize) -> usize {
        self.position[index1 - 1]
    }

    /// Relative exponent of `i^(d)` as an exact rational.
    pub fn relative_exponent(&self, letter: LoopLetter) -> Ratio {
        match &self.rule {
            ExponentRule::Weighted { weights } => {
                Ratio::new(letter.exponent, weights[letter.index - 1]).expect("weight > 0")
            }
            ExponentRule::Generalized { pos, neg } => {
                let slope = if letter.exponent >= 0 {
                    pos[letter.index - 1]
                } else {
                    neg[letter.index - 1]
                };
                slope.times_int(letter.exponent)
            }
        }
    }

    /// Letter comparison: larger relative exponent means smaller letter; ties
    /// go to the node that comes earlier in the order.
    pub fn cmp_letters(&self, a: LoopLetter, b: LoopLetter) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        match self.relative_exponent(a).cmp(&self.relative_exponent(b)) {
            Ordering::Greater => Ordering::Less,
            Ordering::Less => Ordering::Greater,
            Ordering::Equal => self.position(a.index).cmp(&self.position(b.index)),
        }
    }

    /// Weighted height `f(α) = Σ k_i c_i`; weighted mode only.
    pub fn weighted_height(&self, alpha: &Root) -> Result<i64> {
        match &self.rule {
            ExponentRule::Weighted { weights } => {
                Ok(alpha.coeffs().iter().zip(weights).map(|(k, c)| k * c).sum())
            }
            _ => Err(Error::Unsupported(
                "weighted height requires a weighted policy".into(),
            )),
        }
    }

    /// The marker ladder of the policy. In weighted mode `N^(±,s) = ±s` with
    /// `N_i = ±s·c_i`; in generalized mode the base marker is the least
    /// positive (resp. greatest negative) value with integer preimages.
    pub fn marker_ladder(&self) -> MarkerLadder {
        match &self.rule {
            ExponentRule::Weighted { weights } => MarkerLadder {
                base_pos: Ratio::from_int(1),
                base_neg: Ratio::from_int(-1),
                pos_units: weights.clone(),
                neg_units: weights.iter().map(|c| -c).collect(),
            },
            ExponentRule::Generalized { pos, neg } => {
                let base = |slopes: &[Ratio]| {
                    let num = slopes.iter().fold(1i64, |acc, r| lcm(acc, r.num()));
                    let den = slopes.iter().fold(0i64, |acc, r| gcd(acc, r.den()));
                    Ratio::new(num, den.max(1)).expect("positive")
                };
                let base_pos = base(pos);
                let base_neg = Ratio::new(-base(neg).num(), base(neg).den()).expect("negative");
                let units = |b: Ratio, slopes: &[Ratio]| {
                    slopes
                        .iter()
                        .map(|a| {
                            // N_i = N / a_i, integral by choice of N.
                            let num = b.num() as i128 * a.den() as i128;
                            let den = b.den() as i128 * a.num() as i128;
                            debug_assert_eq!(num % den, 0);
                            (num / den) as i64
                        })
                        .collect::<Vec<_>>()
                };
                MarkerLadder {
                    base_pos,
                    base_neg,
                    pos_units: units(base_pos, pos),
                    neg_units: units(base_neg, neg),
                }
            }
        }
    }

    /// `f_N(α) = Σ k_i N_i` for the depth-`s` marker of the given sign.
    pub fn f_marker(&self, ladder: &MarkerLadder, sign: Sign, s: i64, alpha: &Root) -> i64 {
        let markers = ladder.markers(sign, s);
        alpha
            .coeffs()
            .iter()
            .zip(&markers)
            .map(|(k, n)| k * n)
            .sum()
    }

    /// Per-node exponent interval of the bounded alphabet `I^(s)`.
    pub fn alphabet_window(&self, s: i64) -> Vec<(i64, i64)> {
        let ladder = self.marker_ladder();
        let lo = ladder.markers(Sign::Minus, s);
        let hi = ladder.markers(Sign::Plus, s);
        lo.into_iter().zip(hi).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::LoopLetter;
    use proptest::prelude::*;

    fn letter(i: usize, d: i64) -> LoopLetter {
        LoopLetter::new(i, d)
    }

    #[test]
    fn weighted_letter_comparisons() {
        let p = OrderPolicy::weighted(2, vec![1, 2], vec![1, 1]).unwrap();
        assert_eq!(p.cmp_letters(letter(1, 1), letter(2, 0)), Ordering::Less);
        assert_eq!(p.cmp_letters(letter(1, 1), letter(2, 1)), Ordering::Less);
        assert_eq!(p.cmp_letters(letter(1, 0), letter(1, 0)), Ordering::Equal);

        // 7/8 > 6/7 by cross-multiplication 49 > 48.
        let q = OrderPolicy::weighted(2, vec![2, 1], vec![7, 8]).unwrap();
        assert_eq!(q.cmp_letters(letter(2, 7), letter(1, 6)), Ordering::Less);
    }

    #[test]
    fn weighted_heights() {
        let p = OrderPolicy::weighted(2, vec![1, 2], vec![1, 1]).unwrap();
        assert_eq!(p.weighted_height(&Root::new(vec![1, 1])).unwrap(), 2);
        let a5 = OrderPolicy::weighted(5, vec![5, 1, 3, 2, 4], vec![4, 3, 1, 8, 5]).unwrap();
        assert_eq!(
            a5.weighted_height(&Root::new(vec![1, 1, 1, 1, 1])).unwrap(),
            21
        );
        // G2 table row: theta = 2α1 + 3α2, weights (2,3).
        let g2 = OrderPolicy::weighted(2, vec![2, 1], vec![2, 3]).unwrap();
        assert_eq!(g2.weighted_height(&Root::new(vec![2, 3])).unwrap(), 13);
    }

    #[test]
    fn alphabet_windows() {
        let p = OrderPolicy::weighted(2, vec![1, 2], vec![2, 3]).unwrap();
        assert_eq!(p.alphabet_window(1), vec![(-2, 2), (-3, 3)]);
        assert_eq!(p.alphabet_window(0), vec![(0, 0), (0, 0)]);

        let g = OrderPolicy::generalized(
            2,
            vec![1, 2],
            vec![Ratio::from_int(1), Ratio::new(1, 2).unwrap()],
            vec![Ratio::from_int(1), Ratio::from_int(1)],
        )
        .unwrap();
        let ladder = g.marker_ladder();
        assert_eq!(ladder.markers(Sign::Plus, 1), vec![1, 2]);
        assert_eq!(ladder.marker_value(Sign::Plus, 1), Ratio::from_int(1));
        assert_eq!(ladder.markers(Sign::Minus, 1), vec![-1, -1]);
        assert_eq!(ladder.markers(Sign::Plus, 0), vec![0, 0]);
    }

    #[test]
    fn generalized_marker_preimages_are_exact() {
        let g = OrderPolicy::generalized(
            3,
            vec![1, 2, 3],
            vec![
                Ratio::new(2, 3).unwrap(),
                Ratio::new(1, 2).unwrap(),
                Ratio::from_int(2),
            ],
            vec![
                Ratio::new(3, 4).unwrap(),
                Ratio::from_int(1),
                Ratio::new(1, 3).unwrap(),
            ],
        )
        .unwrap();
        let ladder = g.marker_ladder();
        for s in 0..5 {
            for sign in [Sign::Plus, Sign::Minus] {
                let value = ladder.marker_value(sign, s);
                for (i, n) in ladder.markers(sign, s).iter().enumerate() {
                    let li = letter(i + 1, *n);
                    assert_eq!(g.relative_exponent(li), value, "s={s} i={}", i + 1);
                }
            }
        }
    }

    #[test]
    fn orientation_larger_relative_exponent_is_smaller() {
        let p = OrderPolicy::weighted(3, vec![1, 2, 3], vec![2, 5, 3]).unwrap();
        for i in 1..=3usize {
            for j in 1..=3usize {
                for d in -6..=6i64 {
                    for e in -6..=6i64 {
                        let (a, b) = (letter(i, d), letter(j, e));
                        if p.relative_exponent(a) > p.relative_exponent(b) {
                            assert_eq!(p.cmp_letters(a, b), Ordering::Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_comparison_is_shift_invariant() {
        let p = OrderPolicy::weighted(2, vec![2, 1], vec![7, 8]).unwrap();
        let w = p.weights().unwrap().to_vec();
        for i in 1..=2usize {
            for j in 1..=2usize {
                for d in -10..=10i64 {
                    for e in -10..=10i64 {
                        let before = p.cmp_letters(letter(i, d), letter(j, e));
                        let after = p.cmp_letters(letter(i, d + w[i - 1]), letter(j, e + w[j - 1]));
                        assert_eq!(before, after);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn letter_order_is_total_and_transitive(
            ds in proptest::collection::vec((-20i64..=20, -20i64..=20), 3)
        ) {
            let p = OrderPolicy::weighted(2, vec![2, 1], vec![3, 5]).unwrap();
            let ls: Vec<LoopLetter> = ds
                .iter()
                .map(|&(d, pick)| letter(if pick % 2 == 0 { 1 } else { 2 }, d))
                .collect();
            for &a in &ls {
                for &b in &ls {
                    let ab = p.cmp_letters(a, b);
                    let ba = p.cmp_letters(b, a);
                    prop_assert_eq!(ab, ba.reverse());
                    prop_assert_eq!(ab == Ordering::Equal, a == b);
                    for &c in &ls {
                        if ab != Ordering::Greater && p.cmp_letters(b, c) != Ordering::Greater {
                            prop_assert_ne!(p.cmp_letters(a, c), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }
}
