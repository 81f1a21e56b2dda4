//! Closed forms for divisible weight chains under the order `1 < 2 < … < n`:
//! the first-letter table, the type-A closed-form word for `θ`, and the
//! letter-multiset rule for B/C/D roots with all coefficients ≥ 1.
//!
//! Everything here assumes the increasing order and `c_i | c_{i+1}`; other
//! configurations route through the general engines.

use crate::error::{Error, Result};
use crate::words::{LetterMultiset, LoopLetter, LoopWord};

/// The first-letter sequence, kept with its column structure for rendering.
/// Index `i` appears exactly `m_i·c_i` times in the flattened sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstLetterTable {
    columns: Vec<Vec<usize>>,
    flat: Vec<usize>,
}

impl FirstLetterTable {
    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Column-major flattening: the first letter of `ℓ(α, d)` is entry `d-1`.
    pub fn flat(&self) -> &[usize] {
        &self.flat
    }

    /// How often `index` occurs among the first `d` entries.
    pub fn prefix_count(&self, index: usize, d: usize) -> usize {
        self.flat[..d].iter().filter(|&&x| x == index).count()
    }

    /// Text layout mirroring the reference figures: one row per depth,
    /// columns aligned.
    pub fn render(&self) -> String {
        let depth = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
        let widths: Vec<usize> = self
            .columns
            .iter()
            .map(|c| c.iter().map(|x| x.to_string().len()).max().unwrap_or(1))
            .collect();
        let mut lines = Vec::new();
        for row in 0..depth {
            let mut cells = Vec::new();
            for (col, w) in self.columns.iter().zip(&widths) {
                let cell = col.get(row).map(|x| x.to_string()).unwrap_or_default();
                cells.push(format!("{cell:>w$}", w = w));
            }
            lines.push(cells.join(" ").trim_end().to_string());
        }
        lines.join("\n")
    }
}

fn check_chain(n: usize, weights: &[i64]) -> Result<()> {
    if weights.len() != n || n == 0 {
        return Err(Error::Precondition(format!(
            "expected {n} weights, got {}",
            weights.len()
        )));
    }
    if weights.iter().any(|&c| c < 1) {
        return Err(Error::Precondition("weights must be positive".into()));
    }
    for w in weights.windows(2) {
        if w[1] % w[0] != 0 {
            return Err(Error::Precondition(format!(
                "divisibility chain violated: {} does not divide {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Builds the first-letter table for weights `c` and multiplicities `m`
/// (all 1 in type A): start with a column of `m_n` entries `n`; at step `i`
/// paste the table `c_{n-i+2}/c_{n-i+1} - 1` more times and append `m_{n-i+1}`
/// entries `n-i+1` to the last column; finally paste the whole table
/// `c_1 - 1` more times.
pub fn build_table(n: usize, weights: &[i64], mults: &[i64]) -> Result<FirstLetterTable> {
    check_chain(n, weights)?;
    if mults.len() != n || mults.iter().any(|&m| m < 1) {
        return Err(Error::Precondition(
            "one positive multiplicity per node required".into(),
        ));
    }
    let mut columns: Vec<Vec<usize>> = vec![vec![n; mults[n - 1] as usize]];
    for i in 2..=n {
        let ratio = weights[n - i + 1] / weights[n - i];
        let copy = columns.clone();
        for _ in 0..ratio - 1 {
            columns.extend(copy.iter().cloned());
        }
        let last = columns.last_mut().expect("nonempty");
        for _ in 0..mults[n - i] {
            last.push(n - i + 1);
        }
    }
    let copy = columns.clone();
    for _ in 0..weights[0] - 1 {
        columns.extend(copy.iter().cloned());
    }
    let flat: Vec<usize> = columns.iter().flatten().copied().collect();
    Ok(FirstLetterTable { columns, flat })
}

/// Closed form for `ℓ(θ, d)` in type `A_n`, `0 < d ≤ Σ c_i`: with first
/// letter `a^(k)` read off the table, the word is
/// `[a^(k) (a-1)^(k_2) … 1^(k_a) (a+1)^(k_{a+1}) … n^(k_n)]` with
/// `k_i = ⌈k·c_{a-i+1}/c_a − 1⌉` for `1 < i ≤ a` and `k_i = k·c_i/c_a`
/// for `a < i ≤ n`.
pub fn closed_form_word(n: usize, weights: &[i64], d: i64) -> Result<LoopWord> {
    check_chain(n, weights)?;
    let span: i64 = weights.iter().sum();
    if d < 1 || d > span {
        return Err(Error::Precondition(format!(
            "d={d} outside the window 0 < d ≤ {span}; reduce via periodicity first"
        )));
    }
    let table = build_table(n, weights, &vec![1; n])?;
    let a = table.flat()[(d - 1) as usize];
    let k = table.prefix_count(a, d as usize) as i64;
    let ca = weights[a - 1];

    let mut letters = vec![LoopLetter::new(a, k)];
    for i in 2..=a {
        let j = a - i + 1; // letter a-1, a-2, …, 1
        let cj = weights[j - 1];
        // ⌈k·c_j/c_a − 1⌉ = ⌈(k·c_j − c_a)/c_a⌉ with c_a > 0.
        let exponent = -(-(k * cj - ca)).div_euclid(ca);
        letters.push(LoopLetter::new(j, exponent));
    }
    for j in a + 1..=n {
        let cj = weights[j - 1];
        letters.push(LoopLetter::new(j, k * cj / ca));
    }
    Ok(LoopWord::new(letters))
}

/// Same closed form with `d` reduced to the fundamental window by the
/// periodicity shift `i^(e) ↦ i^(e + q·c_i)`.
pub fn closed_form_word_extended(n: usize, weights: &[i64], d: i64) -> Result<LoopWord> {
    let span: i64 = weights.iter().sum();
    let r = (d - 1).rem_euclid(span) + 1;
    let q = (d - r) / span;
    let base = closed_form_word(n, weights, r)?;
    Ok(LoopWord::new(
        base.letters()
            .iter()
            .map(|l| LoopLetter::new(l.index, l.exponent + q * weights[l.index - 1]))
            .collect(),
    ))
}

/// Letter multiset of `ℓ(α, d)` for B/C/D roots `α = Σ m_i α_i` with all
/// `m_i ≥ 1` and `0 < d ≤ Σ m_i c_i`: if `p_i = m_i·e_i + r_i` is the number
/// of occurrences of `i` in the length-`d` table prefix, then `r_i` copies of
/// `i` carry exponent `e_i + 1` and the remaining `m_i − r_i` carry `e_i`.
pub fn bcd_multiset(weights: &[i64], mults: &[i64], d: i64) -> Result<LetterMultiset> {
    let n = weights.len();
    check_chain(n, weights)?;
    if mults.len() != n || mults.iter().any(|&m| m < 1) {
        return Err(Error::Precondition(
            "the multiset rule needs every coefficient m_i ≥ 1".into(),
        ));
    }
    let span: i64 = weights.iter().zip(mults).map(|(c, m)| c * m).sum();
    if d < 1 || d > span {
        return Err(Error::Precondition(format!(
            "d={d} outside the window 0 < d ≤ {span}"
        )));
    }
    let table = build_table(n, weights, mults)?;
    let mut out = LetterMultiset::empty();
    for i in 1..=n {
        let p = table.prefix_count(i, d as usize) as i64;
        let m = mults[i - 1];
        let e = p.div_euclid(m);
        let r = p.rem_euclid(m);
        for _ in 0..r {
            out.insert(LoopLetter::new(i, e + 1));
        }
        for _ in 0..m - r {
            out.insert(LoopLetter::new(i, e));
        }
    }
    Ok(out)
}
