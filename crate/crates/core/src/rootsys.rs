//! Finite root systems of the simple Lie types: Cartan data, positive roots,
//! pairings, highest root and labels.
//!
//! Node numbering follows the convention of the reference tables this crate
//! reproduces: types A–D agree with Bourbaki, G2 and F4 are numbered from the
//! opposite end of the diagram (node 1 of G2 is long; nodes 1,2 of F4 are
//! short), and the E types number the long chain first with the branch node
//! last (E6: branch 6 on node 3; E7: branch 7 on node 4; E8: branch 8 on
//! node 5).
//!
//! Roots are generated from the Cartan matrix by root strings, so the whole
//! construction is integer-exact and table-free.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// One of the nine simple types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl TypeLabel {
    pub fn parse(s: &str) -> Result<TypeLabel> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            "E6" => Ok(TypeLabel::E6),
            "E7" => Ok(TypeLabel::E7),
            "E8" => Ok(TypeLabel::E8),
            "F4" => Ok(TypeLabel::F4),
            "G2" => Ok(TypeLabel::G2),
            other => Err(Error::Config(format!("unknown type label `{other}`"))),
        }
    }

    /// The rank when the label determines it (exceptional types).
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            TypeLabel::E6 => Some(6),
            TypeLabel::E7 => Some(7),
            TypeLabel::E8 => Some(8),
            TypeLabel::F4 => Some(4),
            TypeLabel::G2 => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::E6 => "E6",
            TypeLabel::E7 => "E7",
            TypeLabel::E8 => "E8",
            TypeLabel::F4 => "F4",
            TypeLabel::G2 => "G2",
        };
        f.write_str(s)
    }
}

/// A root written in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, index1: usize) -> i64 {
        self.coeffs[index1 - 1]
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A finite root system together with its Cartan data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    type_label: TypeLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym_cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    theta: Root,
    labels: Vec<i64>,
}

/// `a[i][j] = 2(α_i, α_j)/(α_i, α_i)` in the table numbering described in the
/// module docs.
fn cartan_matrix(label: TypeLabel, rank: usize) -> Result<Vec<Vec<i64>>> {
    let n = rank;
    let valid = match label {
        TypeLabel::A => n >= 1,
        TypeLabel::B | TypeLabel::C => n >= 2,
        TypeLabel::D => n >= 3,
        _ => Some(n) == label.fixed_rank(),
    };
    if !valid {
        return Err(Error::Config(format!("invalid rank {n} for type {label}")));
    }

    // Simply-laced edges (1-based node pairs); double/triple bonds patched after.
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    match label {
        TypeLabel::D => {
            edges = (1..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 2, n));
        }
        TypeLabel::E6 => edges = vec![(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)],
        TypeLabel::E7 => edges = vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
        TypeLabel::E8 => edges = vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
        _ => {}
    }

    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(p, q) in &edges {
        a[p - 1][q - 1] = -1;
        a[q - 1][p - 1] = -1;
    }
    match label {
        TypeLabel::B => a[n - 1][n - 2] = -2, // node n short
        TypeLabel::C => a[n - 2][n - 1] = -2, // node n long
        TypeLabel::F4 => a[1][2] = -2,        // nodes 1,2 short; 3,4 long
        TypeLabel::G2 => a[1][0] = -3,        // node 1 long, node 2 short
        _ => {}
    }
    Ok(a)
}

/// Minimal positive symmetrizing integers `d_i` with `d_i a_ij = d_j a_ji`.
fn symmetrizers(label: TypeLabel, rank: usize) -> Vec<i64> {
    let n = rank;
    match label {
        TypeLabel::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        TypeLabel::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        TypeLabel::F4 => vec![1, 1, 2, 2],
        TypeLabel::G2 => vec![3, 1],
        _ => vec![1; n],
    }
}

impl RootSystem {
    /// Builds the system by root-string closure from the Cartan matrix.
    pub fn build(type_label: TypeLabel, rank: usize) -> Result<RootSystem> {
        let cartan = cartan_matrix(type_label, rank)?;
        let d = symmetrizers(type_label, rank);
        let sym_cartan: Vec<Vec<i64>> = cartan
            .iter()
            .zip(&d)
            .map(|(row, di)| row.iter().map(|a| di * a).collect())
            .collect();
        debug_assert!((0..rank).all(|i| (0..rank).all(|j| sym_cartan[i][j] == sym_cartan[j][i])));

        // Root strings upward: process roots by height; for a known root β and
        // node i, the string β, β−α_i, ..., β−pα_i determines q = p − ⟨β, α_i∨⟩
        // and β+α_i is a root iff q ≥ 1.
        let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut by_height: Vec<Vec<Root>> = vec![Vec::new()];
        let simples: Vec<Root> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                Root::new(v)
            })
            .collect();
        by_height.push(simples.clone());
        for s in &simples {
            known.insert(s.coeffs().to_vec(), ());
        }
        let mut h = 1usize;
        while h < by_height.len() {
            let current = by_height[h].clone();
            for beta in &current {
                for i in 0..rank {
                    let alpha_i = &simples[i];
                    let mut p = 0i64;
                    let mut down = beta.sub(alpha_i);
                    while known.contains_key(down.coeffs()) {
                        p += 1;
                        down = down.sub(alpha_i);
                    }
                    let pairing: i64 = (0..rank).map(|j| cartan[i][j] * beta.coeffs()[j]).sum();
                    let q = p - pairing;
                    if q >= 1 {
                        let up = beta.add(alpha_i);
                        if !known.contains_key(up.coeffs()) {
                            known.insert(up.coeffs().to_vec(), ());
                            while by_height.len() <= h + 1 {
                                by_height.push(Vec::new());
                            }
                            by_height[h + 1].push(up);
                        }
                    }
                }
            }
            h += 1;
        }

        let mut positive_roots: Vec<Root> = known.keys().map(|v| Root::new(v.clone())).collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then(a.coeffs().cmp(b.coeffs())));
        let index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs().to_vec(), k))
            .collect();

        // θ is the unique root that cannot be raised by any simple root.
        let mut maximal: Vec<&Root> = Vec::new();
        for beta in &positive_roots {
            let raisable = simples
                .iter()
                .any(|a| index.contains_key(beta.add(a).coeffs()));
            if !raisable {
                maximal.push(beta);
            }
        }
        if maximal.len() != 1 {
            return Err(Error::Invariant(format!(
                "expected a unique highest root, found {}",
                maximal.len()
            )));
        }
        let theta = maximal[0].clone();
        let labels = theta.coeffs().to_vec();

        Ok(RootSystem {
            type_label,
            rank,
            cartan,
            sym_cartan,
            positive_roots,
            index,
            theta,
            labels,
        })
    }

    pub fn type_label(&self) -> TypeLabel {
        self.type_label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn sym_cartan(&self) -> &[Vec<i64>] {
        &self.sym_cartan
    }

    /// Positive roots sorted by height, then lexicographically by coefficients.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    /// Coefficients of θ over the simple roots.
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn simple_root(&self, index1: usize) -> Root {
        let mut v = vec![0i64; self.rank];
        v[index1 - 1] = 1;
        Root::new(v)
    }

    pub fn root_index(&self, root: &Root) -> Option<usize> {
        self.index.get(root.coeffs()).copied()
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    /// Membership in Δ = Δ⁺ ⊔ −Δ⁺.
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// `α + β` when the sum is again a positive root.
    pub fn add_roots(&self, alpha: &Root, beta: &Root) -> Option<Root> {
        let sum = alpha.add(beta);
        if self.is_positive_root(sum.coeffs()) {
            Some(sum)
        } else {
            None
        }
    }

    /// Symmetric pairing `(α, β) = Σ k_i m_j d_ij`.
    pub fn pairing(&self, alpha: &Root, beta: &Root) -> i64 {
        let mut acc = 0i64;
        for (i, &ki) in alpha.coeffs().iter().enumerate() {
            if ki == 0 {
                continue;
            }
            for (j, &mj) in beta.coeffs().iter().enumerate() {
                if mj != 0 {
                    acc += ki * mj * self.sym_cartan[i][j];
                }
            }
        }
        acc
    }

    /// `⟨β, α_i∨⟩ = 2(β, α_i)/(α_i, α_i)`, a row of the Cartan matrix.
    pub fn coroot_pairing(&self, index1: usize, beta: &[i64]) -> i64 {
        (0..self.rank)
            .map(|j| self.cartan[index1 - 1][j] * beta[j])
            .sum()
    }

    /// `⟨β, θ∨⟩ = 2(β, θ)/(θ, θ)`.
    pub fn theta_coroot_pairing(&self, beta: &[i64]) -> i64 {
        let beta_root = Root::new(beta.to_vec());
        let num = 2 * self.pairing(&beta_root, &self.theta);
        let den = self.pairing(&self.theta, &self.theta);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// All splittings `α = γ1 + γ2` with both parts positive roots.
    /// Returns ordered pairs (γ1 runs over every proper subroot).
    pub fn splittings(&self, alpha: &Root) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for gamma1 in &self.positive_roots {
            if gamma1.height() >= alpha.height() {
                break;
            }
            let diff = alpha.sub(gamma1);
            if diff.is_nonnegative() && self.is_positive_root(diff.coeffs()) {
                out.push((gamma1.clone(), diff));
            }
        }
        out
    }
}
