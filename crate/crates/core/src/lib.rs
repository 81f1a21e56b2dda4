//! Standard Lyndon loop words for the simple Lie types.
//!
//! The library computes the bijection `(alpha, d) -> standard Lyndon loop word`
//! between `Δ⁺ × Z` and the set of standard Lyndon words over the loop alphabet
//! `{ i^(d) }`, for any total order on the node set and any weighted (or
//! piecewise-linear generalized) exponent-comparison policy. Three independent
//! routes to the same words are provided and cross-checked:
//!
//! * [`leclerc`] — the inductive maximal-splitting recursion, in a naive
//!   (window-bounded) and a fast (letter-multiset-pruned) variant;
//! * [`oracle`] — definition-level brute force over all Lyndon words of a
//!   degree with a nonvanishing iterated bracket;
//! * [`weyl`] — affine Weyl group combinatorics: translation-element terminal
//!   sets and convex root sequences that must list `Δ⁺ × Z` in the same order.
//!
//! [`typea`] adds the closed forms available for divisible weight chains in
//! type A (and the letter-multiset rule for B/C/D), and [`verify`] packages
//! the cross-checks as runnable suites.
//!
//! All arithmetic is exact: integer cross-multiplication for weighted orders,
//! reduced `i64` rationals for generalized slopes. No floating point is used
//! anywhere.

pub mod error;
pub mod leclerc;
pub mod oracle;
pub mod order;
pub mod rootsys;
pub mod typea;
pub mod verify;
pub mod weyl;
pub mod words;

pub use error::{Error, Result};
pub use leclerc::{Engine, WordTables};
pub use order::{ExponentRule, MarkerLadder, OrderPolicy, Ratio, Sign};
pub use rootsys::{Root, RootSystem, TypeLabel};
pub use words::{LetterMultiset, LoopLetter, LoopWord};
