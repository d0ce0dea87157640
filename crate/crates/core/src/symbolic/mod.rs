//! Exact Laurent polynomial and rational function arithmetic, and the
//! pullbacks of cluster transformations.

pub mod factored;
pub mod fastpath;
pub mod gcd;
pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod xmap;

use thiserror::Error;

use crate::lattice::LatticeError;

pub use factored::{FactorBase, FactoredFn};
pub use poly::{LaurentPoly, Mono};
pub use ratfn::{ratfn_equal, RationalFn, DEFAULT_SIMPLIFY_THRESHOLD};
pub use scalar::{Fp, Scalar};
pub use xmap::{
    evaluate_word, evaluate_word_with, is_trivial_word, triviality, xmap_compose, xmap_is_identity,
    xmap_of_step, xmaps_equal, EvalOptions, Verdict, XMap,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("mutation exponent is not integral in the character basis")]
    NonIntegralExponent,
    #[error("maps are not composable")]
    NotComposable,
    #[error("time budget exceeded")]
    BudgetExceeded,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
