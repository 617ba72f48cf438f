//! q,t-characters: the t-algorithm, fundamental characters, standard
//! modules `E_t(m)`, the deformed product on `Rep_t` and the canonical basis
//! `L_t(m)` with its Kazhdan–Lusztig type polynomials.

mod algorithm;
mod characters;
mod kl;
mod rep;

pub use algorithm::{AlgorithmState, Budget, CharacterTree, TreeEdge};
pub use characters::QtCharacters;
pub use kl::{Decomposition, KlResult, KlRow, PositivityReport};
pub use rep::{rep_monomial_string, RepElement};

use screening::ScreeningError;
use thiserror::Error;
use yt_algebra::Node;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QtError {
    #[error("monomial {0} is not dominant")]
    NotDominant(String),
    #[error("t-algorithm failed at {monomial}: node {first} gives {a}, node {second} gives {b}")]
    AlgorithmFails {
        monomial: String,
        first: Node,
        a: String,
        second: Node,
        b: String,
    },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("cannot invert the q,t-character map: residual without dominant monomial")]
    InversionFails,
    #[error("bar-invariant representative of {0} needs a half-integral t-shift")]
    NonIntegralShift(String),
    #[error(transparent)]
    Screening(#[from] ScreeningError),
}
