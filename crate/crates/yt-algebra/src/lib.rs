//! The quantum torus `Y_t`: normal-ordered monomials, the commutation
//! bicharacters, multiplication, `A`-monomials, the partial order and the bar
//! involution.

mod algebra;
mod element;
mod monomial;
pub mod parse;

pub use algebra::Algebra;
pub use cartan_core::Laurent as TPoly;
pub use element::YtElement;
pub use monomial::{AMonomial, BasisMonomial, Level, Node};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YtError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operation requires a simply-laced Cartan matrix")]
    NotSimplyLaced,
}
