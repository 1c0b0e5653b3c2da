use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Var;

/// Every failure the library can report. Variants carry enough data for a
/// caller to tell where things went wrong; pipeline stages are attached by
/// [`crate::pipeline::StageError`].
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum Error {
    #[error("cannot eliminate {0}: an input has degree 0 in it")]
    InvalidElimination(Var),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("no admissible order-0 branch regular at y=0")]
    NoSeriesBranch,
    #[error("{0} admissible order-0 branches")]
    AmbiguousBranch(usize),
    #[error("degenerate kernel at order {0}")]
    DegenerateKernel(usize),
    #[error("coefficient of x^{0} has a pole at y=0")]
    PoleAtYZero(usize),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("resultant vanishes identically")]
    ResultantVanishes,
    #[error("no factor of the eliminant annihilates the witness")]
    NoVanishingFactor,
    #[error("defect annihilator collapsed to zero")]
    ZeroAnnihilator,
    #[error("guess refuted at order {0}")]
    RefutedGuess(usize),
    #[error("polynomial is not squarefree in f")]
    NonSquarefree,
    #[error("insufficient data: need {needed} terms, have {available}")]
    InsufficientData { needed: usize, available: usize },
    #[error("initial values do not cover singular index {0}")]
    MissingInitials(usize),
    #[error("invalid index {0}")]
    InvalidIndex(i64),
    #[error("syntax error at {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("not a polynomial at {pos}: {msg}")]
    NonPolynomial { pos: usize, msg: String },
    #[error("invalid equation: {0}")]
    InvalidEquation(String),
    #[error("resource ceiling exceeded: {0}")]
    ResourceCeiling(String),
}

pub type Result<T> = std::result::Result<T, Error>;
