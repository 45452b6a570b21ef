use thiserror::Error;

use crate::coeff::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at H = {0}")]
    PoleEvaluation(Rational),
    #[error("super bracket argument is not parity-homogeneous")]
    MixedParity,
    #[error("x_-alpha pushed the polynomial degree past the truncation N = {0}")]
    TruncationOverflow(u32),
    #[error("weight {weight} needs polynomial degree {needed}, truncation is {trunc}")]
    WindowNotClosed { weight: Rational, needed: u32, trunc: u32 },
    #[error("vector is not annihilated by X(1) and X(2)")]
    NotPrimitive,
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown token `{token}` at {line}:{column}")]
    UnknownToken {
        token: String,
        line: usize,
        column: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
