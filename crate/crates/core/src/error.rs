use thiserror::Error;

use crate::arith::{Integer, Rational};
use crate::triangle::{Strategy, TriangleKind};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: Integer, divisor: Integer },
    #[error("strategy {strategy} is not available for {kind}")]
    UnsupportedStrategy {
        kind: TriangleKind,
        strategy: Strategy,
    },
    #[error("{kind}({n},{k}) evaluated to the non-integer {value}")]
    NonIntegral {
        kind: TriangleKind,
        n: usize,
        k: usize,
        value: Rational,
    },
    #[error("power series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
}
