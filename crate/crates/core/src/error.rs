use thiserror::Error;

use crate::algebra::Generator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation point is a pole")]
    EvaluationPole,

    #[error("Cartan entry {0} must be nonpositive")]
    InvalidCartanEntry(i64),
    #[error("Cartan matrix must be {n}x{n}")]
    BadShape { n: usize },
    #[error("diagonal entry A[{i}][{i}] = {value}, expected 2")]
    BadDiagonal { i: usize, value: i64 },
    #[error("off-diagonal entry A[{i}][{j}] = {value} is positive")]
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    #[error("A[{i}][{j}] and A[{j}][{i}] must vanish together")]
    AsymmetricZero { i: usize, j: usize },
    #[error("matrix is not symmetrizable (inconsistent ratio at ({i},{j}))")]
    NotSymmetrizable { i: usize, j: usize },
    #[error("cartan file, line {line}: {message}")]
    CartanFormat { line: usize, message: String },

    #[error("no image assigned to generator {0}")]
    UnassignedSymbol(Generator),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("generator {0} does not belong to this presentation")]
    ForeignGenerator(Generator),

    #[error("rewriting exceeded the step budget of {0}")]
    FuelExhausted(u64),
    #[error("multidegree {degree} exceeds the membership enumeration cap {cap}")]
    WindowTooSmall { degree: usize, cap: usize },

    #[error("element is not group-like")]
    NotGroupLike,
    #[error("the equitable Hopf formula check {0} did not pass")]
    UnverifiedFormula(String),

    #[error("syntax error at {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("generator {name} is out of range for rank {rank}")]
    UnknownGenerator { name: String, rank: usize },
    #[error("generator {name} is not part of the {flavor} alphabet")]
    FlavorMismatch { name: String, flavor: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
