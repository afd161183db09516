use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix shapes do not match ({0}x{1} and {2}x{3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("index sets have different sizes ({0} and {1})")]
    CardinalityMismatch(usize, usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("singular matrix: determinant is {0}")]
    Singular(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not invertible in the Laurent ring")]
    NotInvertible(String),
    #[error("denominator has zero constant term in x")]
    ZeroConstantTerm,
    #[error("numerator degree {num} is not below denominator degree {den} in x")]
    DegreeCondition { num: i32, den: i32 },
    #[error("continued fraction denominator vanishes at depth {0}")]
    CfZeroDenominator(usize),
    #[error("{var} lies outside the index range of {op}")]
    RelabelOutOfRange { var: String, op: String },
}
