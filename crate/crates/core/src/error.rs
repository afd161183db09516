use negmom_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MomentError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("negative moments at bound {k} are not defined: P_{}(0) = {p0}", k + 1)]
    IllDefined { k: u32, p0: String },
    #[error("index {index} exceeds the bound {bound}")]
    IndexOutOfRange { index: u32, bound: u32 },
    #[error("weight {0} vanishes")]
    ZeroWeight(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}
