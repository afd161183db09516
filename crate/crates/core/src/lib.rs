//! Bounded and negative moments of orthogonal polynomials, the lattice-path
//! oracles behind them, and exact checks of the determinant reciprocity
//! identities they satisfy.

pub mod catalog;
pub mod certificate;
mod error;
pub mod laurent;
pub mod moments;
pub mod paths;
pub mod pv;
pub mod reciprocity;
pub mod weights;

pub use certificate::{IdentityCheck, Status};
pub use error::MomentError;
pub use moments::NegRoute;
pub use weights::{Seq, WeightSpec};
