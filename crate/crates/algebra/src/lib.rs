//! Exact algebra: rationals, Laurent polynomials in the weight symbols,
//! reduced rational functions, and matrices over them.

mod error;
pub mod gcd;
pub mod matrix;
pub mod modp;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod relabel;
pub mod series;
pub mod var;

pub use error::AlgebraError;
pub use matrix::{Matrix, Ring};
pub use poly::{Poly, Subst};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use relabel::Relabel;
pub use series::{cf_eval, reverse_gf, series_expand};
pub use var::{Family, Monomial, Var};
