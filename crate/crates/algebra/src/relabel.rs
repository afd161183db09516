//! Index-reversing relabelings of the weight symbols.

use std::fmt;

use crate::error::AlgebraError;
use crate::matrix::{Matrix, Ring};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::var::{Family, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relabel {
    /// `b_i -> b_{n-i}`, `λ_i -> λ_{n+1-i}`.
    R(u32),
    /// `A_i -> V_{k+1-i}`, `V_i -> A_{k+1-i}`.
    RAv(u32),
}

impl fmt::Display for Relabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relabel::R(n) => write!(f, "R({n})"),
            Relabel::RAv(k) => write!(f, "R_AV({k})"),
        }
    }
}

impl Relabel {
    pub fn apply_var(&self, v: Var) -> Result<Var, AlgebraError> {
        let out_of_range = || AlgebraError::RelabelOutOfRange { var: v.to_string(), op: self.to_string() };
        let i = v.index;
        match (*self, v.family) {
            (Relabel::R(n), Family::B) => {
                if i > n {
                    return Err(out_of_range());
                }
                Ok(Var::b(n - i))
            }
            (Relabel::R(n), Family::Lambda) => {
                if i == 0 || i > n + 1 {
                    return Err(out_of_range());
                }
                Ok(Var::lam(n + 1 - i))
            }
            (Relabel::RAv(k), Family::V) | (Relabel::RAv(k), Family::UpperA) => {
                if i == 0 || i > k {
                    return Err(out_of_range());
                }
                let fam = if v.family == Family::V { Family::UpperA } else { Family::V };
                Ok(Var::new(fam, k + 1 - i))
            }
            _ => Ok(v),
        }
    }

    fn check(&self, vars: impl IntoIterator<Item = Var>) -> Result<(), AlgebraError> {
        for v in vars {
            self.apply_var(v)?;
        }
        Ok(())
    }

    pub fn poly(&self, p: &Poly) -> Result<Poly, AlgebraError> {
        self.check(p.vars())?;
        Ok(p.map_vars(|v| self.apply_var(v).unwrap()))
    }

    pub fn ratfunc(&self, f: &RatFunc) -> Result<RatFunc, AlgebraError> {
        self.check(f.num().vars().into_iter().chain(f.den().vars()))?;
        Ok(f.map_vars(|v| self.apply_var(v).unwrap()))
    }

    pub fn matrix(&self, m: &Matrix<Poly>) -> Result<Matrix<Poly>, AlgebraError> {
        m.try_map(|e| self.poly(e))
    }
}

/// Relabels any matrix whose entries can be relabeled.
pub fn relabel_matrix<T: Ring>(
    m: &Matrix<T>,
    f: impl Fn(&T) -> Result<T, AlgebraError>,
) -> Result<Matrix<T>, AlgebraError> {
    m.try_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(i: u32) -> Poly {
        Poly::var(Var::b(i))
    }
    fn lam(i: u32) -> Poly {
        Poly::var(Var::lam(i))
    }

    #[test]
    fn reversal_example() {
        let p = b(1).add(&lam(2)).add(&b(3).pow(2).mul(&lam(1)));
        let r = Relabel::R(5).poly(&p).unwrap();
        assert_eq!(r, b(4).add(&lam(4)).add(&b(2).pow(2).mul(&lam(5))));
    }

    #[test]
    fn involutions() {
        let p = b(0).mul(&lam(2));
        let r = Relabel::R(3);
        assert_eq!(r.poly(&r.poly(&p).unwrap()).unwrap(), p);
        let q = Poly::var(Var::v(1)).mul(&Poly::var(Var::big_a(2)));
        let s = Relabel::RAv(2);
        assert_eq!(s.poly(&q).unwrap(), Poly::var(Var::big_a(2)).mul(&Poly::var(Var::v(1))));
        assert_eq!(s.poly(&s.poly(&q).unwrap()).unwrap(), q);
    }

    #[test]
    fn out_of_range() {
        assert!(Relabel::R(2).poly(&b(3)).is_err());
        assert_eq!(Relabel::R(2).poly(&Poly::var(Var::X)).unwrap(), Poly::var(Var::X));
    }
}
