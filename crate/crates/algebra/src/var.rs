//! Indeterminates and Laurent monomials.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Symbol families, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `b_i`
    B,
    /// `λ_i`, printed `lam`
    Lambda,
    /// `a_i` of the Laurent biorthogonal setting
    LowerA,
    /// `V_i`
    V,
    /// `A_i`
    UpperA,
    Q,
    X,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::B => "b",
            Family::Lambda => "lam",
            Family::LowerA => "a",
            Family::V => "V",
            Family::UpperA => "A",
            Family::Q => "q",
            Family::X => "x",
        }
    }

    pub fn is_indexed(self) -> bool {
        !matches!(self, Family::Q | Family::X)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub const Q: Var = Var { family: Family::Q, index: 0 };
    pub const X: Var = Var { family: Family::X, index: 0 };

    pub fn new(family: Family, index: u32) -> Self {
        let index = if family.is_indexed() { index } else { 0 };
        Var { family, index }
    }

    pub fn b(i: u32) -> Self {
        Var::new(Family::B, i)
    }

    pub fn lam(i: u32) -> Self {
        Var::new(Family::Lambda, i)
    }

    pub fn a(i: u32) -> Self {
        Var::new(Family::LowerA, i)
    }

    pub fn v(i: u32) -> Self {
        Var::new(Family::V, i)
    }

    pub fn big_a(i: u32) -> Self {
        Var::new(Family::UpperA, i)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_indexed() {
            write!(f, "{}{}", self.family.prefix(), self.index)
        } else {
            f.write_str(self.family.prefix())
        }
    }
}

/// A Laurent monomial: sorted `(var, exponent)` pairs with nonzero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut m = Monomial::one();
        if e != 0 {
            m.0.push((v, e));
        }
        m
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut v: Vec<(Var, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, i32); 4]> = SmallVec::new();
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0.binary_search_by_key(&v, |p| p.0).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|p| p.1 > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    /// `self / other` in the Laurent sense.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// True when `other / self` has no negative exponents.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exp(v) >= e)
    }

    /// Componentwise minimum of exponents, treating absent as zero.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |a, b| a.min(b))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |a, b| a.max(b))
    }

    /// Removes the factor of `v`, returning it separately.
    pub fn split_off(&self, v: Var) -> (i32, Monomial) {
        let e = self.exp(v);
        let rest = Monomial(self.0.iter().copied().filter(|p| p.0 != v).collect());
        (e, rest)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(v, e)| (v, sign * e)));
        Monomial(out)
    }

    fn merge_with(&self, other: &Monomial, f: impl Fn(i32, i32) -> i32) -> Monomial {
        let mut vars: Vec<Var> = self.vars().chain(other.vars()).collect();
        vars.sort();
        vars.dedup();
        Monomial(vars.into_iter().map(|v| (v, f(self.exp(v), other.exp(v)))).filter(|p| p.1 != 0).collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic; earlier symbols in the canonical order weigh more.
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        let m = Monomial::from_pairs([(Var::lam(1), 1), (Var::b(0), 2), (Var::X, -1)]);
        assert_eq!(m.to_string(), "b0^2*lam1*x^-1");
        assert_eq!(Var::big_a(4).to_string(), "A4");
        assert_eq!(Var::Q.to_string(), "q");
    }

    #[test]
    fn grlex() {
        let x2 = Monomial::var_pow(Var::X, 2);
        let b0x = Monomial::from_pairs([(Var::b(0), 1), (Var::X, 1)]);
        let b0 = Monomial::var(Var::b(0));
        assert!(b0x > x2);
        assert!(x2 > b0);
        assert!(Monomial::var(Var::b(0)) > Monomial::var(Var::b(1)));
    }

    #[test]
    fn laurent_ops() {
        let m = Monomial::from_pairs([(Var::v(0), 1), (Var::v(1), 2)]);
        let n = Monomial::from_pairs([(Var::v(1), 3)]);
        assert_eq!(m.div(&n).to_string(), "V0*V1^-1");
        assert!(m.mul(&m.inv()).is_one());
        assert_eq!(m.gcd(&n).to_string(), "V1^2");
    }
}
