//! Reduced rational functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::gcd::gcd;
use crate::poly::{Poly, Subst};
use crate::rational::Rational;
use crate::var::Monomial;

/// `num / den` with polynomial parts, coprime, and `den` primitive over Z
/// with a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        RatFunc::from_poly(&Poly::constant(c.into()))
    }

    /// Embeds a Laurent polynomial; negative powers move to the denominator.
    pub fn from_poly(p: &Poly) -> Self {
        let content = p.monomial_content();
        let neg = Monomial::from_pairs(content.factors().iter().filter(|f| f.1 < 0).map(|&(v, e)| (v, -e)));
        if neg.is_one() {
            return RatFunc { num: p.clone(), den: Poly::one() };
        }
        RatFunc { num: p.mul_monomial(&neg), den: Poly::monomial(neg) }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let (mn, n) = num.split_monomial_content();
        let (md, d) = den.split_monomial_content();
        let ratio = mn.div(&md);
        let pos = Monomial::from_pairs(ratio.factors().iter().copied().filter(|f| f.1 > 0));
        let neg = Monomial::from_pairs(ratio.factors().iter().filter(|f| f.1 < 0).map(|&(v, e)| (v, -e)));
        let g = gcd(&n, &d);
        let (n, d) = if g.is_constant() { (n, d) } else { (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap()) };
        Ok(RatFunc::normalized(n.mul_monomial(&pos), d.mul_monomial(&neg)))
    }

    /// `num / base^e`, cancelling whole powers of `base` by trial division
    /// before the general reduction.
    pub fn from_power_denominator(num: Poly, base: &Poly, e: u32) -> Result<Self, AlgebraError> {
        if base.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut num = num;
        let mut e = e;
        while e > 0 && !num.is_zero() {
            match num.div_exact(base) {
                Some(q) => {
                    num = q;
                    e -= 1;
                }
                None => break,
            }
        }
        RatFunc::new(num, base.pow(e))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        let (c, den) = den.primitive_part();
        let num = if c.is_one() { num } else { num.scale(&c.recip().unwrap()) };
        RatFunc { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial when the denominator is a monomial.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.den.unit_inverse().map(|u| self.num.mul(&u))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.to_poly().and_then(|p| p.constant_value())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return RatFunc { num: self.num.add(&other.num), den: self.den.clone() };
            }
            return RatFunc::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return RatFunc::normalized(num, self.den.mul(&other.den));
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = gcd(&num, &g);
        let (num, g) = if h.is_constant() { (num, g) } else { (num.div_exact(&h).unwrap(), g.div_exact(&h).unwrap()) };
        RatFunc::normalized(num, g.mul(&b1).mul(&d1))
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: Poly::one() };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let cut = |p: &Poly, g: &Poly| if g.is_constant() { p.clone() } else { p.div_exact(g).unwrap() };
        let num = cut(&self.num, &g1).mul(&cut(&other.num, &g2));
        let den = cut(&self.den, &g2).mul(&cut(&other.den, &g1));
        RatFunc::normalized(num, den)
    }

    pub fn inv(&self) -> Result<RatFunc, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc::normalized(base.num.pow(k), base.den.pow(k)))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p))
    }

    pub fn subs(&self, s: &Subst) -> Result<RatFunc, AlgebraError> {
        let n = RatFunc::from_poly(&self.num.subs(s)?);
        let d = RatFunc::from_poly(&self.den.subs(s)?);
        n.div(&d)
    }

    pub fn map_vars(&self, f: impl Fn(crate::var::Var) -> crate::var::Var) -> RatFunc {
        RatFunc::new(self.num.map_vars(&f), self.den.map_vars(&f)).unwrap()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(&p)
    }
}

impl From<&Poly> for RatFunc {
    fn from(p: &Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 && self.den.len() == 1 {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::div(self, rhs).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::Var;

    fn b(i: u32) -> Poly {
        Poly::var(Var::b(i))
    }

    #[test]
    fn reduces_common_factors() {
        let f = b(0).add(&b(1));
        let r = RatFunc::new(f.mul(&b(2)), f.mul(&Poly::int(-2)).mul(&b(0))).unwrap();
        assert_eq!(r.num(), &(b(2).scale(&Rational::new(-1, 2))));
        assert_eq!(r.den(), &b(0));
    }

    #[test]
    fn laurent_roundtrip() {
        let p = Poly::var_pow(Var::v(0), -2).mul(&b(0).add(&Poly::one()));
        let r = RatFunc::from_poly(&p);
        assert_eq!(r.den(), &Poly::var_pow(Var::v(0), 2));
        assert_eq!(r.to_poly().unwrap(), p);
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(Poly::one(), b(0)).unwrap();
        let c = RatFunc::new(Poly::one(), b(1)).unwrap();
        let s = a.add(&c);
        assert_eq!(s, RatFunc::new(b(0).add(&b(1)), b(0).mul(&b(1))).unwrap());
        assert_eq!(s.sub(&c), a);
        assert_eq!(s.mul(&s.inv().unwrap()), RatFunc::one());
        let mut sub = Subst::new();
        sub.insert(Var::b(0), Poly::zero());
        assert_eq!(a.subs(&sub), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn power_denominator() {
        let d = b(0).mul(&b(1)).sub(&Poly::var(Var::lam(1)));
        let r = RatFunc::from_power_denominator(d.pow(2).mul(&b(2)), &d, 3).unwrap();
        assert_eq!(r, RatFunc::new(b(2), d).unwrap());
    }
}
