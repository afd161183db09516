//! Sparse multivariate Laurent polynomials over the rationals.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::modp;
use crate::rational::Rational;
use crate::var::{Monomial, Var};

/// Terms are kept sorted by decreasing monomial, without zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

/// Simultaneous assignment of polynomials to indeterminates.
pub type Subst = BTreeMap<Var, Poly>;

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Poly::term(Monomial::one(), c.into())
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(Rational::from(c))
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::var(v), Rational::one())
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Poly::term(Monomial::var_pow(v, e), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(m, Rational::one())
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(Rational::zero) += &c;
        }
        Poly::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    fn from_sorted(terms: Vec<(Monomial, Rational)>) -> Self {
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// A single term is a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_polynomial())
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.iter().flat_map(|t| t.0.vars()).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) != 0)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> i32 {
        self.terms.iter().map(|t| t.0.exp(v)).min().unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_sorted(self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect())
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        // Multiplying by a monomial preserves the term order.
        Poly::from_sorted(self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sgn = |c: &Rational| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        Poly::from_sorted(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m).scale(c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m).scale(c);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += &c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Poly::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Inverse in the Laurent ring, defined only for single terms.
    pub fn unit_inverse(&self) -> Option<Poly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = &self.terms[0];
        Some(Poly::term(m.inv(), c.recip()?))
    }

    /// Integer power allowing negative exponents for units.
    pub fn powi(&self, e: i32) -> Result<Poly, AlgebraError> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let inv = self.unit_inverse().ok_or_else(|| AlgebraError::NotInvertible(self.to_string()))?;
        Ok(inv.pow((-e) as u32))
    }

    /// Componentwise minimum exponent over all terms (the largest monomial factor).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some(t) => t.0.clone(),
            None => return Monomial::one(),
        };
        it.fold(first, |acc, t| acc.gcd(&t.0))
    }

    /// Splits off the monomial content so the remaining polynomial has
    /// nonnegative exponents and no monomial factor.
    pub fn split_monomial_content(&self) -> (Monomial, Poly) {
        let m = self.monomial_content();
        if m.is_one() {
            return (m, self.clone());
        }
        let inv = m.inv();
        (m, self.mul_monomial(&inv))
    }

    /// Writes `self = c * p` with `p` integral, primitive, positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::one(), Poly::zero());
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den / c.denom());
            g = g.gcd(&n);
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        let content = Rational::new(g, den);
        let inv = content.recip().unwrap();
        (content, self.scale(&inv))
    }

    /// Coefficients of `v^0, v^1, ...`; requires nonnegative exponents of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        assert!(self.min_degree_in(v) >= 0, "negative power of {v} in coeffs_in");
        let d = self.degree_in(v).max(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                // Dropping one variable keeps relative order within a bucket
                // only for lex, not grlex, so resort.
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Poly::from_sorted(t)
            })
            .collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            let m = Monomial::var_pow(v, e as i32);
            for (t, a) in &c.terms {
                terms.push((t.mul(&m), a.clone()));
            }
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly::from_sorted(terms)
    }

    /// Coefficient of `v^e` as a polynomial in the remaining symbols.
    pub fn coeff_of(&self, v: Var, e: i32) -> Poly {
        let mut t: Vec<(Monomial, Rational)> =
            self.terms.iter().filter(|(m, _)| m.exp(v) == e).map(|(m, c)| (m.split_off(v).1, c.clone())).collect();
        t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly::from_sorted(t)
    }

    /// Exact quotient in the Laurent ring, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            return d.unit_inverse().map(|u| self.mul(&u));
        }
        let (ma, a) = self.split_monomial_content();
        let (md, dd) = d.split_monomial_content();
        let q = a.div_exact_poly(&dd)?;
        Some(q.mul_monomial(&ma.div(&md)))
    }

    /// Division in the polynomial ring; both operands must have nonnegative exponents.
    fn div_exact_poly(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.terms[0].clone();
        let lc_inv = lc.recip().unwrap();
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = &c * &lc_inv;
            for (t, a) in &d.terms[1..] {
                let key = t.mul(&qm);
                let delta = a * &qc;
                match rem.get_mut(&key) {
                    Some(slot) => {
                        *slot -= &delta;
                        if slot.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            q.push((qm, qc));
        }
        Some(Poly::from_sorted(q))
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Simultaneous substitution. Negative powers need unit images.
    pub fn subs(&self, s: &Subst) -> Result<Poly, AlgebraError> {
        if s.is_empty() {
            return Ok(self.clone());
        }
        let mut cache: HashMap<(Var, i32), Poly> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut keep = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                match s.get(&v) {
                    None => keep.push((v, e)),
                    Some(val) => {
                        let p = match cache.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = val.powi(e)?;
                                cache.insert((v, e), p.clone());
                                p
                            }
                        };
                        factor = factor.mul(&p);
                    }
                }
            }
            let keep = Monomial::from_pairs(keep);
            for (t, a) in factor.terms {
                *acc.entry(t.mul(&keep)).or_insert_with(Rational::zero) += &a;
            }
        }
        Ok(Poly::from_map(acc))
    }

    /// Evaluates modulo `p` with every symbol assigned; `None` on a zero inverse.
    pub fn eval_mod(&self, point: &HashMap<Var, u64>, p: u64) -> Option<u64> {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = c.mod_p(p)?;
            for &(v, e) in m.factors() {
                let x = *point.get(&v).expect("evaluation point misses a symbol");
                let base = if e < 0 {
                    if x == 0 {
                        return None;
                    }
                    modp::inv(x, p)
                } else {
                    x
                };
                t = modp::mul(t, modp::pow(base, e.unsigned_abs() as u64, p), p);
            }
            acc = modp::add(acc, t, p);
        }
        Some(acc)
    }

    /// Image as a dense univariate polynomial in `v` modulo `p`, every other
    /// symbol evaluated at `point`.
    pub fn univariate_mod(&self, v: Var, point: &HashMap<Var, u64>, p: u64) -> Option<Vec<u64>> {
        let d = self.degree_in(v).max(0) as usize;
        let mut out = vec![0u64; d + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            let single = Poly::term(rest, c.clone());
            let val = single.eval_mod(point, p)?;
            out[e as usize] = modp::add(out[e as usize], val, p);
        }
        Some(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::int(c)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

macro_rules! poly_op {
    ($tr:ident, $m:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                Poly::$m(self, rhs)
            }
        }
    };
}

poly_op!(Add, add);
poly_op!(Sub, sub);
poly_op!(Mul, mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for p in iter {
            for (m, c) in p.terms {
                *acc.entry(m).or_insert_with(Rational::zero) += &c;
            }
        }
        Poly::from_map(acc)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| a.mul(&b))
    }
}
