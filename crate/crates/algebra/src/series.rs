//! Power series coefficients, index reversal and finite continued fractions.

use crate::error::AlgebraError;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::var::{Monomial, Var};

/// First `n` coefficients of `f` as a power series in `x`.
///
/// When the constant term of the denominator is a monomial the coefficients
/// are Laurent polynomials; otherwise they carry powers of it in their
/// denominators.
pub fn series_expand(f: &RatFunc, x: Var, n: usize) -> Result<Vec<RatFunc>, AlgebraError> {
    let num = f.num().coeffs_in(x);
    let den = f.den().coeffs_in(x);
    let d0 = den[0].clone();
    if d0.is_zero() {
        return Err(AlgebraError::ZeroConstantTerm);
    }
    let at = |v: &[Poly], i: usize| v.get(i).cloned().unwrap_or_else(Poly::zero);
    if let Some(inv) = d0.unit_inverse() {
        let mut c: Vec<Poly> = Vec::with_capacity(n);
        for t in 0..n {
            let mut acc = at(&num, t);
            for i in 1..den.len().min(t + 1) {
                acc = acc.sub(&den[i].mul(&c[t - i]));
            }
            c.push(acc.mul(&inv));
        }
        return Ok(c.iter().map(RatFunc::from_poly).collect());
    }
    // e_t = c_t * d0^(t+1) stays polynomial.
    let mut e: Vec<Poly> = Vec::with_capacity(n);
    let mut d0_pows = vec![Poly::one()];
    for t in 0..n {
        while d0_pows.len() <= t {
            let next = d0_pows.last().unwrap().mul(&d0);
            d0_pows.push(next);
        }
        let mut acc = at(&num, t).mul(&d0_pows[t]);
        for i in 1..den.len().min(t + 1) {
            acc = acc.sub(&den[i].mul(&e[t - i]).mul(&d0_pows[i - 1]));
        }
        e.push(acc);
    }
    e.into_iter().enumerate().map(|(t, p)| RatFunc::from_power_denominator(p, &d0, t as u32 + 1)).collect()
}

/// `x`-degree bookkeeping shared by the reversal checks.
fn degrees(f: &RatFunc, x: Var) -> (i32, i32) {
    (f.num().degree_in(x), f.den().degree_in(x))
}

/// Maps `f(x) = Σ_{n≥0} f_n x^n` to `Σ_{n≥1} f_{-n} x^n = -f(1/x)`, where the
/// sequence is extended to negative indices along its recurrence.
pub fn reverse_gf(f: &RatFunc, x: Var) -> Result<RatFunc, AlgebraError> {
    if f.is_zero() {
        return Ok(RatFunc::zero());
    }
    let (dn, dd) = degrees(f, x);
    if dn >= dd {
        return Err(AlgebraError::DegreeCondition { num: dn, den: dd });
    }
    if f.den().coeff_of(x, 0).is_zero() {
        return Err(AlgebraError::ZeroConstantTerm);
    }
    let flip = |p: &Poly, d: i32| {
        Poly::from_terms(p.terms().iter().map(|(m, c)| {
            let (e, rest) = m.split_off(x);
            (rest.mul(&Monomial::var_pow(x, d - e)), c.clone())
        }))
    };
    let num = flip(f.num(), dn).mul_monomial(&Monomial::var_pow(x, dd - dn)).neg();
    RatFunc::new(num, flip(f.den(), dd))
}

/// Evaluates `a0 / (d0 - a1 / (d1 - a2 / (... - ak / dk)))` bottom-up.
pub fn cf_eval(numerators: &[Poly], denominators: &[Poly]) -> Result<RatFunc, AlgebraError> {
    assert_eq!(numerators.len(), denominators.len(), "continued fraction data lengths differ");
    let k = denominators.len();
    if k == 0 {
        return Ok(RatFunc::zero());
    }
    let mut t = RatFunc::from_poly(&denominators[k - 1]);
    if t.is_zero() {
        return Err(AlgebraError::CfZeroDenominator(k - 1));
    }
    for i in (0..k - 1).rev() {
        let frac = RatFunc::from_poly(&numerators[i + 1]).div(&t)?;
        t = RatFunc::from_poly(&denominators[i]).sub(&frac);
        if t.is_zero() {
            return Err(AlgebraError::CfZeroDenominator(i));
        }
    }
    RatFunc::from_poly(&numerators[0]).div(&t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn x() -> Poly {
        Poly::var(Var::X)
    }

    fn ints(v: &[RatFunc]) -> Vec<i64> {
        v.iter().map(|c| c.constant_value().unwrap().to_i64().unwrap()).collect()
    }

    #[test]
    fn geometric() {
        let f = RatFunc::new(Poly::one(), Poly::one().sub(&x())).unwrap();
        assert_eq!(ints(&series_expand(&f, Var::X, 4).unwrap()), vec![1, 1, 1, 1]);
        let b0 = Poly::var(Var::b(0));
        let g = RatFunc::new(x(), &Poly::one() - &b0.mul(&x())).unwrap();
        let s = series_expand(&g, Var::X, 3).unwrap();
        assert_eq!(s[2].to_poly().unwrap(), b0);
    }

    #[test]
    fn pv_weights_k1() {
        let v0 = Poly::var(Var::v(0));
        let v1 = Poly::var(Var::v(1));
        let f = RatFunc::new(v1.mul(&x()), &Poly::one() - &v1.mul(&v0).mul(&x().pow(2))).unwrap();
        let s = series_expand(&f, Var::X, 4).unwrap();
        assert!(s[0].is_zero() && s[2].is_zero());
        assert_eq!(s[1].to_poly().unwrap(), v1);
        assert_eq!(s[3].to_poly().unwrap(), v1.pow(2).mul(&v0));
    }

    #[test]
    fn nonunit_constant_term() {
        let b0 = Poly::var(Var::b(0));
        let f = RatFunc::new(Poly::one(), b0.sub(&x())).unwrap();
        let s = series_expand(&f, Var::X, 3).unwrap();
        assert_eq!(s[2], RatFunc::new(Poly::one(), b0.pow(3)).unwrap());
        let bad = RatFunc::new(Poly::one(), x()).unwrap();
        assert_eq!(series_expand(&bad, Var::X, 2), Err(AlgebraError::ZeroConstantTerm));
    }

    #[test]
    fn reversal() {
        let f = RatFunc::new(x(), Poly::one().sub(&x().pow(2))).unwrap();
        let r = reverse_gf(&f, Var::X).unwrap();
        assert_eq!(ints(&series_expand(&r, Var::X, 5).unwrap()), vec![0, 1, 0, 1, 0]);
        assert_eq!(reverse_gf(&r, Var::X).unwrap(), f);
        let g = RatFunc::new(Poly::one(), Poly::one().sub(&x().pow(2))).unwrap();
        let rg = series_expand(&reverse_gf(&g, Var::X).unwrap(), Var::X, 3).unwrap();
        assert_eq!(ints(&rg), vec![0, 0, 1]);
        let h = RatFunc::new(x().pow(2), Poly::one().sub(&x())).unwrap();
        assert!(matches!(reverse_gf(&h, Var::X), Err(AlgebraError::DegreeCondition { .. })));
    }

    #[test]
    fn continued_fractions() {
        let b0 = Poly::var(Var::b(0));
        let one = cf_eval(&[Poly::one()], &[&Poly::one() - &b0.mul(&x())]).unwrap();
        assert_eq!(one, RatFunc::new(Poly::one(), &Poly::one() - &b0.mul(&x())).unwrap());
        let v = cf_eval(&[Poly::one(), x().pow(2)], &[Poly::one(), Poly::one()]).unwrap();
        assert_eq!(v, RatFunc::new(Poly::one(), Poly::one().sub(&x().pow(2))).unwrap());
        // -x / (x - 1/x)
        let n = cf_eval(&[x().neg(), Poly::one()], &[x(), x()]).unwrap();
        let s = series_expand(&n, Var::X, 5).unwrap();
        assert_eq!(ints(&s), vec![0, 0, 1, 0, 1]);
        let z = cf_eval(&[Poly::one(), Poly::one()], &[Poly::one(), Poly::zero()]);
        assert_eq!(z, Err(AlgebraError::CfZeroDenominator(1)));
        let half = cf_eval(&[Poly::one()], &[Poly::int(2)]).unwrap();
        assert_eq!(half.constant_value().unwrap(), Rational::new(1, 2));
    }
}
